#include "bkf/chevalley.hpp"
#include "bkf/module.hpp"
#include "bkf/orbits.hpp"
#include "bkf/qcomb.hpp"

#include <doctest.h>

using namespace bkf;

namespace {

void check_against_character(const RootSystem& r, const ExplicitModule& v) {
    check_module(r, v);
    CHECK(BigInt(static_cast<unsigned long>(v.dim())) == weyl_dimension(r, v.highest_weight));
    for (const auto& [lam, m] : full_character(r, v.highest_weight))
        CHECK(BigInt(static_cast<unsigned long>(weight_space(v, lam).size())) == m);
}

}  // namespace

TEST_CASE("small modules") {
    RootSystem a1 = build_root_system("A", 1);
    auto adj = build_irrep(a1, Weight({2}));
    CHECK(adj.dim() == 3);
    check_against_character(a1, adj);

    RootSystem g2 = build_root_system("G2", 2);
    auto g2adj = build_irrep(g2, Weight({0, 1}));
    CHECK(g2adj.dim() == 14);
    CHECK(weight_space(g2adj, Weight({0, 0})).size() == 2);
    CHECK(weight_space(g2adj, Weight({0, 1})).size() == 1);
    CHECK(weight_space(g2adj, Weight({5, 5})).empty());

    RootSystem a3 = build_root_system("A", 3);
    auto v = build_irrep(a3, Weight({0, 1, 2}));
    CHECK(v.dim() == 45);
    check_against_character(a3, v);
}

TEST_CASE("module invariants across types") {
    struct Case {
        const char* type;
        int rank;
        std::vector<int> mu;
    };
    for (const auto& c : {Case{"A", 2, {2, 1}}, Case{"A", 4, {1, 0, 1, 0}}, Case{"B", 2, {1, 1}},
                          Case{"B", 3, {0, 0, 1}}, Case{"C", 3, {1, 0, 1}}, Case{"D", 4, {0, 1, 0, 0}},
                          Case{"G2", 2, {1, 1}}, Case{"F4", 4, {1, 0, 0, 0}}, Case{"F4", 4, {0, 0, 0, 1}}}) {
        CAPTURE(c.type);
        RootSystem r = build_root_system(c.type, c.rank);
        check_against_character(r, build_irrep(r, Weight(c.mu)));
    }
}

TEST_CASE("recursive and tensor constructions agree") {
    struct Case {
        const char* type;
        int rank;
        std::vector<int> mu;
    };
    for (const auto& c : {Case{"A", 1, {3}}, Case{"A", 2, {1, 1}}, Case{"A", 2, {2, 0}}, Case{"A", 3, {1, 0, 1}},
                          Case{"B", 2, {0, 2}}, Case{"C", 2, {2, 0}}, Case{"G2", 2, {0, 1}}, Case{"G2", 2, {1, 0}}}) {
        CAPTURE(c.type);
        RootSystem r = build_root_system(c.type, c.rank);
        Weight mu(c.mu);
        auto a = build_irrep(r, mu, {}, IrrepMethod::Recursive);
        auto b = build_irrep(r, mu, {}, IrrepMethod::TensorAmbient);
        check_against_character(r, b);
        CHECK(b.ambient_dimension > 0);
        CHECK(b.ambient_basis.size() == b.dim());
        // Same module up to isomorphism: the principal nilpotent has the same
        // Jordan type on both (ranks of all powers agree).
        ChevalleyAlgebra g(r);
        auto x = principal_nilpotent(g);
        SparseMatrix ma = apply_element(g, a, x), mb = apply_element(g, b, x);
        SparseMatrix pa = ma, pb = mb;
        for (int k = 1; k <= 12; ++k) {
            std::vector<SparseVector> ca, cb;
            for (std::size_t j = 0; j < pa.cols(); ++j) ca.push_back(pa.col(j));
            for (std::size_t j = 0; j < pb.cols(); ++j) cb.push_back(pb.col(j));
            CHECK(rank(ca) == rank(cb));
            pa = pa * ma, pb = pb * mb;
        }
    }
}

TEST_CASE("construction is deterministic") {
    RootSystem b2 = build_root_system("B", 2);
    auto a = build_irrep(b2, Weight({1, 2})), b = build_irrep(b2, Weight({1, 2}));
    CHECK(a.basis_weights == b.basis_weights);
    for (int i = 0; i < 2; ++i) {
        CHECK(a.e[i] == b.e[i]);
        CHECK(a.f[i] == b.f[i]);
    }
}

TEST_CASE("input validation and caps") {
    RootSystem a2 = build_root_system("A", 2);
    CHECK_THROWS_AS(build_irrep(a2, Weight({-1, 1})), Error);
    CHECK_THROWS_AS(build_irrep(a2, Weight({1})), Error);
    Caps small;
    small.max_module_dim = 20;
    CHECK_THROWS_AS(build_irrep(a2, Weight({2, 2}), small), CapExceeded);
    Caps tiny_ambient;
    tiny_ambient.max_ambient_dim = 20;  // 3^3 = 27 is needed
    CHECK_THROWS_AS(build_irrep(a2, Weight({1, 1}), tiny_ambient, IrrepMethod::TensorAmbient), CapExceeded);
    // Outside the root lattice the tensor route has no ambient outside type A.
    RootSystem b2 = build_root_system("B", 2);
    CHECK_THROWS_AS(build_irrep(b2, Weight({0, 1}), {}, IrrepMethod::TensorAmbient), Error);
    CHECK(build_irrep(b2, Weight({0, 1})).dim() == 4);
}

TEST_CASE("root vectors act through brackets") {
    RootSystem a3 = build_root_system("A", 3);
    ChevalleyAlgebra g(a3);
    auto v = build_irrep(a3, Weight({1, 0, 0}));
    // On the defining module, X_{a2+a3} is +-E_{2,4}: it maps the weight
    // e4 = w1 - a1 - a2 - a3 to e2 = w1 - a1 and kills everything else.
    auto m = apply_element(g, v, g.x(RootVec({0, 1, 1})));
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, c] : m.col(j)) {
            ++nonzero;
            CHECK(abs(c) == 1);
            CHECK(v.basis_weights[j] == Weight({0, 0, -1}));
            CHECK(v.basis_weights[static_cast<std::size_t>(i)] == Weight({-1, 1, 0}));
        }
    CHECK(nonzero == 1);

    // h acts diagonally by the weight pairing
    auto h = apply_element(g, v, g.h(1));
    for (std::size_t j = 0; j < v.dim(); ++j) CHECK(h.at(j, j) == v.basis_weights[j][1]);

    // representation property on basis pairs of a larger module
    RootSystem g2 = build_root_system("G2", 2);
    ChevalleyAlgebra gg(g2);
    auto w = build_irrep(g2, Weight({1, 0}));
    ModuleAction act(gg, w);
    for (std::size_t a = 0; a < gg.dim(); ++a)
        for (std::size_t b = a; b < gg.dim(); b += 3)
            CHECK(act.apply(gg.bracket(gg.basis(a), gg.basis(b))) ==
                  commutator(act.basis_matrix(a), act.basis_matrix(b)));
}
