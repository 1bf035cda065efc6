#include "bkf/filtration.hpp"
#include "bkf/orbits.hpp"
#include "bkf/qcomb.hpp"
#include "bkf/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace bkf;

namespace {

QPolynomial P(const char* s) { return QPolynomial::parse(s); }

void check_report_shape(const FiltrationReport& f, std::size_t space_dim) {
    for (std::size_t i = 1; i < f.subspace_dims.size(); ++i) CHECK(f.subspace_dims[i - 1] <= f.subspace_dims[i]);
    if (!f.subspace_dims.empty()) CHECK(f.subspace_dims.back() == space_dim);
    CHECK(f.jump_polynomial.eval(1) == static_cast<long>(space_dim));
    for (std::size_t n = 0; n < f.subspace_dims.size(); ++n) {
        long prev = n ? static_cast<long>(f.subspace_dims[n - 1]) : 0;
        CHECK(f.jump_polynomial.coefficient(static_cast<int>(n)) == static_cast<long>(f.subspace_dims[n]) - prev);
    }
}

}  // namespace

TEST_CASE("L-highest weight spaces") {
    RootSystem a3 = build_root_system("A", 3);
    auto v = build_irrep(a3, Weight({0, 1, 2}));
    CHECK(l_highest_space(v, Weight::zero(3), ParabolicSubset({1})).size() == 1);
    CHECK(l_highest_space(v, Weight::zero(3), ParabolicSubset::borel()).size() == weight_space(v, Weight::zero(3)).size());
    CHECK(l_highest_space(v, Weight({0, 1, 2}), ParabolicSubset::borel()).size() == 1);

    RootSystem g2 = build_root_system("G2", 2);
    auto adj = build_irrep(g2, Weight({0, 1}));
    CHECK(l_highest_space(adj, Weight::zero(2), ParabolicSubset({1})).size() == 1);
    CHECK(l_highest_space(adj, Weight::zero(2), ParabolicSubset({0})).size() == 1);
    CHECK(l_highest_space(adj, Weight::zero(2), ParabolicSubset::full(2)).empty());
}

TEST_CASE("jump polynomials of the worked examples") {
    // A3, [3,1]: both sides give q^3 here (the partition count of mu is
    // q^2 + 2q^3, see test_qcomb).
    RootSystem a3 = build_root_system("A", 3);
    ChevalleyAlgebra g(a3);
    auto v = build_irrep(a3, Weight({0, 1, 2}));
    const ParabolicSubset p({1});
    auto x = good_position_representative(g, weighted_dynkin(Partition({3, 1})));
    auto f = bk_jump_polynomial(g, v, x, Weight::zero(3), p);
    CHECK(f.jump_polynomial == P("q^3"));
    check_report_shape(f, 1);

    // Z = X_{a1} + X_{a2+a3} gives the same filtration.
    SparseVector z = g.x(RootVec({1, 0, 0})).coefficients + g.x(RootVec({0, 1, 1})).coefficients;
    CHECK(bk_jump_polynomial(g, v, g.make(z), Weight::zero(3), p) == f);

    RootSystem g2 = build_root_system("G2", 2);
    ChevalleyAlgebra gg(g2);
    auto adj = build_irrep(g2, Weight({0, 1}));
    auto sub = good_position_representative(gg, g2_subregular_labels());
    auto fs = bk_jump_polynomial(gg, adj, sub, Weight::zero(2), associated_parabolic(g2_subregular_labels()));
    CHECK(fs.jump_polynomial == P("q"));
    check_report_shape(fs, 1);

    RootSystem a1 = build_root_system("A", 1);
    ChevalleyAlgebra sl2(a1);
    auto v3 = build_irrep(a1, Weight({2}));
    auto f1 = bk_jump_polynomial(sl2, v3, principal_nilpotent(sl2), Weight({0}), ParabolicSubset::borel());
    CHECK(f1.jump_polynomial == P("q"));
    CHECK(f1.subspace_dims == std::vector<std::size_t>{0, 1});
}

TEST_CASE("non-nilpotent operators are rejected") {
    RootSystem a1 = build_root_system("A", 1);
    ChevalleyAlgebra g(a1);
    auto v = build_irrep(a1, Weight({2}));
    CHECK_THROWS_AS(bk_jump_polynomial(g, v, g.h(0), Weight({0}), ParabolicSubset::borel()), Error);
    SparseVector xy = g.x(RootVec({1})).coefficients + g.x(RootVec({-1})).coefficients;
    CHECK_THROWS_AS(bk_jump_polynomial(g, v, g.make(xy), Weight({0}), ParabolicSubset::borel()), Error);
}

TEST_CASE("Brylinski: principal nilpotent, Borel, dominant weights") {
    for (auto [t, n] : {std::pair{"A", 1}, {"A", 2}, {"B", 2}}) {
        RootSystem r = build_root_system(t, n);
        ChevalleyAlgebra g(r);
        auto x = principal_nilpotent(g);
        auto group = enumerate_weyl_group(r);
        for (const auto& mu : dominant_weights_up_to_dimension(r, 40)) {
            auto v = build_irrep(r, mu);
            auto xm = apply_element(g, v, x);
            for (const auto& [lam, m] : dominant_character(r, mu)) {
                auto f = bk_jump_polynomial(v, xm, lam, ParabolicSubset::borel());
                check_report_shape(f, weight_space(v, lam).size());
                CHECK(f.jump_polynomial == lusztig_q_analog(r, group, mu, lam, ParabolicSubset::borel()));
            }
        }
    }
}

TEST_CASE("independence of the good-position representative") {
    // Several distinct validated representatives with the same labels.
    struct Case {
        const char* type;
        int rank;
        DynkinLabels labels;
        std::vector<Weight> mus;
    };
    const Case cases[] = {
        {"A", 3, weighted_dynkin(Partition({3, 1})), {Weight({0, 1, 2}), Weight({1, 0, 1}), Weight({2, 0, 0})}},
        {"A", 3, weighted_dynkin(Partition({2, 2})), {Weight({1, 0, 1}), Weight({0, 2, 0})}},
        {"A", 4, weighted_dynkin(Partition({3, 1, 1})), {Weight({1, 0, 0, 1}), Weight({0, 1, 1, 0})}},
        {"G2", 2, g2_subregular_labels(), {Weight({0, 1}), Weight({2, 0}), Weight({1, 0})}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.type);
        RootSystem r = build_root_system(c.type, c.rank);
        ChevalleyAlgebra g(r);
        const ParabolicSubset p = associated_parabolic(c.labels);
        std::vector<AlgebraElement> reps{good_position_representative(g, c.labels)};
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> coeff(-6, 6);
        while (reps.size() < 4) {
            SparseVector s;
            for (auto k : degree_two_roots(r, c.labels)) s.add(static_cast<Key>(g.x_index(k)), Rational(coeff(rng)));
            auto x = g.make(std::move(s));
            if (is_good_position(g, c.labels, x) && std::find(reps.begin(), reps.end(), x) == reps.end())
                reps.push_back(x);
        }
        for (const auto& mu : c.mus) {
            auto v = build_irrep(r, mu);
            for (const auto& [lam, m] : full_character(r, mu)) {
                if (!r.is_p_dominant(lam, p)) continue;
                auto base = bk_jump_polynomial(g, v, reps[0], lam, p);
                for (std::size_t k = 1; k < reps.size(); ++k) CHECK(bk_jump_polynomial(g, v, reps[k], lam, p) == base);
            }
        }
    }
}
