#include "bkf/qcomb.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace bkf;

namespace {

QPolynomial P(const char* s) { return QPolynomial::parse(s); }

Weight from_root(const RootSystem& r, std::vector<int> c) { return r.to_weight(RootVec(std::move(c))); }

}  // namespace

TEST_CASE("q-partition function examples") {
    RootSystem a3 = build_root_system("A", 3);
    ParabolicSubset p({1});
    CHECK(q_partition(a3, Weight::zero(3), p) == QPolynomial(1));
    CHECK(q_partition(a3, Weight::zero(3), ParabolicSubset::borel()) == QPolynomial(1));

    // mu = a1 + 2a2 + 2a3 with nilradical {a1, a3, a1+a2, a2+a3, a1+a2+a3}:
    // (a1+a2+a3)+(a2+a3), then a1+2(a2+a3) and (a1+a2)+(a2+a3)+a3.
    const Weight mu({0, 1, 2});
    CHECK(q_partition(a3, mu, p) == P("q^2 + 2*q^3"));
    CHECK(q_partition(a3, mu, p) == oracle::q_partition(a3, mu.coords, {1}));
    CHECK(q_partition(a3, from_root(a3, {0, 2, 2}), p) == P("q^2"));
    CHECK(q_partition(a3, from_root(a3, {1, 0, 2}), p) == P("q^3"));
    // Outside the span of the nilradical, and outside the root lattice.
    CHECK(q_partition(a3, from_root(a3, {0, 1, 0}), p).is_zero());
    CHECK(q_partition(a3, Weight({1, 0, 0}), p).is_zero());
    CHECK(q_partition(a3, from_root(a3, {-1, 0, 0}), ParabolicSubset::borel()).is_zero());

    RootSystem a2 = build_root_system("A", 2);
    CHECK(q_partition(a2, from_root(a2, {1, 1}), ParabolicSubset::borel()) == P("q + q^2"));

    RootSystem g2 = build_root_system("G2", 2);
    ParabolicSubset pb({1});
    const Weight adj({0, 1});
    CHECK(q_partition(g2, adj, pb) == P("q + q^2 + q^3"));
    CHECK(q_partition(g2, shifted_action(WeylElement::from_word(g2, {0}), adj), pb) == P("q^2"));
    CHECK(q_partition(g2, shifted_action(WeylElement::from_word(g2, {1}), adj), pb) == P("q^3"));
}

TEST_CASE("q-partition function against exhaustive enumeration") {
    struct Case {
        const char* type;
        int rank;
        std::vector<int> levi;
        int box;
    };
    const Case cases[] = {{"A", 2, {}, 4},  {"A", 3, {}, 3},  {"A", 3, {1}, 3}, {"B", 2, {}, 4},
                          {"C", 3, {0}, 2}, {"G2", 2, {}, 4}, {"G2", 2, {0}, 4}, {"B", 3, {2}, 2}};
    for (const auto& c : cases) {
        CAPTURE(c.type);
        RootSystem r = build_root_system(c.type, c.rank);
        ParabolicSubset p(c.levi);
        std::vector<int> x(static_cast<std::size_t>(c.rank), 0);
        while (true) {
            Weight g = r.to_weight(RootVec(x));
            QPolynomial got = q_partition(r, g, p);
            CHECK(got == oracle::q_partition(r, g.coords, c.levi));
            // q = 1 gives the ordinary (parabolic) Kostant count
            long plain = 0;
            for (long k : oracle::kostant(oracle::nilradical(r, c.levi), x)) plain += k;
            CHECK(got.eval(1) == plain);
            int i = 0;
            while (i < c.rank && ++x[i] > c.box) x[i++] = 0;
            if (i == c.rank) break;
        }
    }
}

TEST_CASE("q-partition table on a box") {
    RootSystem b2 = build_root_system("B", 2);
    QPartitionTable t(b2, ParabolicSubset::borel(), RootVec({3, 4}));
    CHECK(t.at(RootVec({0, 0})) == QPolynomial(1));
    CHECK(t.at(RootVec({1, 2})) == oracle::q_partition(b2, b2.to_weight(RootVec({1, 2})).coords, {}));
    CHECK(t.at(RootVec({4, 0})).is_zero());
    CHECK(t.at(RootVec({-1, 0})).is_zero());
}

TEST_CASE("Lusztig q-analog examples") {
    RootSystem a3 = build_root_system("A", 3);
    const Weight mu({0, 1, 2});
    // The three shifted translates of mu in the span give
    // (q^2 + 2q^3) - q^2 - q^3.
    CHECK(lusztig_q_analog(a3, mu, Weight::zero(3), ParabolicSubset({1})) == P("q^3"));
    CHECK(lusztig_q_analog(a3, mu, Weight::zero(3), ParabolicSubset({1})) ==
          oracle::lusztig(a3, mu.coords, {0, 0, 0}, {1}));

    RootSystem g2 = build_root_system("G2", 2);
    CHECK(lusztig_q_analog(g2, Weight({0, 1}), Weight::zero(2), ParabolicSubset({1})) == P("q"));
    CHECK(lusztig_q_analog(g2, Weight({0, 1}), Weight::zero(2), ParabolicSubset({0})) == P("q"));

    RootSystem a2 = build_root_system("A", 2);
    CHECK(lusztig_q_analog(a2, Weight({1, 1}), Weight::zero(2), ParabolicSubset::borel()) == P("q + q^2"));
    CHECK(oracle::lusztig(a2, {1, 1}, {0, 0}, {}) == P("q + q^2"));

    for (const char* t : {"A", "B", "C"})
        for (int n = 2; n <= 3; ++n) {
            RootSystem r = build_root_system(t, n);
            for (const auto& mu2 : {Weight({1, 0, 2}), Weight({0, 2, 1})}) {
                Weight m(std::vector<int>(mu2.coords.begin(), mu2.coords.begin() + n));
                CHECK(lusztig_q_analog(r, m, m, ParabolicSubset::borel()) == QPolynomial(1));
            }
        }
    // lambda not below mu
    CHECK(lusztig_q_analog(a2, Weight({1, 0}), Weight({2, 2}), ParabolicSubset::borel()).is_zero());
    // mu - lambda outside the root lattice
    CHECK(lusztig_q_analog(a2, Weight({1, 1}), Weight({1, 0}), ParabolicSubset::borel()).is_zero());
}

TEST_CASE("Lusztig q-analog against the brute-force Weyl sum") {
    struct Case {
        const char* type;
        int rank;
        std::vector<int> levi;
    };
    for (const auto& c : {Case{"A", 2, {}}, Case{"A", 3, {1}}, Case{"B", 2, {}}, Case{"B", 2, {1}},
                          Case{"G2", 2, {}}, Case{"C", 3, {2}}}) {
        CAPTURE(c.type);
        RootSystem r = build_root_system(c.type, c.rank);
        ParabolicSubset p(c.levi);
        auto group = enumerate_weyl_group(r);
        for (const Weight& mu : {r.rho(), r.highest_root().weight}) {
            for (const auto& [lam, m] : full_character(r, mu)) {
                QPolynomial serial = lusztig_q_analog(r, group, mu, lam, p, Execution::Serial);
                CHECK(serial == lusztig_q_analog(r, group, mu, lam, p, Execution::Parallel));
                CHECK(serial == oracle::lusztig(r, mu.coords, lam.coords, c.levi));
            }
        }
    }
}

TEST_CASE("Kostant multiplicity consistency and positivity") {
    for (auto [t, n] : {std::pair{"A", 2}, {"A", 3}, {"B", 2}, {"C", 3}, {"G2", 2}}) {
        RootSystem r = build_root_system(t, n);
        auto group = enumerate_weyl_group(r);
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (int sweep = 0; sweep < 6; ++sweep) {
            c[static_cast<std::size_t>(sweep % n)] += 1;
            Weight mu(c);
            BigInt total = 0;
            for (const auto& [lam, m] : full_character(r, mu)) {
                total += m;
                CHECK(freudenthal_multiplicity(r, mu, lam) == m);
                if (!r.is_dominant(lam)) continue;
                QPolynomial q = lusztig_q_analog(r, group, mu, lam, ParabolicSubset::borel());
                CHECK(q.eval(1) == m);
                CHECK(q.has_nonnegative_coefficients());
            }
            CHECK(total == weyl_dimension(r, mu));
            CHECK(weyl_dimension(r, mu) == oracle::weyl_dimension(r, c));
        }
    }
}

TEST_CASE("Freudenthal and Weyl dimension examples") {
    RootSystem a1 = build_root_system("A", 1);
    RootSystem a2 = build_root_system("A", 2);
    RootSystem a3 = build_root_system("A", 3);
    CHECK(freudenthal_multiplicity(a3, Weight({0, 1, 2}), Weight({0, 1, 2})) == 1);
    CHECK(freudenthal_multiplicity(a1, Weight({2}), Weight({0})) == 1);
    CHECK(freudenthal_multiplicity(a2, Weight({1, 1}), Weight({0, 0})) == 2);
    CHECK(freudenthal_multiplicity(a2, Weight({1, 1}), Weight({1, 0})) == 0);
    CHECK(weyl_dimension(a3, Weight::zero(3)) == 1);
    CHECK(weyl_dimension(a3, Weight({1, 0, 0})) == 4);
    CHECK(weyl_dimension(a3, Weight({0, 1, 2})) == 45);
    CHECK(weyl_dimension(build_root_system("G2", 2), Weight({0, 1})) == 14);
    CHECK(weyl_dimension(build_root_system("F4", 4), build_root_system("F4", 4).highest_root().weight) == 52);
    CHECK(weyl_orbit(a2, Weight({1, 0})).size() == 3);
    CHECK(weyl_orbit(a2, Weight({1, 1})).size() == 6);
}
