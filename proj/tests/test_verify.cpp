#include "bkf/verify.hpp"
#include "bkf/height.hpp"
#include "bkf/qcomb.hpp"

#include <doctest.h>

using namespace bkf;

namespace {

QPolynomial P(const char* s) { return QPolynomial::parse(s); }

}  // namespace

TEST_CASE("vanishing certificates") {
    RootSystem a3 = build_root_system("A", 3);
    const ParabolicSubset p2({1});
    CHECK(vanishing_certificate(a3, Weight::zero(3), p2).verdict == Verdict::PCharacter);
    CHECK(vanishing_certificate(a3, Weight::zero(3), ParabolicSubset::borel()).verdict == Verdict::PCharacter);
    CHECK(vanishing_certificate(a3, Weight({2, 0, 1}), p2).verdict == Verdict::PCharacter);
    CHECK(vanishing_certificate(a3, Weight({1, 1, 0}), p2).verdict == Verdict::MinimalParabolicDominant);
    CHECK(vanishing_certificate(a3, Weight({1, 1, 1}), ParabolicSubset({0, 1})).verdict ==
          Verdict::TypeARegularDominant);
    CHECK(vanishing_certificate(a3, Weight({2, 1, 0}), ParabolicSubset::borel()).verdict == Verdict::BorelDominant);
    // not dominant, cht = 0
    CHECK(vanishing_certificate(a3, Weight({-1, 2, 0}), ParabolicSubset::borel()).verdict == Verdict::ChtZeroBorel);
    CHECK(vanishing_certificate(a3, Weight({-2, 0, 0}), ParabolicSubset::borel()).verdict == Verdict::Unknown);
    // lambda = nu - 2 rho_P with nu P-regular dominant: nu = (0,1,0) + 2 alpha_2 in weight terms
    const ParabolicSubset p12({0, 1});
    Weight lam = Weight({1, 1, 1}) - a3.two_rho_p(p12);
    CHECK(vanishing_certificate(a3, lam, p12).verdict == Verdict::MuMinusTwoRhoP);

    RootSystem b3 = build_root_system("B", 3);
    // Outside type A a regular dominant weight with a non-minimal P has no rule.
    CHECK(vanishing_certificate(b3, Weight({1, 1, 1}), ParabolicSubset({0, 1})).verdict == Verdict::Unknown);
    CHECK(vanishing_certificate(b3, Weight({-1, 0, 0}), ParabolicSubset({0, 1})).verdict == Verdict::Unknown);

    for (auto v : {Verdict::PCharacter, Verdict::BorelDominant, Verdict::ChtZeroBorel, Verdict::MinimalParabolicDominant,
                   Verdict::MuMinusTwoRhoP, Verdict::TypeARegularDominant, Verdict::Unknown})
        CHECK(parse_verdict(to_string(v)) == v);
    CHECK_THROWS_AS(parse_verdict("Maybe"), Error);
}

TEST_CASE("certificates never fire on weights that do not satisfy their rule") {
    RootSystem c3 = build_root_system("C", 3);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                Weight lam({a, b, c});
                for (const auto& p : {ParabolicSubset::borel(), ParabolicSubset({1}), ParabolicSubset({0, 2})}) {
                    auto v = vanishing_certificate(c3, lam, p).verdict;
                    if (v == Verdict::BorelDominant) CHECK((p.is_borel() && c3.is_dominant(lam)));
                    if (v == Verdict::ChtZeroBorel) CHECK((p.is_borel() && cht(c3, lam) == 0));
                    if (v == Verdict::MinimalParabolicDominant) CHECK((p.size() == 1 && c3.is_dominant(lam)));
                    if (v == Verdict::PCharacter)
                        for (int i : p.simple_indices) CHECK(lam[i] == 0);
                    if (v == Verdict::TypeARegularDominant) CHECK(false);
                }
            }
}

TEST_CASE("end-to-end instances") {
    RootSystem a3 = build_root_system("A", 3);
    auto rep = verify_theorem(a3, Weight({0, 1, 2}), Weight::zero(3), Partition({3, 1}));
    CHECK(rep.parabolic == ParabolicSubset({1}));
    CHECK(rep.r == P("q^3"));
    CHECK(rep.m == P("q^3"));
    CHECK(rep.equal);
    CHECK(rep.certificate.verdict == Verdict::PCharacter);
    CHECK(rep.subspace_dims.back() == 1);

    RootSystem g2 = build_root_system("G2", 2);
    auto g = verify_theorem(g2, Weight({0, 1}), Weight::zero(2), SubregularG2{});
    CHECK(g.r == P("q"));
    CHECK(g.m == P("q"));
    CHECK(g.equal);
    CHECK(g.certificate.verdict == Verdict::PCharacter);

    RootSystem a2 = build_root_system("A", 2);
    for (const OrbitSpec& o : {OrbitSpec(PrincipalOrbit{}), OrbitSpec(Partition({3}))}) {
        auto p = verify_theorem(a2, Weight({1, 1}), Weight::zero(2), o);
        CHECK(p.r == P("q + q^2"));
        CHECK(p.m == P("q + q^2"));
        CHECK(p.equal);
    }

    CHECK_THROWS_AS(verify_theorem(a3, Weight({1, 0, 1}), Weight::zero(3), Partition({2, 1, 1})), Error);
    CHECK_THROWS_AS(verify_theorem(a3, Weight({1, 0, 1}), Weight::zero(3), SubregularG2{}), Error);
    CHECK_THROWS_AS(verify_theorem(a3, Weight({-1, 0, 1}), Weight::zero(3), Partition({4})), Error);
}

TEST_CASE("certified instances agree and have nonnegative m; uncertified ones are only reported") {
    std::size_t certified = 0, unknown = 0;
    for (int n = 3; n <= 4; ++n) {
        RootSystem r = build_root_system("A", n - 1);
        for (const auto& part : even_partitions(n)) {
            Verifier ver(r, part);
            for (const auto& mu : dominant_weights_up_to_dimension(r, 30)) {
                auto v = build_irrep(r, mu);
                for (const auto& [lam, m] : full_character(r, mu)) {
                    if (!r.is_p_dominant(lam, ver.parabolic())) continue;
                    auto rep = ver.run(v, lam);
                    CHECK(rep.equal == (rep.r == rep.m));
                    if (rep.certificate.verdict == Verdict::Unknown) {
                        ++unknown;
                        continue;
                    }
                    ++certified;
                    CHECK(rep.equal);
                    CHECK(rep.m.has_nonnegative_coefficients());
                }
            }
        }
    }
    CHECK(certified > 100);
    CHECK(unknown > 0);
}

TEST_CASE("sweep helpers") {
    RootSystem a2 = build_root_system("A", 2);
    auto mus = dominant_weights_up_to_dimension(a2, 10);
    CHECK(mus == std::vector<Weight>{Weight({0, 0}), Weight({0, 1}), Weight({1, 0}), Weight({0, 2}), Weight({2, 0}),
                                     Weight({1, 1}), Weight({0, 3}), Weight({3, 0})});
    for (std::size_t i = 1; i < mus.size(); ++i)
        CHECK(weyl_dimension(a2, mus[i - 1]) <= weyl_dimension(a2, mus[i]));
}
