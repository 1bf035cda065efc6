#include "bkf/io.hpp"
#include "bkf/verify.hpp"

#include <doctest.h>

using namespace bkf;

TEST_CASE("polynomial JSON") {
    QPolynomial p = QPolynomial::parse("-1 + 2*q^2 + q^3");
    auto j = to_json(p);
    CHECK(j.dump() == R"({"0":-1,"2":2,"3":1})");
    CHECK(polynomial_from_json(j) == p);
    CHECK(to_json(QPolynomial()).dump() == "{}");
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"x":1})")), Error);
}

TEST_CASE("filtration JSON") {
    FiltrationReport f{{0, 1, 1, 3}, QPolynomial::parse("q + 2*q^3")};
    auto j = to_json(f);
    CHECK(j.dump() == R"({"dims":[0,1,1,3],"r":{"1":1,"3":2}})");
    CHECK(filtration_from_json(j) == f);
}

TEST_CASE("reports survive JSON and text round trips and encode the same data") {
    std::vector<VerificationReport> reports;
    RootSystem a3 = build_root_system("A", 3);
    reports.push_back(verify_theorem(a3, Weight({0, 1, 2}), Weight::zero(3), Partition({3, 1})));
    reports.push_back(verify_theorem(a3, Weight({1, 0, 1}), Weight({-1, 1, -1}), Partition({2, 2})));
    RootSystem g2 = build_root_system("G2", 2);
    reports.push_back(verify_theorem(g2, Weight({1, 0}), Weight({1, 0}), PrincipalOrbit{}));
    reports.push_back(verify_theorem(g2, Weight({0, 1}), Weight::zero(2), SubregularG2{}));
    for (const auto& rep : reports) {
        auto j = to_json(rep);
        CHECK(report_from_json(j) == rep);
        CHECK(report_from_json(nlohmann::json::parse(j.dump())) == rep);
        auto text = to_text(rep);
        CHECK(report_from_text(text) == rep);
        CHECK(to_json(report_from_text(text)) == j);
    }
    // flat object, 1-based parabolic indices
    auto j = to_json(reports[0]);
    CHECK(j["parabolic"] == nlohmann::json::array({2}));
    CHECK(j["r"] == nlohmann::json::parse(R"({"3":1})"));
    CHECK(j["mu"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["certificate"] == "PCharacter");
}

TEST_CASE("integer lists") {
    CHECK(parse_int_list("1,0,-2") == std::vector<int>{1, 0, -2});
    CHECK(parse_int_list(" 3 , 4 ") == std::vector<int>{3, 4});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("1,,2"), Error);
    CHECK_THROWS_AS(parse_int_list("1,a"), Error);
    CHECK(join_ints({1, -2, 3}) == "1,-2,3");
}
