#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "bjpc/ocs.hpp"
#include "bjpc/reference_tables.hpp"
#include "bjpc/rng.hpp"

using namespace bjpc;
using Catch::Approx;

TEST_CASE("single-block enumeration produces one scheme per position") {
    const auto schemes = enumerate_schemes(25, 20, SchemeFamily::SingleBlock, 5);
    CHECK(schemes.size() == 19);
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        int blocks = 0;
        for (int j = 0; j < 19; ++j) {
            if (schemes[i].removals[j] > 0) {
                ++blocks;
                CHECK(schemes[i].removals[j] == 5);
                CHECK(j == static_cast<int>(i));
            }
        }
        CHECK(blocks == 1);
    }
    CHECK_THROWS_AS(enumerate_schemes(25, 20, SchemeFamily::SingleBlock, 6),
                    SchemeValidationError);
}

TEST_CASE("exhaustive enumeration lists every admissible plan") {
    const auto schemes = enumerate_schemes(5, 3, SchemeFamily::Exhaustive);
    CHECK(schemes.size() == 6);
    std::set<std::vector<int>> seen;
    for (const auto& s : schemes) {
        CHECK(s.removals.size() == 2);
        CHECK(s.removals[0] + s.removals[1] <= 2);
        seen.insert(s.removals);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("exhaustive enumeration refuses oversized families with the count") {
    CHECK_THROWS_WITH(enumerate_schemes(60, 30, SchemeFamily::Exhaustive),
                      Catch::Matchers::ContainsSubstring("above cap"));
}

TEST_CASE("expected volume reproduces the published design table entries") {
    std::vector<int> front(19, 0);
    front[0] = 5;
    const auto res = expected_volume(validate_scheme(25, 20, front),
                                     WeibullParams(0.5, 0.5, 1.0), Probability(0.10), 5000,
                                     RngStream(11, 0));
    // published values carry the 8x area convention
    CHECK(8.0 * res.mean == Approx(12.463).epsilon(0.05));

    std::vector<int> back(19, 0);
    back[18] = 5;
    const auto res2 = expected_volume(validate_scheme(25, 20, back),
                                      WeibullParams(2.0, 0.5, 1.0), Probability(0.10), 5000,
                                      RngStream(11, 1));
    CHECK(8.0 * res2.mean == Approx(89.061).epsilon(0.07));
}

TEST_CASE("two seeds agree within Monte Carlo error") {
    std::vector<int> front(19, 0);
    front[0] = 5;
    const auto scheme = validate_scheme(25, 20, front);
    const WeibullParams params(0.5, 0.5, 1.0);
    const auto a = expected_volume(scheme, params, Probability(0.10), 3000, RngStream(21, 0));
    const auto b = expected_volume(scheme, params, Probability(0.10), 3000, RngStream(22, 0));
    const double combined = std::hypot(a.std_error, b.std_error);
    CHECK(std::fabs(a.mean - b.mean) < 4.0 * combined);
}

TEST_CASE("search ranks the front-loaded scheme first and the back-loaded last") {
    const auto ranked = search_optimum(25, 20, WeibullParams(0.5, 0.5, 1.0), Probability(0.10),
                                       SchemeFamily::SingleBlock, 5, 1500, RngStream(5150, 0),
                                       201, 2000);
    REQUIRE(ranked.size() == 19);
    CHECK(ranked.front().scheme.removals[0] == 5);
    CHECK(ranked.back().scheme.removals[18] == 5);
    for (std::size_t i = 1; i < ranked.size(); ++i)
        CHECK(ranked[i - 1].expected_volume <= ranked[i].expected_volume);
}

TEST_CASE("rankings are reproducible for a fixed seed") {
    const auto a = search_optimum(10, 5, WeibullParams(1.0, 0.5, 1.0), Probability(0.10),
                                  SchemeFamily::SingleBlock, 2, 400, RngStream(808, 3), 101, 400);
    const auto b = search_optimum(10, 5, WeibullParams(1.0, 0.5, 1.0), Probability(0.10),
                                  SchemeFamily::SingleBlock, 2, 400, RngStream(808, 3), 101, 400);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].scheme.removals == b[i].scheme.removals);
        CHECK(a[i].expected_volume == b[i].expected_volume);
        CHECK(a[i].etot == b[i].etot);
    }
}
