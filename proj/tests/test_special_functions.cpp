#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bjpc/special_functions.hpp"

using namespace bjpc;
using Catch::Approx;

TEST_CASE("Probability rejects values outside the open unit interval") {
    CHECK_THROWS_AS(Probability(0.0), std::domain_error);
    CHECK_THROWS_AS(Probability(1.0), std::domain_error);
    CHECK_THROWS_AS(Probability(-0.2), std::domain_error);
    CHECK(Probability(0.5).value() == 0.5);
}

TEST_CASE("ln_gamma matches known values") {
    CHECK(ln_gamma(1.0) == Approx(0.0).margin(1e-14));
    CHECK(ln_gamma(0.5) == Approx(0.5723649429247001).epsilon(1e-12));
    CHECK(ln_gamma(10.0) == Approx(12.801827480081469).epsilon(1e-12));
    CHECK(ln_gamma(1e-3) == Approx(6.907178885383853).epsilon(1e-12));
    CHECK(ln_gamma(1e6) == Approx(12815504.569147611).epsilon(1e-12));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.0), std::domain_error);
}

TEST_CASE("ln_gamma satisfies the recurrence across the working range") {
    for (double x : {1e-3, 0.1, 0.7, 1.5, 10.0, 123.4, 1e4, 1e6}) {
        CHECK(ln_gamma(x + 1.0) == Approx(ln_gamma(x) + std::log(x)).epsilon(1e-12));
    }
}

TEST_CASE("chi-square quantiles, upper-tail convention") {
    // chi2 with 2 dof is Exp(1/2); upper-median is 2 ln 2
    CHECK(chi2_quantile(Probability(0.5), 2.0) == Approx(2.0 * std::log(2.0)).margin(1e-10));
    CHECK(chi2_quantile(Probability(0.05), 40.0) == Approx(55.75847927888704).margin(1e-9));
    CHECK(chi2_quantile(Probability(0.95), 40.0) == Approx(26.50930319669311).margin(1e-9));
    CHECK(chi2_quantile(Probability(0.001), 10.0) == Approx(29.58829844507442).margin(1e-9));
    CHECK_THROWS_AS(chi2_quantile(Probability(0.5), 0.0), std::domain_error);
}

TEST_CASE("F quantiles, upper-tail convention") {
    CHECK(f_quantile(Probability(0.5), 2.0, 2.0) == Approx(1.0).margin(1e-10));
    CHECK(f_quantile(Probability(0.05), 28.0, 2.0) == Approx(19.460033268877968).margin(1e-7));
    CHECK(f_quantile(Probability(0.3), 5.0, 7.0) == Approx(1.5054733793133426).margin(1e-9));
}

TEST_CASE("F reciprocal identity") {
    const std::pair<double, double> dof_pairs[] = {{2.0, 2.0}, {28.0, 2.0}, {10.0, 40.0}, {38.0, 2.0}};
    for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
        for (auto [d1, d2] : dof_pairs) {
            const double q = f_quantile(Probability(p), d1, d2);
            const double r = f_quantile(Probability(1.0 - p), d2, d1);
            CHECK(q == Approx(1.0 / r).margin(1e-9 * std::max(1.0, q)));
        }
    }
}

TEST_CASE("standard normal quantile, lower-tail convention") {
    CHECK(std_normal_quantile(Probability(0.5)) == Approx(0.0).margin(1e-12));
    CHECK(std_normal_quantile(Probability(0.95)) == Approx(1.6448536269514722).margin(1e-10));
    CHECK(std_normal_quantile(Probability(0.05)) ==
          Approx(-std_normal_quantile(Probability(0.95))).margin(1e-10));
}

TEST_CASE("quantile-CDF round trips across the p and dof grids") {
    const double ps[] = {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999};
    const double dofs[] = {1.0, 2.0, 10.0, 40.0, 100.0};
    for (double p : ps) {
        CHECK(std_normal_cdf(std_normal_quantile(Probability(p))) == Approx(p).margin(1e-8));
        for (double d : dofs) {
            const double q = chi2_quantile(Probability(p), d);
            CHECK(1.0 - chi2_cdf(q, d) == Approx(p).margin(1e-8));
            for (double d2 : dofs) {
                const double qf = f_quantile(Probability(p), d, d2);
                CHECK(1.0 - f_cdf(qf, d, d2) == Approx(p).margin(1e-8));
            }
        }
    }
}

TEST_CASE("quantiles are strictly decreasing in the upper-tail probability") {
    const double ps[] = {0.01, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
    double prev_chi = std::numeric_limits<double>::infinity();
    double prev_f = std::numeric_limits<double>::infinity();
    for (double p : ps) {
        const double qc = chi2_quantile(Probability(p), 17.0);
        const double qf = f_quantile(Probability(p), 28.0, 2.0);
        CHECK(qc < prev_chi);
        CHECK(qf < prev_f);
        prev_chi = qc;
        prev_f = qf;
    }
}

TEST_CASE("d1 * F(p, d1, d2) approaches the chi-square quantile as d2 grows") {
    for (double p : {0.05, 0.5, 0.95}) {
        for (double d1 : {2.0, 10.0, 38.0}) {
            const double lhs = d1 * f_quantile(Probability(p), d1, 1e6);
            const double rhs = chi2_quantile(Probability(p), d1);
            CHECK(lhs == Approx(rhs).epsilon(1e-3));
        }
    }
}
