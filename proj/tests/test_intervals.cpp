#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bjpc/estimate.hpp"
#include "bjpc/experiments.hpp"
#include "bjpc/intervals.hpp"
#include "bjpc/reference_tables.hpp"
#include "bjpc/rng.hpp"
#include "bjpc/simulate.hpp"

using namespace bjpc;
using Catch::Approx;

namespace {

double log_likelihood(const BjpcSample& s, double alpha, double l1, double l2) {
    const int k = s.scheme.k;
    double a_val = 0.0, sum_log = 0.0;
    for (int i = 0; i < k; ++i) {
        a_val += s.scheme.weight[i] * std::pow(s.w[i], alpha);
        sum_log += s.log_w[i];
    }
    return k * std::log(alpha) + s.k1() * std::log(l1) + s.k2() * std::log(l2) -
           (l1 + l2) * a_val + (alpha - 1.0) * sum_log;
}

}  // namespace

TEST_CASE("rate cross-entry of the information matrix is identically zero") {
    const auto& s = reference::scheme1_sample();
    const auto fit = fit_mle(s).fit;
    const Matrix3 info = observed_information(s, fit);
    CHECK(info(1, 2) == 0.0);
    CHECK(info(2, 1) == 0.0);
    CHECK(info(0, 1) == info(0, 2));  // shared shape-rate cross term
}

TEST_CASE("information entries match central finite differences of the log-likelihood") {
    const auto& s = reference::scheme2_sample();
    const auto fit = fit_mle(s).fit;
    const Matrix3 info = observed_information(s, fit);
    const double theta[3] = {fit.params.alpha, fit.params.lambda1, fit.params.lambda2};
    const double h = 1e-5;

    auto ll = [&](double a, double l1, double l2) { return log_likelihood(s, a, l1, l2); };
    auto at = [&](int i, double di, int j, double dj) {
        double p[3] = {theta[0], theta[1], theta[2]};
        p[i] += di;
        p[j] += dj;
        return ll(p[0], p[1], p[2]);
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            double second;
            if (i == j) {
                second = (at(i, h, i, 0) - 2.0 * at(i, 0, i, 0) + at(i, -h, i, 0)) / (h * h);
            } else {
                second = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) +
                          at(i, -h, j, -h)) /
                         (4.0 * h * h);
            }
            if (info(i, j) == 0.0) {
                CHECK(std::fabs(second) < 1e-3);  // stencil roundoff only
            } else {
                CHECK(-second == Approx(info(i, j)).epsilon(1e-4));
            }
        }
    }
}

TEST_CASE("information matrix is positive definite on simulated fits") {
    const auto scheme = validate_scheme(25, 20, [] {
        std::vector<int> r(19, 0);
        r[0] = 3;
        return r;
    }());
    const WeibullParams params(1.0, 0.5, 1.0);
    RngStream base(17, 4);
    int done = 0;
    for (long r = 0; done < 50; ++r) {
        RngStream rng = base.substream(r);
        const auto s = simulate_spacings(scheme, params, rng);
        if (s.k1() == 0 || s.k1() == scheme.k) continue;
        const auto fit = fit_mle(s).fit;
        CHECK_NOTHROW(invert_spd(observed_information(s, fit)));  // Cholesky succeeds
        ++done;
    }
}

TEST_CASE("asymptotic intervals reproduce the real-data tables") {
    const auto& s1 = reference::scheme1_sample();
    const auto ci1 = asymptotic_ci(s1, fit_mle(s1).fit, Probability(0.90));
    const auto& golden1 = reference::golden_ci(1);
    for (int p = 0; p < 3; ++p) {
        CHECK(ci1[p].lower == Approx(golden1.asymptotic[p][0]).margin(2e-3));
        CHECK(ci1[p].upper == Approx(golden1.asymptotic[p][1]).margin(2e-3));
    }
    CHECK(ci1[1].lower == 0.0);  // clamped at zero
    // half-width of the shape interval
    CHECK(0.5 * (ci1[0].upper - ci1[0].lower) == Approx(0.3326).margin(2e-3));

    const auto& s2 = reference::scheme2_sample();
    const auto ci2 = asymptotic_ci(s2, fit_mle(s2).fit, Probability(0.90));
    const auto& golden2 = reference::golden_ci(2);
    for (int p = 0; p < 3; ++p) {
        CHECK(ci2[p].lower == Approx(golden2.asymptotic[p][0]).margin(2e-3));
        CHECK(ci2[p].upper == Approx(golden2.asymptotic[p][1]).margin(2e-3));
    }
}

TEST_CASE("interval width grows with the confidence level") {
    const auto& s = reference::scheme1_sample();
    const auto fit = fit_mle(s).fit;
    double prev = 0.0;
    for (double level : {0.80, 0.90, 0.95, 0.99}) {
        const auto ci = asymptotic_ci(s, fit, Probability(level));
        const double width = ci[0].upper - ci[0].lower;
        CHECK(width > prev);
        prev = width;
    }
}

TEST_CASE("percentile interval follows the order-statistic convention") {
    // constant replicates give a zero-width interval at the common value
    const std::vector<double> constant(250, 3.25);
    const auto [lo, hi] = percentile_interval(constant, 0.90);
    CHECK(lo == 3.25);
    CHECK(hi == 3.25);

    // order statistics: ceil(0.05 * 200) = 10th and ceil(0.95 * 200) = 190th
    std::vector<double> seq(200);
    for (int i = 0; i < 200; ++i) seq[i] = i + 1.0;
    std::shuffle(seq.begin(), seq.end(), std::mt19937(3));
    const auto [l2, h2] = percentile_interval(seq, 0.90);
    CHECK(l2 == 10.0);
    CHECK(h2 == 190.0);
}

TEST_CASE("percentile endpoints are invariant under replicate permutation") {
    std::vector<double> values(501);
    std::mt19937 gen(7);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (auto& v : values) v = dist(gen);
    const auto base = percentile_interval(values, 0.90);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
        std::shuffle(values.begin(), values.end(), gen);
        const auto again = percentile_interval(values, 0.90);
        CHECK(again.first == base.first);
        CHECK(again.second == base.second);
    }
}

TEST_CASE("bootstrap intervals land near the published real-data values") {
    const auto& s2 = reference::scheme2_sample();
    const auto fit = fit_mle(s2).fit;
    const auto boot = bootstrap_ci(s2, fit, Probability(0.90), 1000, RngStream(314, 1));
    const auto& golden = reference::golden_ci(2);
    CHECK(boot[0].lower == Approx(golden.bootstrap[0][0]).epsilon(0.10));
    CHECK(boot[0].upper == Approx(golden.bootstrap[0][1]).epsilon(0.10));
    for (int p = 0; p < 3; ++p) CHECK(boot[p].lower >= 0.0);
}

TEST_CASE("bootstrap is a deterministic function of the seed") {
    const auto& s = reference::scheme1_sample();
    const auto fit = fit_mle(s).fit;
    const auto a = bootstrap_ci(s, fit, Probability(0.90), 200, RngStream(1, 2));
    const auto b = bootstrap_ci(s, fit, Probability(0.90), 200, RngStream(1, 2));
    for (int p = 0; p < 3; ++p) {
        CHECK(a[p].lower == b[p].lower);
        CHECK(a[p].upper == b[p].upper);
    }
}

TEST_CASE("bootstrap coverage for the shape falls short of nominal") {
    // published design: 90% bootstrap CP around 82.9% for this plan
    const auto scheme = validate_scheme(25, 20, [] {
        std::vector<int> r(19, 0);
        r[0] = 3;
        return r;
    }());
    const WeibullParams params(0.5, 0.5, 1.0);
    const auto res = experiments::ci_coverage(scheme, params, Probability(0.90), 500, 500,
                                              RngStream(2718, 0));
    CHECK(res.boot_cp[0] == Approx(82.9).margin(3.0));
}
