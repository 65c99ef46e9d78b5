#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "bjpc/model.hpp"
#include "bjpc/rng.hpp"
#include "bjpc/simulate.hpp"
#include "bjpc/special_functions.hpp"
#include "support/stats_support.hpp"

using namespace bjpc;
using Catch::Approx;

namespace {

CensoringScheme scheme_25_15_front() {
    std::vector<int> r(14, 0);
    r[0] = 7;
    return validate_scheme(25, 15, r);
}

}  // namespace

TEST_CASE("identical RngStream reproduces bit-identical samples") {
    const auto scheme = scheme_25_15_front();
    const WeibullParams params(1.3, 0.5, 1.0);
    RngStream a(42, 17), b(42, 17), c(42, 18);
    const auto s1 = simulate_spacings(scheme, params, a);
    const auto s2 = simulate_spacings(scheme, params, b);
    const auto s3 = simulate_spacings(scheme, params, c);
    CHECK(s1.w == s2.w);
    CHECK(s1.z == s2.z);
    CHECK(s1.w != s3.w);
}

TEST_CASE("substream derivation is deterministic and order-free") {
    RngStream base(7, 0);
    RngStream d1 = base.substream(3, 9);
    base.next_u64();  // drawing must not perturb derivation
    RngStream d2 = base.substream(3, 9);
    CHECK(d1.next_u64() == d2.next_u64());
    RngStream other = base.substream(3, 10);
    CHECK(d1.next_u64() != other.next_u64());
}

TEST_CASE("equal rates make the population indicators symmetric") {
    const auto scheme = scheme_25_15_front();
    const WeibullParams params(1.0, 0.75, 0.75);
    const long reps = 10000;
    RngStream base(101, 0);
    double total = 0.0;
    for (long r = 0; r < reps; ++r) {
        RngStream rng = base.substream(r);
        total += simulate_spacings(scheme, params, rng).k1();
    }
    const double mean_k1 = total / reps;
    // Binomial(k=15, 1/2): sd of the mean over 1e4 reps
    const double se = std::sqrt(15.0 * 0.25 / reps);
    CHECK(std::fabs(mean_k1 - 7.5) < 3.0 * se);
}

TEST_CASE("first failure time is exponential with rate m(lambda1+lambda2)") {
    const auto scheme = scheme_25_15_front();
    const WeibullParams params(1.0, 0.5, 1.0);
    const long reps = 100000;
    RngStream base(2024, 5);
    double total = 0.0;
    for (long r = 0; r < reps; ++r) {
        RngStream rng = base.substream(r);
        total += simulate_spacings(scheme, params, rng).w.front();
    }
    const double mean_w1 = total / reps;
    const double truth = 1.0 / (1.5 * 25.0);
    const double se = truth / std::sqrt(static_cast<double>(reps));  // exponential sd = mean
    CHECK(std::fabs(mean_w1 - truth) < 3.0 * se);
}

TEST_CASE("2(lambda1+lambda2) A(alpha) at the truth follows chi-square with 2k dof") {
    const auto scheme = scheme_25_15_front();
    const WeibullParams params(0.8, 0.5, 1.0);
    const long reps = 10000;
    RngStream base(31337, 2);
    std::vector<double> t2(reps);
    for (long r = 0; r < reps; ++r) {
        RngStream rng = base.substream(r);
        const auto s = simulate_spacings(scheme, params, rng);
        t2[r] = 2.0 * params.lambda_sum() * a_of_alpha(s, params.alpha);
    }
    const double dof = 2.0 * scheme.k;
    const double p = testsupport::ks_test_one_sample(
        t2, [dof](double x) { return chi2_cdf(x, dof); });
    CHECK(p > 0.01);
}

TEST_CASE("mechanism simulator agrees with the spacings representation on W1") {
    const auto scheme = validate_scheme(8, 4, {1, 0, 2});
    const WeibullParams params(1.5, 0.6, 1.1);
    const long reps = 10000;
    RngStream base(555, 0);
    std::vector<double> w_mech(reps), w_spac(reps);
    for (long r = 0; r < reps; ++r) {
        RngStream rng1 = base.substream(1, r);
        RngStream rng2 = base.substream(2, r);
        w_mech[r] = simulate_mechanism(scheme, params, rng1).w.front();
        w_spac[r] = simulate_spacings(scheme, params, rng2).w.front();
    }
    CHECK(testsupport::ks_test_two_sample(w_mech, w_spac) > 0.01);
}

TEST_CASE("mechanism indicators hit the rate ratio at every position") {
    const auto scheme = validate_scheme(10, 5, {2, 0, 1, 0});
    const WeibullParams params(0.7, 0.5, 1.0);
    const long reps = 20000;
    RngStream base(808, 1);
    std::vector<double> hits(scheme.k, 0.0);
    for (long r = 0; r < reps; ++r) {
        RngStream rng = base.substream(r);
        const auto s = simulate_mechanism(scheme, params, rng);
        for (int i = 0; i < scheme.k; ++i) hits[i] += s.z[i];
    }
    const double p1 = params.lambda1 / params.lambda_sum();
    const double se = std::sqrt(p1 * (1.0 - p1) / reps);
    for (int i = 0; i < scheme.k; ++i)
        CHECK(std::fabs(hits[i] / reps - p1) < 3.5 * se);
}

TEST_CASE("T1 and T2 pivots are uncorrelated at the truth") {
    const auto scheme = scheme_25_15_front();
    const WeibullParams params(1.0, 0.5, 1.0);
    const long reps = 10000;
    RngStream base(90210, 0);
    std::vector<double> t1(reps), t2(reps);
    const int k = scheme.k;
    for (long r = 0; r < reps; ++r) {
        RngStream rng = base.substream(r);
        const auto s = simulate_spacings(scheme, params, rng);
        const double a_val = a_of_alpha(s, params.alpha);
        t1[r] = a_val / ((k - 1.0) * scheme.m * std::pow(s.w.front(), params.alpha)) -
                1.0 / (k - 1.0);
        t2[r] = 2.0 * params.lambda_sum() * a_val;
    }
    const double rho = testsupport::pearson(t1, t2);
    CHECK(std::fabs(rho) < 3.0 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("expected time on test matches the published design values") {
    const WeibullParams half(0.5, 0.5, 1.0);
    std::vector<int> front(19, 0);
    front[0] = 5;
    const auto etot_front = expected_time_on_test(validate_scheme(25, 20, front), half, 10000,
                                                  RngStream(7, 77));
    CHECK(etot_front.mean == Approx(6.420).epsilon(0.03));

    const WeibullParams two(2.0, 0.5, 1.0);
    std::vector<int> back(19, 0);
    back[18] = 5;
    const auto etot_back = expected_time_on_test(validate_scheme(25, 20, back), two, 10000,
                                                 RngStream(7, 78));
    CHECK(etot_back.mean == Approx(1.229).epsilon(0.03));
}

TEST_CASE("complete-sample ETOT equals the harmonic-sum formula at alpha=1") {
    const int m = 12;
    const auto scheme = validate_scheme(m, m, std::vector<int>(m - 1, 0));
    const WeibullParams params(1.0, 0.4, 0.6);
    const auto res = expected_time_on_test(scheme, params, 20000, RngStream(13, 5));
    double truth = 0.0;
    for (int j = 1; j <= m; ++j) truth += 1.0 / j;
    truth /= params.lambda_sum();
    CHECK(std::fabs(res.mean - truth) < 3.0 * res.std_error);
}
