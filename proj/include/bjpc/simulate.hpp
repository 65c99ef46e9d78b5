#ifndef BJPC_SIMULATE_HPP
#define BJPC_SIMULATE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bjpc/model.hpp"
#include "bjpc/rng.hpp"

namespace bjpc {

struct MonteCarloStat {
    double mean = 0.0;
    double std_error = 0.0;
    long reps = 0;
};

inline MonteCarloStat summarize(const std::vector<double>& xs) {
    const auto n = static_cast<long>(xs.size());
    if (n < 2) throw std::invalid_argument("summarize: need at least two values");
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return {mean, sd / std::sqrt(static_cast<double>(n)), n};
}

// Draws a sample through the exponential-spacings representation:
// W_i^alpha is a cumulative sum of independent exponentials with rates
// (lambda1 + lambda2) * a_j. The indicators are i.i.d. Bernoulli with success
// probability lambda1 / (lambda1 + lambda2): the likelihood factorizes into
// lambda1^k1 * lambda2^k2 times a function of lambda1 + lambda2 alone, so Z is
// independent of W with exactly that marginal. Draw order: G_1..G_k, then
// Z_1..Z_k.
inline BjpcSample simulate_spacings(const CensoringScheme& scheme, const WeibullParams& params,
                                    RngStream& rng) {
    const int k = scheme.k;
    const double rate_scale = params.lambda_sum();
    std::vector<double> w(k);
    double t = 0.0;
    for (int i = 0; i < k; ++i) {
        t += rng.exponential(rate_scale * scheme.alive[i]);
        w[i] = std::pow(t, 1.0 / params.alpha);
    }
    std::vector<int> z(k);
    const double p1 = params.lambda1 / rate_scale;
    for (int i = 0; i < k; ++i) z[i] = rng.bernoulli(p1) ? 1 : 0;
    return make_sample(scheme, std::move(w), std::move(z));
}

namespace detail {

// Removes `count` uniformly chosen elements (swap-with-last).
inline void withdraw_random(std::vector<double>& pool, int count, RngStream& rng) {
    for (int r = 0; r < count; ++r) {
        const auto idx = rng.uniform_below(pool.size());
        pool[idx] = pool.back();
        pool.pop_back();
    }
}

}  // namespace detail

// Simulates the withdrawal protocol literally: both populations on test, at the
// i-th failure R_i random survivors leave the failing population and R_i + 1
// leave the other, so survivor counts stay balanced; everyone left is removed
// at the k-th failure. Exists as a distributional oracle for the spacings path.
inline BjpcSample simulate_mechanism(const CensoringScheme& scheme, const WeibullParams& params,
                                     RngStream& rng) {
    const int k = scheme.k;
    const double inv_alpha = 1.0 / params.alpha;
    std::vector<double> pool_a(scheme.m), pool_b(scheme.m);
    for (auto& x : pool_a) x = std::pow(rng.exponential(params.lambda1), inv_alpha);
    for (auto& x : pool_b) x = std::pow(rng.exponential(params.lambda2), inv_alpha);

    std::vector<double> w(k);
    std::vector<int> z(k);
    for (int i = 0; i < k; ++i) {
        const auto min_a = std::min_element(pool_a.begin(), pool_a.end());
        const auto min_b = std::min_element(pool_b.begin(), pool_b.end());
        const bool from_a = *min_a < *min_b;
        w[i] = from_a ? *min_a : *min_b;
        z[i] = from_a ? 1 : 0;
        auto& failing = from_a ? pool_a : pool_b;
        auto& other = from_a ? pool_b : pool_a;
        const auto failed_idx = from_a ? min_a - pool_a.begin() : min_b - pool_b.begin();
        failing[failed_idx] = failing.back();
        failing.pop_back();
        if (i < k - 1) {
            detail::withdraw_random(failing, scheme.removals[i], rng);
            detail::withdraw_random(other, scheme.removals[i] + 1, rng);
        } else {
            failing.clear();
            other.clear();
        }
        if (failing.size() != other.size())
            throw std::logic_error("simulate_mechanism: survivor pools out of balance");
    }
    return make_sample(scheme, std::move(w), std::move(z));
}

// Monte Carlo estimate of E(W_k), the expected time on test, with its
// standard error. Replication r runs on base.substream(r).
inline MonteCarloStat expected_time_on_test(const CensoringScheme& scheme,
                                            const WeibullParams& params, long reps,
                                            const RngStream& base) {
    if (reps < 2) throw std::invalid_argument("expected_time_on_test: reps must be >= 2");
    std::vector<double> wk(reps);
    for (long r = 0; r < reps; ++r) {
        RngStream rng = base.substream(static_cast<std::uint64_t>(r));
        wk[r] = simulate_spacings(scheme, params, rng).w.back();
    }
    return summarize(wk);
}

}  // namespace bjpc

#endif  // BJPC_SIMULATE_HPP
