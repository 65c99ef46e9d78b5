#ifndef BJPC_INTERVALS_HPP
#define BJPC_INTERVALS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bjpc/estimate.hpp"
#include "bjpc/model.hpp"
#include "bjpc/rng.hpp"
#include "bjpc/simulate.hpp"
#include "bjpc/special_functions.hpp"

namespace bjpc {

enum class ParameterId { Alpha, Lambda1, Lambda2 };
enum class IntervalMethod { Asymptotic, Bootstrap };

struct IntervalEstimate {
    ParameterId parameter = ParameterId::Alpha;
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.0;
    IntervalMethod method = IntervalMethod::Asymptotic;
};

class SingularInformationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BootstrapError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Matrix3 {
    std::array<double, 9> a{};
    double& operator()(int i, int j) { return a[i * 3 + j]; }
    double operator()(int i, int j) const { return a[i * 3 + j]; }
};

// Inverse through the Cholesky factorization; requires symmetric positive
// definite input.
inline Matrix3 invert_spd(const Matrix3& m) {
    std::array<double, 9> l{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = m(i, j);
            for (int p = 0; p < j; ++p) sum -= l[i * 3 + p] * l[j * 3 + p];
            if (i == j) {
                if (!(sum > 0.0))
                    throw SingularInformationError(
                        "observed information is not positive definite");
                l[i * 3 + i] = std::sqrt(sum);
            } else {
                l[i * 3 + j] = sum / l[j * 3 + j];
            }
        }
    }
    // solve L y = e_j, then L^T x = y, column by column
    Matrix3 inv;
    for (int col = 0; col < 3; ++col) {
        std::array<double, 3> y{};
        for (int i = 0; i < 3; ++i) {
            double sum = (i == col) ? 1.0 : 0.0;
            for (int p = 0; p < i; ++p) sum -= l[i * 3 + p] * y[p];
            y[i] = sum / l[i * 3 + i];
        }
        for (int i = 2; i >= 0; --i) {
            double sum = y[i];
            for (int p = i + 1; p < 3; ++p) sum -= l[p * 3 + i] * inv(p, col);
            inv(i, col) = sum / l[i * 3 + i];
        }
    }
    return inv;
}

// Observed information (negative log-likelihood Hessian) at an interior fit,
// ordered (alpha, lambda1, lambda2). The lambda1-lambda2 entry is identically
// zero: the log-likelihood is additively separable in the two rates.
inline Matrix3 observed_information(const BjpcSample& s, const WeibullFit& fit) {
    const int k = s.scheme.k;
    const double alpha = fit.params.alpha;
    const double l1 = fit.params.lambda1;
    const double l2 = fit.params.lambda2;
    if (!(l1 > 0.0) || !(l2 > 0.0))
        throw std::domain_error("observed_information: requires interior rate estimates");

    double sum_lw = 0.0, sum_lw2 = 0.0;
    for (int i = 0; i < k; ++i) {
        const double wa = s.scheme.weight[i] * std::exp(alpha * s.log_w[i]);
        sum_lw += s.log_w[i] * wa;
        sum_lw2 += s.log_w[i] * s.log_w[i] * wa;
    }

    const int k1 = s.k1();
    const int k2 = s.k2();
    Matrix3 info;
    info(0, 0) = k / (alpha * alpha) + (l1 + l2) * sum_lw2;
    info(1, 1) = k1 / (l1 * l1);
    info(2, 2) = k2 / (l2 * l2);
    info(0, 1) = info(1, 0) = sum_lw;
    info(0, 2) = info(2, 0) = sum_lw;
    info(1, 2) = info(2, 1) = 0.0;
    return info;
}

// Wald intervals from the inverse observed information; rate lower limits are
// clamped at zero.
inline std::array<IntervalEstimate, 3> asymptotic_ci(const BjpcSample& s, const WeibullFit& fit,
                                                     Probability level) {
    const Matrix3 cov = invert_spd(observed_information(s, fit));
    const double z = std_normal_quantile(Probability(1.0 - (1.0 - level.value()) / 2.0));
    const std::array<double, 3> theta = {fit.params.alpha, fit.params.lambda1,
                                         fit.params.lambda2};
    const std::array<ParameterId, 3> ids = {ParameterId::Alpha, ParameterId::Lambda1,
                                            ParameterId::Lambda2};
    std::array<IntervalEstimate, 3> out;
    for (int j = 0; j < 3; ++j) {
        const double var = cov(j, j);
        if (!(var > 0.0)) throw SingularInformationError("non-positive variance estimate");
        const double half = z * std::sqrt(var);
        double lo = theta[j] - half;
        if (j > 0) lo = std::max(lo, 0.0);
        out[j] = {ids[j], lo, theta[j] + half, level.value(), IntervalMethod::Asymptotic};
    }
    return out;
}

// Empirical quantile pair by the plain order-statistic convention
// (index ceil(q * n), 1-based, no interpolation).
inline std::pair<double, double> percentile_interval(std::vector<double> values, double level) {
    if (values.empty()) throw std::invalid_argument("percentile_interval: empty sample");
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    const double q_lo = (1.0 - level) / 2.0;
    const double q_hi = 1.0 - q_lo;
    const auto pick = [&](double q) {
        auto idx = static_cast<long>(std::ceil(q * n));
        idx = std::max<long>(1, std::min<long>(idx, values.size()));
        return values[idx - 1];
    };
    return {pick(q_lo), pick(q_hi)};
}

struct BootstrapDiagnostics {
    long attempted = 0;
    long discarded = 0;
};

// Percentile parametric bootstrap: resamples the fitted model under the
// sample's own scheme, refits by MLE, and reads off empirical percentiles.
// Replications that cannot be refit (boundary or non-convergence) are
// discarded and counted; more than 5% of them is an error.
inline std::array<IntervalEstimate, 3> bootstrap_ci(const BjpcSample& s, const WeibullFit& fit,
                                                    Probability level, long replicates,
                                                    const RngStream& base,
                                                    BootstrapDiagnostics* diag = nullptr) {
    if (replicates < 100) throw std::invalid_argument("bootstrap_ci: need at least 100 replicates");
    std::vector<double> alphas, l1s, l2s;
    alphas.reserve(replicates);
    l1s.reserve(replicates);
    l2s.reserve(replicates);
    long discarded = 0;
    for (long b = 0; b < replicates; ++b) {
        RngStream rng = base.substream(0x626F6F74ULL, static_cast<std::uint64_t>(b));
        try {
            const BjpcSample resampled = simulate_spacings(s.scheme, fit.params, rng);
            const WeibullFit refit = fit_mle(resampled).fit;
            alphas.push_back(refit.params.alpha);
            l1s.push_back(refit.params.lambda1);
            l2s.push_back(refit.params.lambda2);
        } catch (const FitError&) {
            ++discarded;
        }
    }
    if (diag != nullptr) *diag = {replicates, discarded};
    if (discarded * 20 > replicates)
        throw BootstrapError("bootstrap_ci: more than 5% of replicates failed to refit");

    const auto [alo, ahi] = percentile_interval(std::move(alphas), level.value());
    const auto [l1lo, l1hi] = percentile_interval(std::move(l1s), level.value());
    const auto [l2lo, l2hi] = percentile_interval(std::move(l2s), level.value());
    return {IntervalEstimate{ParameterId::Alpha, alo, ahi, level.value(), IntervalMethod::Bootstrap},
            IntervalEstimate{ParameterId::Lambda1, l1lo, l1hi, level.value(),
                             IntervalMethod::Bootstrap},
            IntervalEstimate{ParameterId::Lambda2, l2lo, l2hi, level.value(),
                             IntervalMethod::Bootstrap}};
}

}  // namespace bjpc

#endif  // BJPC_INTERVALS_HPP
