#ifndef BJPC_ESTIMATE_HPP
#define BJPC_ESTIMATE_HPP

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bjpc/model.hpp"
#include "bjpc/roots.hpp"

namespace bjpc {

class FitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when k1 = 0 or k2 = 0: the shape estimate exists but one rate sits on
// the boundary, so only the other rate estimate is defined.
class BoundaryFitError : public FitError {
public:
    BoundaryFitError(double alpha, double defined_lambda, bool lambda1_defined)
        : FitError(std::string("fit: all failures came from one population; lambda") +
                   (lambda1_defined ? "2" : "1") + " estimate is on the boundary"),
          alpha_(alpha),
          defined_lambda_(defined_lambda),
          lambda1_defined_(lambda1_defined) {}
    double alpha() const { return alpha_; }
    double defined_lambda() const { return defined_lambda_; }
    bool lambda1_defined() const { return lambda1_defined_; }

private:
    double alpha_;
    double defined_lambda_;
    bool lambda1_defined_;
};

class ConvergenceError : public FitError {
    using FitError::FitError;
};

class AmleDegenerateError : public FitError {
    using FitError::FitError;
};

struct ProfileDiagnostics {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double score_at_root = 0.0;
};

// H(alpha) = A'(alpha) / A(alpha), with the same max-shift accumulation as A.
inline double h_of_alpha(const BjpcSample& s, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("h_of_alpha: alpha must be positive");
    const int k = s.scheme.k;
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i)
        peak = std::max(peak, s.scheme.log_weight[i] + alpha * s.log_w[i]);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < k; ++i) {
        const double e = std::exp(s.scheme.log_weight[i] + alpha * s.log_w[i] - peak);
        num += s.log_w[i] * e;
        den += e;
    }
    return num / den;
}

namespace detail {

inline double mean_log_w(const BjpcSample& s) {
    double acc = 0.0;
    for (double lw : s.log_w) acc += lw;
    return acc / static_cast<double>(s.scheme.k);
}

// Score and its derivative in one pass: H' is the weighted log-time variance.
inline std::pair<double, double> score_and_derivative(const BjpcSample& s, double alpha) {
    const int k = s.scheme.k;
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i)
        peak = std::max(peak, s.scheme.log_weight[i] + alpha * s.log_w[i]);
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < k; ++i) {
        const double e = std::exp(s.scheme.log_weight[i] + alpha * s.log_w[i] - peak);
        m0 += e;
        m1 += s.log_w[i] * e;
        m2 += s.log_w[i] * s.log_w[i] * e;
    }
    const double h = m1 / m0;
    const double h_prime = m2 / m0 - h * h;
    const double score = 1.0 / alpha - h + mean_log_w(s);
    return {score, -1.0 / (alpha * alpha) - h_prime};
}

}  // namespace detail

// Left side of the profile normal equation: 1/alpha - H(alpha) + mean(ln w).
// Strictly decreasing in alpha with exactly one root.
inline double profile_score(const BjpcSample& s, double alpha) {
    return 1.0 / alpha - h_of_alpha(s, alpha) + detail::mean_log_w(s);
}

// Profile log-likelihood P(alpha) = k ln(alpha) - k ln A(alpha) + (alpha-1) sum(ln w).
inline double profile_log_likelihood(const BjpcSample& s, double alpha) {
    const int k = s.scheme.k;
    return k * std::log(alpha) - k * log_a_of_alpha(s, alpha) +
           (alpha - 1.0) * k * detail::mean_log_w(s);
}

namespace detail {

// Scale-free seed from the log-quantile ratio of the observed times.
inline double alpha_seed(const BjpcSample& s) {
    const int k = s.scheme.k;
    const int i_hi = (3 * k + 3) / 4;  // ceil(3k/4), 1-based
    const int i_lo = (k + 3) / 4;      // ceil(k/4)
    const double spread = s.log_w[i_hi - 1] - s.log_w[i_lo - 1];
    if (!(spread > 1e-12)) return 1.0;
    // ln ln 4 - ln ln(4/3)
    return 1.5725335836855194 / spread;
}

}  // namespace detail

struct MleResult {
    WeibullFit fit;
    ProfileDiagnostics diagnostics;
};

// Profile-likelihood MLE: solves the score equation by bracketing + Brent,
// then Newton-polishes the residual below 1e-10.
inline MleResult fit_mle(const BjpcSample& s) {
    const int k = s.scheme.k;
    if (k < 2) throw FitError("fit_mle: requires k >= 2");

    auto score = [&](double a) { return profile_score(s, a); };
    const double seed = detail::alpha_seed(s);
    auto [lo, hi] = bracket_monotone(score, seed, /*increasing=*/false, 1e-12, 1e12);
    RootResult root = find_root(score, lo, hi, 1e-12);
    if (!root.converged)
        throw ConvergenceError("fit_mle: root refinement failed after iteration cap");

    double alpha = root.root;
    auto sd = detail::score_and_derivative(s, alpha);
    int polish = 0;
    while (std::fabs(sd.first) > 1e-12 && polish < 8) {
        alpha -= sd.first / sd.second;
        sd = detail::score_and_derivative(s, alpha);
        ++polish;
    }
    const double sc = sd.first;
    if (!(alpha > 0.0) || std::fabs(sc) > 1e-10)
        throw ConvergenceError("fit_mle: score residual " + std::to_string(sc) +
                               " above tolerance");

    const double a_hat = a_of_alpha(s, alpha);
    const int k1 = s.k1();
    const int k2 = s.k2();
    if (k1 == 0 || k2 == 0) {
        const double defined = static_cast<double>(k) / a_hat;
        throw BoundaryFitError(alpha, defined, /*lambda1_defined=*/k1 > 0);
    }

    MleResult out;
    out.fit.params = WeibullParams(alpha, k1 / a_hat, k2 / a_hat);
    out.fit.method = FitMethod::Mle;
    out.fit.converged = true;
    out.fit.score_residual = sc;
    out.diagnostics = {lo, hi, root.iterations + polish, sc};
    return out;
}

// xi_i = E(ln T_i) for T_i the sum of independent exponentials with the
// strictly decreasing integer rates a_1 > ... > a_i: partial-fraction weights
// in log-magnitude-plus-sign form, long double accumulation.
inline std::vector<double> xi_constants(const CensoringScheme& scheme) {
    constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;
    const int k = scheme.k;
    std::vector<long double> log_rate(k);
    for (int j = 0; j < k; ++j) log_rate[j] = std::log(static_cast<long double>(scheme.alive[j]));

    std::vector<double> xi(k);
    for (int i = 0; i < k; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j <= i; ++j) {
            long double log_mag = 0.0L;
            for (int l = 0; l <= i; ++l) {
                if (l == j) continue;
                log_mag += log_rate[l] -
                           std::log(std::fabs(static_cast<long double>(scheme.alive[l]) -
                                              scheme.alive[j]));
            }
            // rates below a_j contribute the negative factors
            const int sign = ((i - j) % 2 == 0) ? 1 : -1;
            acc += sign * std::exp(log_mag) * (-kEulerGamma - log_rate[j]);
        }
        xi[i] = static_cast<double>(acc);
    }
    return xi;
}

// Expansion points for the linearized normal equations: ln E(T_i) with
// T_i as in xi_constants, i.e. ln of the cumulative mean sum(1/a_j).
inline std::vector<double> amle_expansion_points(const CensoringScheme& scheme) {
    std::vector<double> xi(scheme.k);
    double acc = 0.0;
    for (int j = 0; j < scheme.k; ++j) {
        acc += 1.0 / scheme.alive[j];
        xi[j] = std::log(acc);
    }
    return xi;
}

// Positive root of q2 a^2 + q1 a - k = 0 in the branch continuous in q2.
inline double amle_alpha_root(double q2, double q1, int k) {
    if (std::fabs(q2) <= 1e-12 * std::max(1.0, std::fabs(q1))) {
        if (q1 > 0.0) return k / q1;
        throw AmleDegenerateError("fit_amle: vanishing quadratic with non-positive slope");
    }
    const double disc = q1 * q1 + 4.0 * q2 * k;
    if (disc < 0.0) throw AmleDegenerateError("fit_amle: quadratic has no real root");
    const double den = q1 + std::sqrt(disc);
    if (!(den > 0.0)) throw AmleDegenerateError("fit_amle: quadratic has no positive root");
    return 2.0 * k / den;
}

// Closed-form approximate MLE from the first-order expansion of the normal
// equations around the expansion points above.
inline WeibullFit fit_amle(const BjpcSample& s) {
    const int k = s.scheme.k;
    if (k < 2) throw FitError("fit_amle: requires k >= 2");
    const std::vector<double> xi = amle_expansion_points(s.scheme);

    double e1 = 0.0, e2 = 0.0, e3 = 0.0, d2 = 0.0, d3 = static_cast<double>(k);
    for (int i = 0; i < k; ++i) {
        const double c = s.scheme.weight[i];
        const double v = s.log_w[i];
        const double ai = std::exp(xi[i]);
        const double bi = ai * (1.0 - xi[i]);
        e1 += c * ai * v * v;
        e2 += c * ai * v;
        e3 += (c * bi - 1.0) * v;
        d2 += c * ai;
        d3 -= c * bi;
    }
    const double d1 = e2;
    const double q2 = e1 - d1 * e2 / d2;
    const double q1 = e3 + d3 * e2 / d2;
    const double alpha = amle_alpha_root(q2, q1, k);

    const double a_hat = a_of_alpha(s, alpha);
    const int k1 = s.k1();
    const int k2 = s.k2();
    if (k1 == 0 || k2 == 0)
        throw BoundaryFitError(alpha, static_cast<double>(k) / a_hat, k1 > 0);

    WeibullFit fit;
    fit.params = WeibullParams(alpha, k1 / a_hat, k2 / a_hat);
    fit.method = FitMethod::Amle;
    fit.converged = true;
    fit.score_residual = profile_score(s, alpha);
    return fit;
}

}  // namespace bjpc

#endif  // BJPC_ESTIMATE_HPP
