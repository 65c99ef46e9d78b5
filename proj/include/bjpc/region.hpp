#ifndef BJPC_REGION_HPP
#define BJPC_REGION_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bjpc/model.hpp"
#include "bjpc/roots.hpp"
#include "bjpc/special_functions.hpp"

namespace bjpc {

namespace detail {

// log of sum_i c_i (w_i / w_1)^alpha, shift-stabilized; never overflows.
inline double log_scaled_total(const BjpcSample& s, double alpha) {
    const int k = s.scheme.k;
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i)
        peak = std::max(peak, s.scheme.log_weight[i] + alpha * (s.log_w[i] - s.log_w[0]));
    double acc = 0.0;
    for (int i = 0; i < k; ++i)
        acc += std::exp(s.scheme.log_weight[i] + alpha * (s.log_w[i] - s.log_w[0]) - peak);
    return peak + std::log(acc);
}

}  // namespace detail

// The scale-free pivot t1(alpha) = sum(c_i w_i^alpha) / ((k-1) m w_1^alpha) - 1/(k-1),
// distributed F_{2k-2,2} at the true shape; strictly increasing in alpha.
inline double t1_pivot(const BjpcSample& s, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("t1_pivot: alpha must be positive");
    const int k = s.scheme.k;
    const double log_norm = std::log(static_cast<double>(k - 1) * s.scheme.m);
    return std::exp(detail::log_scaled_total(s, alpha) - log_norm) - 1.0 / (k - 1);
}

// Inverse of t1: the unique alpha with t1(alpha) = t, for t > 0.
inline double phi_inverse(const BjpcSample& s, double t) {
    if (!(t > 0.0)) throw std::domain_error("phi_inverse: t must be positive");
    if (!(s.w.back() > s.w.front()))
        throw std::domain_error("phi_inverse: pivot is degenerate when w_k = w_1");
    auto g = [&](double a) { return t1_pivot(s, a) - t; };
    auto [lo, hi] = bracket_monotone(g, 1.0, /*increasing=*/true, 1e-280, 1e280);
    const RootResult root = find_root(g, lo, hi, 0.0, 300);
    if (!root.converged)
        throw std::runtime_error("phi_inverse: root refinement failed");
    return root.root;
}

// Exact confidence interval for alpha from the F pivot, upper-tail split
// gamma1/2 on each side.
inline std::pair<double, double> alpha_confidence_interval(const BjpcSample& s,
                                                           Probability gamma1) {
    const double dof1 = 2.0 * s.scheme.k - 2.0;
    const double t_lo = f_quantile(Probability(1.0 - gamma1.value() / 2.0), dof1, 2.0);
    const double t_hi = f_quantile(Probability(gamma1.value() / 2.0), dof1, 2.0);
    return {phi_inverse(s, t_lo), phi_inverse(s, t_hi)};
}

// Bounds on lambda1 + lambda2 at a given alpha from the chi-square pivot; the
// confidence set is the trapezoid {lambda1, lambda2 >= 0, lower < l1+l2 < upper}.
inline std::pair<double, double> lambda_sum_bounds(const BjpcSample& s, double alpha,
                                                   Probability gamma2) {
    const double dof = 2.0 * s.scheme.k;
    const double a_val = a_of_alpha(s, alpha);
    const double hi = chi2_quantile(Probability(gamma2.value() / 2.0), dof);
    const double lo = chi2_quantile(Probability(1.0 - gamma2.value() / 2.0), dof);
    return {lo / (2.0 * a_val), hi / (2.0 * a_val)};
}

// Pivot quantiles for a fixed (k, gamma1, gamma2); data-independent, so Monte
// Carlo loops over one scheme can compute them once.
struct RegionConstants {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double chi_lo = 0.0;
    double chi_hi = 0.0;
};

inline RegionConstants region_constants(int k, Probability gamma1, Probability gamma2) {
    const double dof1 = 2.0 * k - 2.0;
    const double dof = 2.0 * k;
    RegionConstants rc;
    rc.t_lo = f_quantile(Probability(1.0 - gamma1.value() / 2.0), dof1, 2.0);
    rc.t_hi = f_quantile(Probability(gamma1.value() / 2.0), dof1, 2.0);
    rc.chi_lo = chi2_quantile(Probability(1.0 - gamma2.value() / 2.0), dof);
    rc.chi_hi = chi2_quantile(Probability(gamma2.value() / 2.0), dof);
    return rc;
}

// Volume of the joint region: the trapezoid-area constant times the integral
// of A(alpha)^-2 over the alpha interval, by the composite trapezoidal rule.
inline double region_volume(const BjpcSample& s, const RegionConstants& rc,
                            int grid_points = 401) {
    if (grid_points < 2) throw std::invalid_argument("region_volume: need at least 2 grid points");
    const double alpha_lo = phi_inverse(s, rc.t_lo);
    const double alpha_hi = phi_inverse(s, rc.t_hi);

    const double h = (alpha_hi - alpha_lo) / (grid_points - 1);
    double integral = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double a = alpha_lo + h * i;
        const double f = std::exp(-2.0 * log_a_of_alpha(s, a));
        integral += (i == 0 || i == grid_points - 1) ? 0.5 * f : f;
    }
    integral *= h;
    return 0.125 * (rc.chi_hi * rc.chi_hi - rc.chi_lo * rc.chi_lo) * integral;
}

inline double region_volume(const BjpcSample& s, Probability gamma1, Probability gamma2,
                            int grid_points = 401) {
    return region_volume(s, region_constants(s.scheme.k, gamma1, gamma2), grid_points);
}

// Joint confidence region for (alpha, lambda1, lambda2): an exact interval for
// alpha and, at each alpha inside it, a trapezoid for the rate pair.
struct JointRegion {
    double gamma = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    std::pair<double, double> alpha_interval{0.0, 0.0};
    double volume = 0.0;
    BjpcSample sample;

    std::pair<double, double> sum_bounds(double alpha) const {
        return lambda_sum_bounds(sample, alpha, Probability(gamma2));
    }

    bool contains(double alpha, double lambda1, double lambda2) const {
        if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) return false;
        if (alpha <= alpha_interval.first || alpha >= alpha_interval.second) return false;
        const auto [lo, hi] = sum_bounds(alpha);
        const double sum = lambda1 + lambda2;
        return lo < sum && sum < hi;
    }
};

// Assembles the joint region at overall miss probability gamma. The default
// split uses gamma1 = gamma2 = 1 - sqrt(1 - gamma); an explicit gamma1 fixes
// gamma2 through (1 - gamma) = (1 - gamma1)(1 - gamma2).
inline JointRegion joint_region(const BjpcSample& s, Probability gamma,
                                std::optional<double> gamma1 = std::nullopt,
                                int grid_points = 401) {
    JointRegion region;
    region.gamma = gamma.value();
    region.gamma1 = gamma1.value_or(1.0 - std::sqrt(1.0 - gamma.value()));
    region.gamma2 = 1.0 - (1.0 - gamma.value()) / (1.0 - region.gamma1);
    const Probability g1(region.gamma1);
    const Probability g2(region.gamma2);
    region.alpha_interval = alpha_confidence_interval(s, g1);
    region.volume = region_volume(s, g1, g2, grid_points);
    region.sample = s;
    return region;
}

}  // namespace bjpc

#endif  // BJPC_REGION_HPP
