#ifndef BJPC_SPECIAL_FUNCTIONS_HPP
#define BJPC_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bjpc/roots.hpp"

namespace bjpc {

// A probability strictly inside the open unit interval.
class Probability {
public:
    explicit Probability(double v) : v_(v) {
        if (!(v > 0.0 && v < 1.0))
            throw std::domain_error("Probability must lie strictly inside (0,1)");
    }
    double value() const { return v_; }
    operator double() const { return v_; }

private:
    double v_;
};

namespace detail {

inline constexpr double kLnGammaCoef[14] = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

}  // namespace detail

inline double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : detail::kLnGammaCoef) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

namespace detail {

// Regularized lower incomplete gamma by its power series (x < a+1).
inline double gamma_p_series(double a, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 10000; ++n) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * eps)
            return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Regularized upper incomplete gamma by Lentz continued fraction (x >= a+1).
inline double gamma_q_cf(double a, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps)
            return std::exp(-x + a * std::log(x) - ln_gamma(a)) * h;
    }
    throw std::runtime_error("gamma_q_cf: no convergence");
}

// Continued fraction for the regularized incomplete beta (Lentz).
inline double beta_cf(double a, double b, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 10000; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) return h;
    }
    throw std::runtime_error("beta_cf: no convergence");
}

}  // namespace detail

// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return detail::gamma_p_series(a, x);
    return 1.0 - detail::gamma_q_cf(a, x);
}

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
inline double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

// Regularized incomplete beta I_x(a, b).
inline double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || x < 0.0 || x > 1.0)
        throw std::domain_error("incomplete_beta: bad arguments");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double bt = std::exp(ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                               a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * detail::beta_cf(a, b, x) / a;
    return 1.0 - bt * detail::beta_cf(b, a, 1.0 - x) / b;
}

inline double chi2_cdf(double x, double dof) {
    if (!(dof > 0.0)) throw std::domain_error("chi2_cdf: dof must be positive");
    if (x <= 0.0) return 0.0;
    return gamma_p(0.5 * dof, 0.5 * x);
}

inline double f_cdf(double x, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw std::domain_error("f_cdf: dof must be positive");
    if (x <= 0.0) return 0.0;
    return incomplete_beta(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

inline double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / 1.4142135623730951);
}

namespace detail {

// Inverts a strictly increasing CDF to the target probability by bracketing + Brent.
template <class Cdf>
double invert_cdf(Cdf&& cdf, double target, double seed) {
    auto g = [&](double q) { return cdf(q) - target; };
    auto [lo, hi] = bracket_monotone(g, seed, /*increasing=*/true);
    return find_root(g, lo, hi, 1e-14).root;
}

}  // namespace detail

// Lower-tail standard normal quantile.
inline double std_normal_quantile(Probability p) {
    auto g = [&](double x) { return std_normal_cdf(x) - p.value(); };
    return find_root(g, -45.0, 45.0, 1e-14).root;
}

// Upper-tail chi-square quantile: returns q with P(X > q) = p for X ~ chi2(dof).
inline double chi2_quantile(Probability p, double dof) {
    if (!(dof > 0.0)) throw std::domain_error("chi2_quantile: dof must be positive");
    const double lower = 1.0 - p.value();
    // Wilson-Hilferty seed
    const double z = std_normal_quantile(Probability(lower));
    const double h = 2.0 / (9.0 * dof);
    double seed = dof * std::pow(1.0 - h + z * std::sqrt(h), 3);
    if (!(seed > 0.0) || !std::isfinite(seed)) seed = dof;
    return detail::invert_cdf([dof](double q) { return chi2_cdf(q, dof); }, lower, seed);
}

// Upper-tail F quantile: returns q with P(F > q) = p for F ~ F(d1, d2).
inline double f_quantile(Probability p, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw std::domain_error("f_quantile: dof must be positive");
    const double lower = 1.0 - p.value();
    return detail::invert_cdf([d1, d2](double q) { return f_cdf(q, d1, d2); }, lower, 1.0);
}

}  // namespace bjpc

#endif  // BJPC_SPECIAL_FUNCTIONS_HPP
