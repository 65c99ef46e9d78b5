#ifndef BJPC_ROOTS_HPP
#define BJPC_ROOTS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace bjpc {

struct RootResult {
    double root = 0.0;
    double f_at_root = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Brent's method on a sign-changing bracket [a, b].
template <class F>
RootResult find_root(F&& f, double a, double b, double xtol = 0.0, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa < 0.0) == (fb < 0.0))
        throw std::invalid_argument("find_root: endpoints do not bracket a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 1; iter <= max_iter; ++iter) {
        if ((fb < 0.0) == (fc < 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0)
            return {b, fb, iter, true};
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::fabs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return {b, fb, max_iter, false};
}

// Expands a bracket around x0 > 0 for a monotone f on the positive half-line:
// doubles upward or halves downward, in the direction the sign of f(x0) dictates.
template <class F>
std::pair<double, double> bracket_monotone(F&& f, double x0, bool increasing,
                                           double lo_min = 1e-300, double hi_max = 1e300) {
    if (!(x0 > 0.0)) throw std::invalid_argument("bracket_monotone: seed must be positive");
    double f0 = f(x0);
    if (f0 == 0.0) return {x0, x0};
    const bool go_up = increasing ? (f0 < 0.0) : (f0 > 0.0);
    double prev = x0;
    double x = x0;
    for (int i = 0; i < 2200; ++i) {
        prev = x;
        x = go_up ? x * 2.0 : x * 0.5;
        if (x > hi_max || x < lo_min) break;
        const double fx = f(x);
        if (fx == 0.0) return {x, x};
        if ((fx < 0.0) != (f0 < 0.0)) return go_up ? std::pair{prev, x} : std::pair{x, prev};
    }
    throw std::runtime_error("bracket_monotone: no sign change within search range");
}

}  // namespace bjpc

#endif  // BJPC_ROOTS_HPP
