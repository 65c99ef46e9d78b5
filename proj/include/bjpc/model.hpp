#ifndef BJPC_MODEL_HPP
#define BJPC_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bjpc {

class SchemeValidationError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Balanced joint progressive Type-II censoring plan for two samples of size m:
// k observed failures, removal counts R_1..R_{k-1} per population at each failure.
struct CensoringScheme {
    int m = 0;
    int k = 0;
    std::vector<int> removals;     // R_i, size k-1
    std::vector<double> weight;    // c_i = R_i + 1 (i < k), c_k = m - sum(R_i + 1)
    std::vector<int> alive;        // a_j = m - sum_{l<j}(R_l + 1), per-population survivors
    std::vector<double> log_weight;
};

inline CensoringScheme validate_scheme(int m, int k, std::vector<int> removals) {
    if (k < 2)
        throw SchemeValidationError("scheme: requires k >= 2, got k=" + std::to_string(k));
    if (m < k)
        throw SchemeValidationError("scheme: requires m >= k, got m=" + std::to_string(m) +
                                    ", k=" + std::to_string(k));
    if (static_cast<int>(removals.size()) != k - 1)
        throw SchemeValidationError("scheme: expected k-1=" + std::to_string(k - 1) +
                                    " removal counts, got " + std::to_string(removals.size()));
    long removed = 0;
    for (int i = 0; i < k - 1; ++i) {
        if (removals[i] < 0)
            throw SchemeValidationError("scheme: requires R_" + std::to_string(i + 1) + " >= 0");
        removed += removals[i] + 1;
    }
    if (removed >= m)
        throw SchemeValidationError("scheme: requires sum(R_i + 1) < m, got sum=" +
                                    std::to_string(removed) + ", m=" + std::to_string(m));

    CensoringScheme s;
    s.m = m;
    s.k = k;
    s.removals = std::move(removals);
    s.weight.resize(k);
    s.alive.resize(k);
    int gone = 0;
    for (int j = 0; j < k; ++j) {
        s.alive[j] = m - gone;
        if (j < k - 1) {
            s.weight[j] = s.removals[j] + 1;
            gone += s.removals[j] + 1;
        } else {
            s.weight[j] = m - gone;
        }
    }
    s.log_weight.resize(k);
    for (int j = 0; j < k; ++j) s.log_weight[j] = std::log(s.weight[j]);
    return s;
}

struct WeibullParams {
    double alpha = 1.0;
    double lambda1 = 1.0;
    double lambda2 = 1.0;

    WeibullParams() = default;
    WeibullParams(double a, double l1, double l2) : alpha(a), lambda1(l1), lambda2(l2) {
        if (!(a > 0.0) || !(l1 > 0.0) || !(l2 > 0.0))
            throw std::domain_error("WeibullParams: all parameters must be positive");
    }
    double lambda_sum() const { return lambda1 + lambda2; }
};

// One observed data set: ordered failure times w and population indicators z
// (z_i = 1 when the i-th failure came from population A).
struct BjpcSample {
    CensoringScheme scheme;
    std::vector<double> w;
    std::vector<int> z;
    std::vector<double> log_w;

    int k1() const { return std::accumulate(z.begin(), z.end(), 0); }
    int k2() const { return scheme.k - k1(); }
};

// Validates and finalizes a sample. Times must be positive and non-decreasing:
// tied values do occur in coarsely recorded data and are accepted, but a
// decreasing step means mis-entered data and is rejected.
inline BjpcSample make_sample(CensoringScheme scheme, std::vector<double> w, std::vector<int> z) {
    const int k = scheme.k;
    if (static_cast<int>(w.size()) != k || static_cast<int>(z.size()) != k)
        throw std::invalid_argument("sample: w and z must each have length k=" +
                                    std::to_string(k));
    for (int i = 0; i < k; ++i) {
        if (!(w[i] > 0.0) || !std::isfinite(w[i]))
            throw std::invalid_argument("sample: failure times must be positive and finite");
        if (i > 0 && w[i] < w[i - 1])
            throw std::invalid_argument("sample: failure times must be non-decreasing");
        if (z[i] != 0 && z[i] != 1)
            throw std::invalid_argument("sample: indicators must be 0 or 1");
    }
    BjpcSample s;
    s.scheme = std::move(scheme);
    s.w = std::move(w);
    s.z = std::move(z);
    s.log_w.resize(k);
    for (int i = 0; i < k; ++i) s.log_w[i] = std::log(s.w[i]);
    return s;
}

enum class FitMethod { Mle, Amle };

struct WeibullFit {
    WeibullParams params;
    FitMethod method = FitMethod::Mle;
    bool converged = false;
    double score_residual = 0.0;
};

// log A(alpha) = log sum_i c_i w_i^alpha, accumulated with a max shift so that
// bracket expansion at large alpha cannot overflow.
inline double log_a_of_alpha(const BjpcSample& s, double alpha) {
    const int k = s.scheme.k;
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i)
        peak = std::max(peak, s.scheme.log_weight[i] + alpha * s.log_w[i]);
    double acc = 0.0;
    for (int i = 0; i < k; ++i)
        acc += std::exp(s.scheme.log_weight[i] + alpha * s.log_w[i] - peak);
    return peak + std::log(acc);
}

// A(alpha) = sum_i c_i w_i^alpha.
inline double a_of_alpha(const BjpcSample& s, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("a_of_alpha: alpha must be positive");
    return std::exp(log_a_of_alpha(s, alpha));
}

}  // namespace bjpc

#endif  // BJPC_MODEL_HPP
