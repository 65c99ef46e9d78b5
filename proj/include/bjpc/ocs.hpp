#ifndef BJPC_OCS_HPP
#define BJPC_OCS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bjpc/model.hpp"
#include "bjpc/parallel.hpp"
#include "bjpc/region.hpp"
#include "bjpc/rng.hpp"
#include "bjpc/simulate.hpp"

namespace bjpc {

struct SchemeEvaluation {
    CensoringScheme scheme;
    double expected_volume = 0.0;
    double volume_se = 0.0;
    double etot = 0.0;
    double etot_se = 0.0;
    long reps = 0;
};

// Monte Carlo mean of the joint-region volume under the design parameters,
// with an equal gamma1 = gamma2 split. Replication r uses base.substream(r).
inline MonteCarloStat expected_volume(const CensoringScheme& scheme, const WeibullParams& params,
                                      Probability gamma, long reps, const RngStream& base,
                                      int grid_points = 401) {
    if (reps < 2) throw std::invalid_argument("expected_volume: reps must be >= 2");
    const double split = 1.0 - std::sqrt(1.0 - gamma.value());
    const RegionConstants rc = region_constants(scheme.k, Probability(split), Probability(split));
    std::vector<double> vols(reps);
    parallel_for(reps, [&](long r) {
        RngStream rng = base.substream(static_cast<std::uint64_t>(r));
        const BjpcSample sample = simulate_spacings(scheme, params, rng);
        vols[r] = region_volume(sample, rc, grid_points);
    });
    return summarize(vols);
}

enum class SchemeFamily { Exhaustive, SingleBlock };

namespace detail {

inline long composition_count(int slots, int budget) {
    // number of non-negative integer sequences of length `slots` with sum <= budget:
    // C(slots + budget, slots), capped to avoid overflow
    long count = 1;
    for (int i = 1; i <= slots; ++i) {
        count = count * (budget + i) / i;
        if (count > 100'000'000L) return count;
    }
    return count;
}

}  // namespace detail

// Enumerates censoring plans for fixed (m, k). Exhaustive walks every valid
// removal sequence (guarded by a cap); SingleBlock places one removal block of
// `block_size` at each position, the families used for design comparison.
inline std::vector<CensoringScheme> enumerate_schemes(int m, int k, SchemeFamily family,
                                                      int block_size = 0,
                                                      long cap = 1'000'000) {
    if (k < 2 || m < k) throw SchemeValidationError("enumerate_schemes: invalid m, k");
    std::vector<CensoringScheme> out;
    if (family == SchemeFamily::SingleBlock) {
        if (block_size < 1)
            throw std::invalid_argument("enumerate_schemes: block_size must be >= 1");
        if (block_size + (k - 1) >= m)
            throw SchemeValidationError(
                "enumerate_schemes: block of " + std::to_string(block_size) +
                " violates sum(R_i + 1) < m");
        for (int pos = 0; pos < k - 1; ++pos) {
            std::vector<int> removals(k - 1, 0);
            removals[pos] = block_size;
            out.push_back(validate_scheme(m, k, std::move(removals)));
        }
        return out;
    }

    const int budget = m - k;  // sum(R_i) <= m - k
    const long total = detail::composition_count(k - 1, budget);
    if (total > cap)
        throw std::invalid_argument("enumerate_schemes: exhaustive family has " +
                                    std::to_string(total) + " schemes, above cap " +
                                    std::to_string(cap));
    std::vector<int> removals(k - 1, 0);
    // odometer walk over all sequences with running sum <= budget
    while (true) {
        out.push_back(validate_scheme(m, k, removals));
        int used = 0;
        for (int v : removals) used += v;
        int pos = k - 2;
        while (pos >= 0) {
            if (used + 1 <= budget) {
                ++removals[pos];
                break;
            }
            used -= removals[pos];
            removals[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// Evaluates every scheme in the family and ranks ascending by expected volume;
// ties break toward smaller expected time on test, then lexicographic removals.
// All schemes share the same per-replication streams (common random numbers),
// which makes the small volume differences between neighbouring plans far more
// precise than the marginal Monte Carlo error.
inline std::vector<SchemeEvaluation> search_optimum(int m, int k, const WeibullParams& params,
                                                    Probability gamma, SchemeFamily family,
                                                    int block_size, long reps,
                                                    const RngStream& base, int grid_points = 401,
                                                    long etot_reps = 10'000) {
    const std::vector<CensoringScheme> schemes = enumerate_schemes(m, k, family, block_size);
    const RngStream vol_stream = base.substream(0x766F6CULL);
    const RngStream etot_stream = base.substream(0x65746F74ULL);
    std::vector<SchemeEvaluation> evals(schemes.size());
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const MonteCarloStat vol = expected_volume(schemes[i], params, gamma, reps, vol_stream,
                                                   grid_points);
        const MonteCarloStat tt = expected_time_on_test(schemes[i], params, etot_reps,
                                                        etot_stream);
        evals[i] = {schemes[i], vol.mean, vol.std_error, tt.mean, tt.std_error, reps};
    }
    std::sort(evals.begin(), evals.end(), [](const SchemeEvaluation& a, const SchemeEvaluation& b) {
        if (a.expected_volume != b.expected_volume) return a.expected_volume < b.expected_volume;
        if (a.etot != b.etot) return a.etot < b.etot;
        return a.scheme.removals < b.scheme.removals;
    });
    return evals;
}

}  // namespace bjpc

#endif  // BJPC_OCS_HPP
