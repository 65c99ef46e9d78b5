#ifndef BJPC_EXPERIMENTS_HPP
#define BJPC_EXPERIMENTS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bjpc/estimate.hpp"
#include "bjpc/intervals.hpp"
#include "bjpc/model.hpp"
#include "bjpc/ocs.hpp"
#include "bjpc/parallel.hpp"
#include "bjpc/region.hpp"
#include "bjpc/rng.hpp"
#include "bjpc/simulate.hpp"

// Seeded Monte Carlo experiments over the fitted estimators and regions.
// Replications that land on a boundary (all failures from one population) are
// regenerated from a per-replication attempt counter, so results do not depend
// on evaluation order or thread count.

namespace bjpc::experiments {

namespace detail {

// Draws until both populations contribute at least one failure.
inline BjpcSample draw_interior_sample(const CensoringScheme& scheme, const WeibullParams& params,
                                       const RngStream& base, std::uint64_t rep,
                                       long* regenerated) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        RngStream rng = base.substream(rep, attempt);
        BjpcSample s = simulate_spacings(scheme, params, rng);
        const int k1 = s.k1();
        if (k1 > 0 && k1 < scheme.k) return s;
        if (regenerated != nullptr) ++*regenerated;
    }
}

}  // namespace detail

struct MethodStats {
    std::array<double, 3> ae{};      // average estimate (alpha, lambda1, lambda2)
    std::array<double, 3> ae_se{};
    std::array<double, 3> mse{};
    std::array<double, 3> mse_se{};
};

struct AeMseResult {
    MethodStats mle;
    MethodStats amle;
    long reps = 0;
    long regenerated = 0;
};

// Average estimate and mean squared error of both estimators under repeated
// sampling at the true parameters.
inline AeMseResult ae_mse(const CensoringScheme& scheme, const WeibullParams& params, long reps,
                          const RngStream& base) {
    if (reps < 2) throw std::invalid_argument("ae_mse: reps must be >= 2");
    std::vector<std::array<double, 6>> draws(reps);  // mle a,l1,l2 then amle a,l1,l2
    std::vector<long> regen(reps, 0);
    parallel_for(reps, [&](long r) {
        for (std::uint64_t attempt = 0;; ++attempt) {
            RngStream rng = base.substream(static_cast<std::uint64_t>(r), attempt);
            const BjpcSample s = simulate_spacings(scheme, params, rng);
            const int k1 = s.k1();
            if (k1 == 0 || k1 == scheme.k) {
                ++regen[r];
                continue;
            }
            try {
                const WeibullFit mle = fit_mle(s).fit;
                const WeibullFit amle = fit_amle(s);
                draws[r] = {mle.params.alpha,  mle.params.lambda1,  mle.params.lambda2,
                            amle.params.alpha, amle.params.lambda1, amle.params.lambda2};
                return;
            } catch (const FitError&) {
                ++regen[r];
            }
        }
    });

    const std::array<double, 3> truth = {params.alpha, params.lambda1, params.lambda2};
    AeMseResult out;
    out.reps = reps;
    for (long r : regen) out.regenerated += r;
    for (int method = 0; method < 2; ++method) {
        MethodStats& stats = (method == 0) ? out.mle : out.amle;
        for (int p = 0; p < 3; ++p) {
            std::vector<double> est(reps), sq(reps);
            for (long r = 0; r < reps; ++r) {
                est[r] = draws[r][method * 3 + p];
                sq[r] = (est[r] - truth[p]) * (est[r] - truth[p]);
            }
            const MonteCarloStat m_est = summarize(est);
            const MonteCarloStat m_sq = summarize(sq);
            stats.ae[p] = m_est.mean;
            stats.ae_se[p] = m_est.std_error;
            stats.mse[p] = m_sq.mean;
            stats.mse_se[p] = m_sq.std_error;
        }
    }
    return out;
}

struct CiCoverageResult {
    std::array<double, 3> asym_cp{};  // coverage, percent
    std::array<double, 3> asym_al{};  // average length
    std::array<double, 3> boot_cp{};
    std::array<double, 3> boot_al{};
    long reps = 0;
    long boot_inner = 0;
    long regenerated = 0;
};

// Coverage and average length of the two interval constructions over seeded
// outer replications; boot_inner = 0 skips the bootstrap (much cheaper).
inline CiCoverageResult ci_coverage(const CensoringScheme& scheme, const WeibullParams& params,
                                    Probability level, long outer, long boot_inner,
                                    const RngStream& base) {
    if (outer < 2) throw std::invalid_argument("ci_coverage: outer must be >= 2");
    struct Row {
        std::array<double, 3> asym_len{}, boot_len{};
        std::array<int, 3> asym_hit{}, boot_hit{};
    };
    std::vector<Row> rows(outer);
    std::vector<long> regen(outer, 0);
    const std::array<double, 3> truth = {params.alpha, params.lambda1, params.lambda2};

    parallel_for(outer, [&](long r) {
        for (std::uint64_t attempt = 0;; ++attempt) {
            RngStream rng = base.substream(static_cast<std::uint64_t>(r), attempt);
            const BjpcSample s = simulate_spacings(scheme, params, rng);
            const int k1 = s.k1();
            if (k1 == 0 || k1 == scheme.k) {
                ++regen[r];
                continue;
            }
            try {
                const WeibullFit fit = fit_mle(s).fit;
                const auto asym = asymptotic_ci(s, fit, level);
                Row row;
                for (int p = 0; p < 3; ++p) {
                    row.asym_len[p] = asym[p].upper - asym[p].lower;
                    row.asym_hit[p] =
                        (asym[p].lower <= truth[p] && truth[p] <= asym[p].upper) ? 1 : 0;
                }
                if (boot_inner > 0) {
                    const RngStream boot_rng = rng.substream(0x626F6F74ULL);
                    const auto boot = bootstrap_ci(s, fit, level, boot_inner, boot_rng);
                    for (int p = 0; p < 3; ++p) {
                        row.boot_len[p] = boot[p].upper - boot[p].lower;
                        row.boot_hit[p] =
                            (boot[p].lower <= truth[p] && truth[p] <= boot[p].upper) ? 1 : 0;
                    }
                }
                rows[r] = row;
                return;
            } catch (const FitError&) {
                ++regen[r];
            } catch (const BootstrapError&) {
                ++regen[r];
            }
        }
    });

    CiCoverageResult out;
    out.reps = outer;
    out.boot_inner = boot_inner;
    for (long r : regen) out.regenerated += r;
    for (int p = 0; p < 3; ++p) {
        double ah = 0, al = 0, bh = 0, bl = 0;
        for (const Row& row : rows) {
            ah += row.asym_hit[p];
            al += row.asym_len[p];
            bh += row.boot_hit[p];
            bl += row.boot_len[p];
        }
        out.asym_cp[p] = 100.0 * ah / outer;
        out.asym_al[p] = al / outer;
        if (boot_inner > 0) {
            out.boot_cp[p] = 100.0 * bh / outer;
            out.boot_al[p] = bl / outer;
        }
    }
    return out;
}

struct RegionCoverageResult {
    double alpha_cp = 0.0;   // stand-alone shape interval at miss probability gamma
    double lambda_cp = 0.0;  // rate-sum set at the true shape, same gamma
    double joint_cp = 0.0;   // joint region at gamma with the equal split
    long reps = 0;
};

// Empirical coverage of the exact pivotal constructions; all three are nominal
// 100(1-gamma)%.
inline RegionCoverageResult region_coverage(const CensoringScheme& scheme,
                                            const WeibullParams& params, Probability gamma,
                                            long reps, const RngStream& base) {
    if (reps < 2) throw std::invalid_argument("region_coverage: reps must be >= 2");
    const double split = 1.0 - std::sqrt(1.0 - gamma.value());
    const RegionConstants full =
        region_constants(scheme.k, gamma, gamma);
    const RegionConstants joint =
        region_constants(scheme.k, Probability(split), Probability(split));
    const double lambda_sum = params.lambda_sum();

    std::vector<std::array<int, 3>> hits(reps);
    parallel_for(reps, [&](long r) {
        RngStream rng = base.substream(static_cast<std::uint64_t>(r));
        const BjpcSample s = simulate_spacings(scheme, params, rng);

        // stand-alone shape interval
        const double a_lo = phi_inverse(s, full.t_lo);
        const double a_hi = phi_inverse(s, full.t_hi);
        const int alpha_in = (a_lo < params.alpha && params.alpha < a_hi) ? 1 : 0;

        // rate-sum set at the true shape
        const double a_true = a_of_alpha(s, params.alpha);
        const int lambda_in = (full.chi_lo < 2.0 * lambda_sum * a_true &&
                               2.0 * lambda_sum * a_true < full.chi_hi)
                                  ? 1
                                  : 0;

        // joint region with the split levels
        const double j_lo = phi_inverse(s, joint.t_lo);
        const double j_hi = phi_inverse(s, joint.t_hi);
        int joint_in = 0;
        if (j_lo < params.alpha && params.alpha < j_hi) {
            joint_in = (joint.chi_lo < 2.0 * lambda_sum * a_true &&
                        2.0 * lambda_sum * a_true < joint.chi_hi)
                           ? 1
                           : 0;
        }
        hits[r] = {alpha_in, lambda_in, joint_in};
    });

    RegionCoverageResult out;
    out.reps = reps;
    double a = 0, l = 0, j = 0;
    for (const auto& h : hits) {
        a += h[0];
        l += h[1];
        j += h[2];
    }
    out.alpha_cp = 100.0 * a / reps;
    out.lambda_cp = 100.0 * l / reps;
    out.joint_cp = 100.0 * j / reps;
    return out;
}

struct VolumeFamilyRow {
    CensoringScheme scheme;
    int block_position = 0;
    MonteCarloStat volume;  // geometric scale; multiply by 8 for the published columns
    MonteCarloStat etot;
};

// Expected volume and expected time on test for a single-block family at the
// given positions. Every position shares the same per-replication streams
// (common random numbers), so the comparison between neighbouring plans is far
// more precise than the marginal standard errors suggest.
inline std::vector<VolumeFamilyRow> volume_family(int m, int k, int block_size,
                                                  const std::vector<int>& positions,
                                                  const WeibullParams& params, Probability gamma,
                                                  long volume_reps, long etot_reps,
                                                  const RngStream& base) {
    const RngStream vol_stream = base.substream(0x766F6CULL);
    const RngStream etot_stream = base.substream(0x65746FULL);
    std::vector<VolumeFamilyRow> out;
    out.reserve(positions.size());
    for (int pos : positions) {
        std::vector<int> removals(k - 1, 0);
        removals.at(pos - 1) = block_size;
        const CensoringScheme scheme = validate_scheme(m, k, std::move(removals));
        VolumeFamilyRow row;
        row.scheme = scheme;
        row.block_position = pos;
        row.volume = expected_volume(scheme, params, gamma, volume_reps, vol_stream);
        row.etot = expected_time_on_test(scheme, params, etot_reps, etot_stream);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace bjpc::experiments

#endif  // BJPC_EXPERIMENTS_HPP
