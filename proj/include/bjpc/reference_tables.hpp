#ifndef BJPC_REFERENCE_TABLES_HPP
#define BJPC_REFERENCE_TABLES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bjpc/model.hpp"

// Bundled reference values for the `reproduce` command and the acceptance
// suite: published simulation summaries and real-data results for the
// air-conditioning reliability study that this library re-implements.
//
// Note on the volume scale: the published expected-volume columns are reported
// without the 1/8 factor of the trapezoid area, i.e. they equal 8 times the
// geometric region volume computed here. Comparisons multiply by 8.

namespace bjpc::reference {

struct ParamTriple {
    double alpha;
    double lambda1;
    double lambda2;
};

// --- simulation batteries (m = 25) ------------------------------------------

struct SchemeSpec {
    int m;
    int k;
    std::vector<int> removals;
    std::string label;
};

inline std::vector<int> block_removals(int k, int block, int position) {
    std::vector<int> r(k - 1, 0);
    r.at(position - 1) = block;
    return r;
}

// The six schemes used by the estimate and interval batteries.
inline const std::vector<SchemeSpec>& battery_schemes() {
    static const std::vector<SchemeSpec> schemes = {
        {25, 15, block_removals(15, 7, 1), "k=15,R=(7,0x13)"},
        {25, 15, block_removals(15, 7, 7), "k=15,R=(0x6,7,0x7)"},
        {25, 15, block_removals(15, 7, 14), "k=15,R=(0x13,7)"},
        {25, 20, block_removals(20, 3, 1), "k=20,R=(3,0x18)"},
        {25, 20, block_removals(20, 3, 10), "k=20,R=(0x9,3,0x9)"},
        {25, 20, block_removals(20, 3, 19), "k=20,R=(0x18,3)"},
    };
    return schemes;
}

// Tables 1-3: average estimate and mean squared error per parameter,
// values[param][j] with param in (alpha, lambda1, lambda2) and
// j in (ae_mle, mse_mle, ae_amle, mse_amle). 10,000 replications.
struct EstimateRow {
    double values[3][4];
};

struct EstimateTable {
    int id;
    ParamTriple truth;
    long base_reps;
    std::vector<EstimateRow> rows;  // aligned with battery_schemes()
};

inline const EstimateTable& estimate_table(int id) {
    static const EstimateTable t1{
        1,
        {0.5, 0.5, 1.0},
        10000,
        {
            {{{0.550, 0.017, 0.534, 0.015}, {0.576, 0.109, 0.568, 0.101}, {1.149, 0.279, 1.132, 0.253}}},
            {{{0.552, 0.019, 0.547, 0.018}, {0.601, 0.143, 0.595, 0.137}, {1.198, 0.371, 1.187, 0.352}}},
            {{{0.564, 0.024, 0.559, 0.023}, {0.628, 0.184, 0.622, 0.176}, {1.248, 0.514, 1.236, 0.491}}},
            {{{0.537, 0.012, 0.529, 0.011}, {0.547, 0.056, 0.544, 0.054}, {1.079, 0.123, 1.074, 0.118}}},
            {{{0.539, 0.013, 0.534, 0.012}, {0.548, 0.062, 0.546, 0.061}, {1.097, 0.147, 1.093, 0.143}}},
            {{{0.538, 0.012, 0.529, 0.011}, {0.542, 0.055, 0.539, 0.054}, {1.083, 0.130, 1.078, 0.125}}},
        }};
    static const EstimateTable t2{
        2,
        {1.0, 0.5, 1.0},
        10000,
        {
            {{{1.096, 0.071, 1.064, 0.063}, {0.575, 0.103, 0.566, 0.095}, {1.154, 0.292, 1.136, 0.264}}},
            {{{1.107, 0.078, 1.096, 0.074}, {0.602, 0.155, 0.597, 0.148}, {1.204, 0.446, 1.193, 0.426}}},
            {{{1.126, 0.101, 1.116, 0.097}, {0.620, 0.210, 0.614, 0.201}, {1.244, 0.660, 1.232, 0.625}}},
            {{{1.082, 0.057, 1.073, 0.055}, {0.557, 0.066, 0.554, 0.064}, {1.109, 0.162, 1.105, 0.158}}},
            {{{1.080, 0.052, 1.071, 0.050}, {0.550, 0.060, 0.548, 0.059}, {1.093, 0.139, 1.089, 0.135}}},
            {{{1.085, 0.058, 1.076, 0.056}, {0.555, 0.066, 0.553, 0.065}, {1.113, 0.172, 1.109, 0.167}}},
        }};
    static const EstimateTable t3{
        3,
        {2.0, 0.5, 1.0},
        10000,
        {
            {{{2.209, 0.294, 2.147, 0.259}, {0.578, 0.110, 0.569, 0.101}, {1.150, 0.289, 1.132, 0.258}}},
            {{{2.220, 0.319, 2.197, 0.304}, {0.597, 0.132, 0.592, 0.126}, {1.192, 0.388, 1.181, 0.365}}},
            {{{2.261, 0.414, 2.240, 0.397}, {0.630, 0.193, 0.624, 0.184}, {1.253, 0.531, 1.241, 0.504}}},
            {{{2.148, 0.191, 2.113, 0.178}, {0.545, 0.055, 0.542, 0.054}, {1.087, 0.131, 1.081, 0.125}}},
            {{{2.158, 0.207, 2.140, 0.199}, {0.548, 0.060, 0.546, 0.059}, {1.098, 0.141, 1.094, 0.137}}},
            {{{2.164, 0.227, 2.145, 0.218}, {0.552, 0.063, 0.549, 0.062}, {1.108, 0.155, 1.103, 0.151}}},
        }};
    switch (id) {
        case 1: return t1;
        case 2: return t2;
        case 3: return t3;
        default: throw std::invalid_argument("estimate_table: id must be 1, 2 or 3");
    }
}

// Tables 4-6: average length and coverage percentage of 90% intervals,
// values[param][j] with j in (boot_al, boot_cp, asym_al, asym_cp).
// 10,000 outer replications, 1,000 bootstrap resamples.
struct IntervalRow {
    double values[3][4];
};

struct IntervalTable {
    int id;
    ParamTriple truth;
    long base_reps;
    long boot_reps;
    std::vector<IntervalRow> rows;  // aligned with battery_schemes()
};

inline const IntervalTable& interval_table(int id) {
    static const IntervalTable t4{
        4,
        {0.5, 0.5, 1.0},
        10000,
        1000,
        {
            {{{0.435, 83.1, 0.378, 90.1}, {1.141, 87.8, 0.882, 90.1}, {1.812, 84.5, 1.296, 92.1}}},
            {{{0.457, 78.8, 0.378, 89.8}, {1.374, 86.8, 0.937, 90.6}, {2.245, 83.8, 1.430, 92.9}}},
            {{{0.519, 79.2, 0.431, 89.7}, {1.809, 84.1, 1.049, 91.1}, {3.084, 82.2, 1.667, 93.8}}},
            {{{0.365, 82.9, 0.323, 89.6}, {0.811, 88.6, 0.700, 88.3}, {1.241, 86.4, 1.018, 90.5}}},
            {{{0.366, 83.2, 0.323, 89.3}, {0.836, 89.6, 0.711, 88.8}, {1.285, 87.5, 1.044, 90.5}}},
            {{{0.392, 84.7, 0.343, 90.3}, {0.852, 88.7, 0.724, 89.3}, {1.355, 85.7, 1.065, 90.8}}},
        }};
    static const IntervalTable t5{
        5,
        {1.0, 0.5, 1.0},
        10000,
        1000,
        {
            {{{0.866, 83.6, 0.759, 89.9}, {1.089, 89.7, 0.869, 89.4}, {1.745, 86.2, 1.293, 92.0}}},
            {{{0.914, 78.4, 0.758, 90.0}, {1.525, 86.8, 0.947, 90.5}, {2.683, 82.8, 1.451, 93.5}}},
            {{{1.027, 81.7, 0.862, 90.1}, {1.639, 88.4, 1.053, 91.4}, {2.810, 84.4, 1.667, 93.7}}},
            {{{0.726, 82.3, 0.643, 90.3}, {0.808, 87.2, 0.697, 88.5}, {1.222, 86.1, 1.012, 90.3}}},
            {{{0.7355, 82.5, 0.648, 89.9}, {0.835, 88.9, 0.712, 89.2}, {1.292, 86.0, 1.039, 90.7}}},
            {{{0.789, 81.9, 0.684, 90.2}, {0.920, 86.7, 0.723, 89.7}, {1.419, 84.8, 1.063, 90.7}}},
        }};
    static const IntervalTable t6{
        6,
        {2.0, 0.5, 1.0},
        10000,
        1000,
        {
            {{{1.774, 81.4, 1.515, 90.1}, {1.169, 87.6, 0.873, 89.8}, {1.875, 85.7, 1.300, 91.9}}},
            {{{1.813, 79.7, 1.521, 89.1}, {1.332, 88.1, 0.948, 90.0}, {2.227, 83.1, 1.440, 93.0}}},
            {{{2.101, 78.6, 1.722, 90.0}, {1.765, 86.4, 1.074, 91.2}, {3.010, 83.5, 1.708, 93.7}}},
            {{{1.461, 80.9, 1.294, 89.8}, {0.821, 88.0, 0.699, 88.9}, {1.237, 86.6, 1.014, 90.0}}},
            {{{1.478, 81.0, 1.296, 89.8}, {0.844, 88.7, 0.713, 89.0}, {1.294, 86.2, 1.044, 90.5}}},
            {{{1.555, 83.3, 1.374, 89.3}, {0.883, 89.6, 0.724, 89.3}, {1.386, 86.0, 1.066, 91.5}}},
        }};
    switch (id) {
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        default: throw std::invalid_argument("interval_table: id must be 4, 5 or 6");
    }
}

// Tables 7-9: expected volume (8x scale, see header note) and expected time on
// test for single-block families, 50,000 / 10,000 replications.
struct VolumeRow {
    int m;
    int k;
    int block_position;      // 1-based slot of the size-5 removal block
    double expected_volume;  // published 8x scale
    double etot;
};

struct VolumeTable {
    int id;
    ParamTriple truth;
    long base_volume_reps;
    long base_etot_reps;
    int block_size;
    std::vector<VolumeRow> rows;
};

inline const VolumeTable& volume_table(int id) {
    static const VolumeTable t7{
        7,
        {0.5, 0.5, 1.0},
        50000,
        10000,
        5,
        {
            {25, 20, 1, 12.463, 6.420},  {25, 20, 2, 12.583, 6.383},
            {25, 20, 3, 12.845, 6.369},  {25, 20, 4, 13.032, 6.245},
            {25, 20, 5, 13.243, 6.181},  {25, 20, 9, 14.614, 6.043},
            {25, 20, 15, 17.319, 5.092}, {25, 20, 17, 20.768, 4.458},
            {25, 20, 18, 20.918, 3.884}, {25, 20, 19, 22.883, 3.023},
            {30, 25, 1, 9.616, 7.181},   {30, 25, 2, 9.718, 7.145},
            {30, 25, 3, 9.743, 7.081},   {30, 25, 4, 9.834, 7.074},
            {30, 25, 6, 9.908, 6.986},   {30, 25, 9, 10.304, 6.954},
            {30, 25, 13, 10.680, 6.675}, {30, 25, 16, 11.217, 6.454},
            {30, 25, 19, 12.045, 5.934}, {30, 25, 24, 14.197, 3.451},
        }};
    static const VolumeTable t8{
        8,
        {1.0, 0.5, 1.0},
        50000,
        10000,
        5,
        {
            {25, 20, 1, 24.360, 2.393},  {25, 20, 2, 25.214, 2.384},
            {25, 20, 3, 25.524, 2.374},  {25, 20, 4, 26.034, 2.366},
            {25, 20, 5, 26.513, 2.359},  {25, 20, 9, 28.065, 2.300},
            {25, 20, 15, 36.513, 2.120}, {25, 20, 17, 38.831, 1.963},
            {25, 20, 18, 40.552, 1.816}, {25, 20, 19, 46.317, 1.582},
            {30, 25, 1, 19.331, 2.549},  {30, 25, 2, 19.414, 2.536},
            {30, 25, 3, 19.538, 2.524},  {30, 25, 4, 19.895, 2.523},
            {30, 25, 6, 20.094, 2.522},  {30, 25, 9, 20.665, 2.488},
            {30, 25, 13, 21.478, 2.445}, {30, 25, 16, 22.538, 2.374},
            {30, 25, 19, 23.846, 2.274}, {30, 25, 24, 28.662, 1.692},
        }};
    static const VolumeTable t9{
        9,
        {2.0, 0.5, 1.0},
        50000,
        10000,
        5,
        {
            {25, 20, 1, 49.927, 1.523},  {25, 20, 2, 50.653, 1.522},
            {25, 20, 3, 51.265, 1.515},  {25, 20, 4, 51.578, 1.512},
            {25, 20, 5, 52.719, 1.508},  {25, 20, 9, 57.245, 1.492},
            {25, 20, 15, 67.359, 1.424}, {25, 20, 17, 77.601, 1.365},
            {25, 20, 18, 88.436, 1.322}, {25, 20, 19, 89.061, 1.229},
            {30, 25, 1, 38.486, 1.572},  {30, 25, 2, 38.571, 1.572},
            {30, 25, 3, 38.781, 1.569},  {30, 25, 4, 39.411, 1.568},
            {30, 25, 6, 40.220, 1.561},  {30, 25, 9, 41.074, 1.560},
            {30, 25, 13, 43.549, 1.538}, {30, 25, 16, 45.367, 1.517},
            {30, 25, 19, 48.084, 1.486}, {30, 25, 24, 55.966, 1.277},
        }};
    switch (id) {
        case 7: return t7;
        case 8: return t8;
        case 9: return t9;
        default: throw std::invalid_argument("volume_table: id must be 7, 8 or 9");
    }
}

// --- real data (air-conditioning failure times, two airplanes) --------------

inline const std::vector<double>& plane_7914_times() {
    static const std::vector<double> t = {3,  5,  5,  13, 14, 15, 22, 22,  23,  30,  36,  39,
                                          44, 46, 50, 72, 79, 88, 97, 102, 139, 188, 197, 210};
    return t;
}

inline const std::vector<double>& plane_7913_times() {
    static const std::vector<double> t = {1,  4,  11, 16, 18,  18,  24,  31,  39,  46,  51, 54,
                                          63, 68, 77, 80, 82,  97,  106, 141, 163, 191, 206, 216};
    return t;
}

// The two jointly censored samples derived from the planes data
// (population A, z = 1, is plane 7914).
inline const BjpcSample& scheme1_sample() {
    static const BjpcSample s = make_sample(
        validate_scheme(24, 10, {14, 0, 0, 0, 0, 0, 0, 0, 0}),
        {1, 4, 5, 13, 15, 16, 22, 36, 80, 97}, {0, 0, 1, 1, 1, 0, 1, 1, 0, 0});
    return s;
}

inline const BjpcSample& scheme2_sample() {
    static const BjpcSample s = make_sample(
        validate_scheme(24, 10, {2, 2, 2, 2, 2, 2, 2, 0, 0}),
        {1, 3, 4, 5, 5, 13, 14, 31, 44, 51}, {0, 1, 0, 1, 1, 1, 1, 0, 1, 0});
    return s;
}

// Tables 10 / 12: point estimates; values ordered (alpha, lambda1, lambda2).
struct GoldenFit {
    double mle[3];
    double amle[3];
};

inline const GoldenFit& golden_fit(int scheme_id) {
    static const GoldenFit s1{{0.983459, 0.017541, 0.017541}, {0.982218, 0.017622, 0.017622}};
    static const GoldenFit s2{{1.1740, 0.01367, 0.009116}, {1.1612, 0.01421, 0.009479}};
    if (scheme_id == 1) return s1;
    if (scheme_id == 2) return s2;
    throw std::invalid_argument("golden_fit: scheme id must be 1 or 2");
}

// Tables 11 / 13: 90% intervals, [param][0] = lower, [param][1] = upper.
struct GoldenCi {
    double asymptotic[3][2];
    double bootstrap[3][2];
};

inline const GoldenCi& golden_ci(int scheme_id) {
    static const GoldenCi s1{
        {{0.6508, 1.3160}, {0.0, 0.0426}, {0.0, 0.0426}},
        {{0.7253, 1.5900}, {0.001641, 0.05592}, {0.001644, 0.05623}}};
    static const GoldenCi s2{
        {{0.7533, 1.5947}, {0.0, 0.03351}, {0.0, 0.02303}},
        {{0.91046, 2.036402}, {0.001241, 0.03696}, {0.0007122, 0.02532}}};
    if (scheme_id == 1) return s1;
    if (scheme_id == 2) return s2;
    throw std::invalid_argument("golden_ci: scheme id must be 1 or 2");
}

}  // namespace bjpc::reference

#endif  // BJPC_REFERENCE_TABLES_HPP
