// Command-line front end: simulate, fit, ci, region, ocs, reproduce.
//
// Machine-readable output (JSON or CSV) goes to stdout or --out; human
// summaries go to stderr. Exit codes: 0 success, 1 reproduction check failed,
// 2 usage error, 3 validation error, 4 numerical failure.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bjpc/bjpc.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BJPC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("BJPC_SEED must be an unsigned integer");
        }
    }
    return 20250810ULL;
}

struct DatasetArgs {
    std::string path;
    int m = 0;
    int k = 0;
    std::string removal_pattern;
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
    cmd->add_option("--data", args.path, "dataset file (.json, or .csv with --m/--k/--R)")
        ->required();
    cmd->add_option("--m", args.m, "sample size per population (CSV input only)");
    cmd->add_option("--k", args.k, "effective sample size (CSV input only)");
    cmd->add_option("--R", args.removal_pattern, "removal counts, e.g. 7,0x13 (CSV input only)");
}

bjpc::BjpcSample load_dataset(const DatasetArgs& args) {
    const bool csv = args.path.size() >= 4 &&
                     args.path.compare(args.path.size() - 4, 4, ".csv") == 0;
    if (!csv) return bjpc::read_dataset_json(args.path);
    if (args.m == 0 || args.k == 0)
        throw std::invalid_argument("CSV input needs --m, --k and --R");
    const bjpc::CensoringScheme scheme =
        bjpc::validate_scheme(args.m, args.k, bjpc::parse_removal_pattern(args.removal_pattern));
    return bjpc::read_dataset_csv(args.path, scheme);
}

void emit(const json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << payload.dump(2) << "\n";
    }
}

json fit_to_json(const bjpc::WeibullFit& fit) {
    return json{{"method", fit.method == bjpc::FitMethod::Mle ? "mle" : "amle"},
                {"alpha", fit.params.alpha},
                {"lambda1", fit.params.lambda1},
                {"lambda2", fit.params.lambda2},
                {"converged", fit.converged},
                {"score_residual", fit.score_residual}};
}

json interval_to_json(const bjpc::IntervalEstimate& iv) {
    static const char* names[] = {"alpha", "lambda1", "lambda2"};
    return json{{"parameter", names[static_cast<int>(iv.parameter)]},
                {"lower", iv.lower},
                {"upper", iv.upper},
                {"level", iv.level},
                {"method",
                 iv.method == bjpc::IntervalMethod::Asymptotic ? "asymptotic" : "bootstrap"}};
}

// ---------------------------------------------------------------------------
// reproduce: regenerate one published table and report value-by-value checks.

struct CheckReport {
    int checked = 0;
    int failed = 0;

    void line(const std::string& label, double reference, double reproduced, double se,
              std::optional<bool> pass) {
        std::string verdict = "  info";
        if (pass.has_value()) {
            ++checked;
            if (!*pass) ++failed;
            verdict = *pass ? "  pass" : "  FAIL";
        }
        std::printf("  %-34s ref %10.4f   got %10.4f   se %8.4f %s\n", label.c_str(), reference,
                    reproduced, se, verdict.c_str());
    }
};

long scaled(long base, double scale) {
    const long n = std::lround(base * scale);
    return std::max<long>(n, 2);
}

int reproduce_estimates(int table_id, double scale, std::uint64_t seed) {
    const auto& table = bjpc::reference::estimate_table(table_id);
    const auto& schemes = bjpc::reference::battery_schemes();
    const bjpc::WeibullParams truth(table.truth.alpha, table.truth.lambda1, table.truth.lambda2);
    const long reps = scaled(table.base_reps, scale);
    std::printf("table %d: AE/MSE at alpha=%g, %ld replications\n", table_id, truth.alpha, reps);
    CheckReport report;
    static const char* params[] = {"alpha", "lambda1", "lambda2"};
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const auto scheme = bjpc::validate_scheme(schemes[i].m, schemes[i].k, schemes[i].removals);
        const auto res = bjpc::experiments::ae_mse(
            scheme, truth, reps, bjpc::RngStream(seed, 0x1000 * table_id + i));
        std::printf(" %s\n", schemes[i].label.c_str());
        for (int p = 0; p < 3; ++p) {
            const auto& ref = table.rows[i].values[p];
            // pass/fail is gated on the shape parameter only
            const bool gate = (p == 0);
            auto maybe = [&](bool ok) {
                return gate ? std::optional<bool>(ok) : std::nullopt;
            };
            report.line(std::string(params[p]) + " AE (MLE)", ref[0], res.mle.ae[p],
                        res.mle.ae_se[p], maybe(std::fabs(res.mle.ae[p] - ref[0]) <= 0.02));
            report.line(std::string(params[p]) + " MSE (MLE)", ref[1], res.mle.mse[p],
                        res.mle.mse_se[p], maybe(std::fabs(res.mle.mse[p] - ref[1]) <= 0.01));
            report.line(std::string(params[p]) + " AE (AMLE)", ref[2], res.amle.ae[p],
                        res.amle.ae_se[p], maybe(std::fabs(res.amle.ae[p] - ref[2]) <= 0.02));
            report.line(std::string(params[p]) + " MSE (AMLE)", ref[3], res.amle.mse[p],
                        res.amle.mse_se[p], maybe(std::fabs(res.amle.mse[p] - ref[3]) <= 0.01));
        }
    }
    std::printf("table %d: %d/%d gated checks passed\n", table_id, report.checked - report.failed,
                report.checked);
    return report.failed == 0 ? 0 : 1;
}

int reproduce_intervals(int table_id, double scale, std::uint64_t seed, long boot_override) {
    const auto& table = bjpc::reference::interval_table(table_id);
    const auto& schemes = bjpc::reference::battery_schemes();
    const bjpc::WeibullParams truth(table.truth.alpha, table.truth.lambda1, table.truth.lambda2);
    const long outer = scaled(table.base_reps, scale);
    const long boot = boot_override > 0 ? boot_override : table.boot_reps;
    std::printf("table %d: 90%% CI length/coverage at alpha=%g, %ld outer x %ld bootstrap\n",
                table_id, truth.alpha, outer, boot);
    CheckReport report;
    static const char* params[] = {"alpha", "lambda1", "lambda2"};
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const auto scheme = bjpc::validate_scheme(schemes[i].m, schemes[i].k, schemes[i].removals);
        const auto res = bjpc::experiments::ci_coverage(
            scheme, truth, bjpc::Probability(0.90), outer, boot,
            bjpc::RngStream(seed, 0x1000 * table_id + i));
        std::printf(" %s\n", schemes[i].label.c_str());
        for (int p = 0; p < 3; ++p) {
            const auto& ref = table.rows[i].values[p];
            // gate: asymptotic coverage of alpha within the published band
            const bool gate = (p == 0 && table_id == 4);
            report.line(std::string(params[p]) + " AL (boot)", ref[0], res.boot_al[p], 0.0,
                        std::nullopt);
            report.line(std::string(params[p]) + " CP%% (boot)", ref[1], res.boot_cp[p], 0.0,
                        std::nullopt);
            report.line(std::string(params[p]) + " AL (asym)", ref[2], res.asym_al[p], 0.0,
                        std::nullopt);
            report.line(std::string(params[p]) + " CP%% (asym)", ref[3], res.asym_cp[p], 0.0,
                        gate ? std::optional<bool>(res.asym_cp[p] >= 87.0 && res.asym_cp[p] <= 93.0)
                             : std::nullopt);
        }
    }
    std::printf("table %d: %d/%d gated checks passed\n", table_id, report.checked - report.failed,
                report.checked);
    return report.failed == 0 ? 0 : 1;
}

int reproduce_volumes(int table_id, double scale, std::uint64_t seed) {
    const auto& table = bjpc::reference::volume_table(table_id);
    const bjpc::WeibullParams truth(table.truth.alpha, table.truth.lambda1, table.truth.lambda2);
    const long vol_reps = scaled(table.base_volume_reps, scale);
    const long etot_reps = scaled(table.base_etot_reps, scale);
    const double tol = table_id == 7 ? 0.05 : (table_id == 9 ? 0.07 : 0.06);
    std::printf(
        "table %d: E(Vol) (published 8x scale) and ETOT at alpha=%g, %ld / %ld replications\n",
        table_id, truth.alpha, vol_reps, etot_reps);
    CheckReport report;
    // rows come in two (m, k) families
    std::size_t i = 0;
    while (i < table.rows.size()) {
        const int m = table.rows[i].m;
        const int k = table.rows[i].k;
        std::vector<int> positions;
        std::vector<const bjpc::reference::VolumeRow*> refs;
        while (i < table.rows.size() && table.rows[i].m == m && table.rows[i].k == k) {
            positions.push_back(table.rows[i].block_position);
            refs.push_back(&table.rows[i]);
            ++i;
        }
        const auto rows = bjpc::experiments::volume_family(
            m, k, table.block_size, positions, truth, bjpc::Probability(0.10), vol_reps,
            etot_reps, bjpc::RngStream(seed, 0x2000 * table_id + m));
        std::printf(" family m=%d, k=%d\n", m, k);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const double vol8 = 8.0 * rows[r].volume.mean;
            const double ref_vol = refs[r]->expected_volume;
            char label[64];
            std::snprintf(label, sizeof label, "E(Vol) block at %d", rows[r].block_position);
            report.line(label, ref_vol, vol8, 8.0 * rows[r].volume.std_error,
                        std::fabs(vol8 - ref_vol) <= tol * ref_vol);
            std::snprintf(label, sizeof label, "ETOT   block at %d", rows[r].block_position);
            report.line(label, refs[r]->etot, rows[r].etot.mean, rows[r].etot.std_error,
                        std::fabs(rows[r].etot.mean - refs[r]->etot) <= 0.03 * refs[r]->etot);
        }
    }
    std::printf("table %d: %d/%d gated checks passed\n", table_id, report.checked - report.failed,
                report.checked);
    return report.failed == 0 ? 0 : 1;
}

int reproduce_golden_fit(int table_id) {
    const int scheme_id = table_id == 10 ? 1 : 2;
    const auto& sample = scheme_id == 1 ? bjpc::reference::scheme1_sample()
                                        : bjpc::reference::scheme2_sample();
    const auto& golden = bjpc::reference::golden_fit(scheme_id);
    const auto mle = bjpc::fit_mle(sample).fit;
    const auto amle = bjpc::fit_amle(sample);
    std::printf("table %d: real-data point estimates (scheme %d)\n", table_id, scheme_id);
    CheckReport report;
    static const char* params[] = {"alpha", "lambda1", "lambda2"};
    const double got_mle[3] = {mle.params.alpha, mle.params.lambda1, mle.params.lambda2};
    const double got_amle[3] = {amle.params.alpha, amle.params.lambda1, amle.params.lambda2};
    for (int p = 0; p < 3; ++p) {
        report.line(std::string(params[p]) + " (MLE)", golden.mle[p], got_mle[p], 0.0,
                    std::fabs(got_mle[p] - golden.mle[p]) <= 1e-3 * golden.mle[p]);
        report.line(std::string(params[p]) + " (AMLE)", golden.amle[p], got_amle[p], 0.0,
                    std::fabs(got_amle[p] - golden.amle[p]) <= 1e-3 * golden.amle[p]);
    }
    std::printf("table %d: %d/%d gated checks passed\n", table_id, report.checked - report.failed,
                report.checked);
    return report.failed == 0 ? 0 : 1;
}

int reproduce_golden_ci(int table_id, std::uint64_t seed, long boot_override) {
    const int scheme_id = table_id == 11 ? 1 : 2;
    const auto& sample = scheme_id == 1 ? bjpc::reference::scheme1_sample()
                                        : bjpc::reference::scheme2_sample();
    const auto& golden = bjpc::reference::golden_ci(scheme_id);
    const auto fit = bjpc::fit_mle(sample).fit;
    const auto asym = bjpc::asymptotic_ci(sample, fit, bjpc::Probability(0.90));
    const long boot_reps = boot_override > 0 ? boot_override : 1000;
    const auto boot = bjpc::bootstrap_ci(sample, fit, bjpc::Probability(0.90), boot_reps,
                                         bjpc::RngStream(seed, 0xC1 * scheme_id));
    std::printf("table %d: real-data 90%% intervals (scheme %d)\n", table_id, scheme_id);
    CheckReport report;
    static const char* params[] = {"alpha", "lambda1", "lambda2"};
    for (int p = 0; p < 3; ++p) {
        report.line(std::string(params[p]) + " asym lower", golden.asymptotic[p][0],
                    asym[p].lower, 0.0,
                    std::fabs(asym[p].lower - golden.asymptotic[p][0]) <= 2e-3);
        report.line(std::string(params[p]) + " asym upper", golden.asymptotic[p][1],
                    asym[p].upper, 0.0,
                    std::fabs(asym[p].upper - golden.asymptotic[p][1]) <= 2e-3);
        // bootstrap endpoints carry resampling noise; 10% relative band
        report.line(std::string(params[p]) + " boot lower", golden.bootstrap[p][0], boot[p].lower,
                    0.0,
                    std::fabs(boot[p].lower - golden.bootstrap[p][0]) <=
                        0.10 * std::fabs(golden.bootstrap[p][0]));
        report.line(std::string(params[p]) + " boot upper", golden.bootstrap[p][1], boot[p].upper,
                    0.0,
                    std::fabs(boot[p].upper - golden.bootstrap[p][1]) <=
                        0.10 * std::fabs(golden.bootstrap[p][1]));
    }
    std::printf("table %d: %d/%d gated checks passed\n", table_id, report.checked - report.failed,
                report.checked);
    return report.failed == 0 ? 0 : 1;
}

int run_reproduce(int table_id, double scale, std::uint64_t seed, long boot_reps) {
    switch (table_id) {
        case 1:
        case 2:
        case 3:
            return reproduce_estimates(table_id, scale, seed);
        case 4:
        case 5:
        case 6:
            return reproduce_intervals(table_id, scale, seed, boot_reps);
        case 7:
        case 8:
        case 9:
            return reproduce_volumes(table_id, scale, seed);
        case 10:
        case 12:
            return reproduce_golden_fit(table_id);
        case 11:
        case 13:
            return reproduce_golden_ci(table_id, seed, boot_reps);
        default:
            throw std::invalid_argument("reproduce: table id must be in 1..13");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-sample Weibull inference under balanced joint progressive censoring"};
    app.require_subcommand(1);

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "draw one censored sample and emit it as JSON");
    int sim_m = 0, sim_k = 0;
    std::string sim_pattern;
    double sim_alpha = 1.0, sim_l1 = 1.0, sim_l2 = 1.0;
    std::uint64_t sim_seed = 0, sim_stream = 0;
    bool sim_seed_set = false;
    std::string sim_out;
    bool sim_mechanism = false;
    sim->add_option("--m", sim_m)->required();
    sim->add_option("--k", sim_k)->required();
    sim->add_option("--R", sim_pattern, "removal counts, e.g. 5,0x18")->required();
    sim->add_option("--alpha", sim_alpha)->required();
    sim->add_option("--lambda1", sim_l1)->required();
    sim->add_option("--lambda2", sim_l2)->required();
    sim->add_option("--seed", sim_seed)->each([&](const std::string&) { sim_seed_set = true; });
    sim->add_option("--stream", sim_stream, "stream id (default 0)");
    sim->add_flag("--mechanism", sim_mechanism, "use the literal withdrawal protocol");
    sim->add_option("--out", sim_out, "write dataset JSON here instead of stdout");

    // --- fit ---
    auto* fit_cmd = app.add_subcommand("fit", "point estimates from a dataset");
    DatasetArgs fit_data;
    std::string fit_method = "both", fit_out;
    add_dataset_options(fit_cmd, fit_data);
    fit_cmd->add_option("--method", fit_method)
        ->check(CLI::IsMember({"mle", "amle", "both"}));
    fit_cmd->add_option("--out", fit_out);

    // --- ci ---
    auto* ci_cmd = app.add_subcommand("ci", "confidence intervals from a dataset");
    DatasetArgs ci_data;
    std::string ci_method = "both", ci_out;
    double ci_level = 0.90;
    long ci_boot = 1000;
    std::uint64_t ci_seed = 0;
    bool ci_seed_set = false;
    add_dataset_options(ci_cmd, ci_data);
    ci_cmd->add_option("--level", ci_level);
    ci_cmd->add_option("--method", ci_method)
        ->check(CLI::IsMember({"asymptotic", "bootstrap", "both"}));
    ci_cmd->add_option("--boot-reps", ci_boot);
    ci_cmd->add_option("--seed", ci_seed)->each([&](const std::string&) { ci_seed_set = true; });
    ci_cmd->add_option("--out", ci_out);

    // --- region ---
    auto* region_cmd = app.add_subcommand("region", "exact joint confidence region");
    DatasetArgs region_data;
    double region_gamma = 0.10;
    double region_gamma1 = -1.0;
    int region_grid = 401;
    std::string region_boundary, region_alphas, region_out;
    add_dataset_options(region_cmd, region_data);
    region_cmd->add_option("--gamma", region_gamma, "overall miss probability");
    region_cmd->add_option("--gamma1", region_gamma1, "shape-interval split (default equalized)");
    region_cmd->add_option("--grid", region_grid, "trapezoidal-rule grid points");
    region_cmd->add_option("--emit-boundary", region_boundary,
                           "write (alpha, lower, upper) CSV rows here");
    region_cmd->add_option("--boundary-alphas", region_alphas,
                           "comma-separated alphas for --emit-boundary "
                           "(default: MLE, interval ends, midpoint)");
    region_cmd->add_option("--out", region_out);

    // --- ocs ---
    auto* ocs_cmd = app.add_subcommand("ocs", "rank censoring plans by expected region volume");
    int ocs_m = 0, ocs_k = 0, ocs_block = 0, ocs_grid = 401;
    std::string ocs_family = "single_block", ocs_params_text, ocs_out;
    double ocs_gamma = 0.10;
    long ocs_reps = 5000, ocs_etot_reps = 10000;
    std::uint64_t ocs_seed = 0;
    bool ocs_seed_set = false;
    ocs_cmd->add_option("--m", ocs_m)->required();
    ocs_cmd->add_option("--k", ocs_k)->required();
    ocs_cmd->add_option("--family", ocs_family)
        ->check(CLI::IsMember({"single_block", "exhaustive"}));
    ocs_cmd->add_option("--block-size", ocs_block);
    ocs_cmd->add_option("--gamma", ocs_gamma);
    ocs_cmd->add_option("--reps", ocs_reps);
    ocs_cmd->add_option("--etot-reps", ocs_etot_reps);
    ocs_cmd->add_option("--design-params", ocs_params_text, "alpha,lambda1,lambda2")->required();
    ocs_cmd->add_option("--seed", ocs_seed)->each([&](const std::string&) { ocs_seed_set = true; });
    ocs_cmd->add_option("--grid", ocs_grid);
    ocs_cmd->add_option("--out", ocs_out, "write ranked CSV here instead of stdout");

    // --- reproduce ---
    auto* rep_cmd = app.add_subcommand("reproduce", "regenerate a published reference table");
    int rep_table = 0;
    double rep_scale = 1.0;
    std::uint64_t rep_seed = 0;
    bool rep_seed_set = false;
    long rep_boot = 0;
    rep_cmd->add_option("table", rep_table, "table id, 1..13")->required();
    rep_cmd->add_option("--scale", rep_scale, "replication-count multiplier");
    rep_cmd->add_option("--seed", rep_seed)->each([&](const std::string&) { rep_seed_set = true; });
    rep_cmd->add_option("--boot-reps", rep_boot, "override bootstrap resamples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const auto scheme =
                bjpc::validate_scheme(sim_m, sim_k, bjpc::parse_removal_pattern(sim_pattern));
            const bjpc::WeibullParams params(sim_alpha, sim_l1, sim_l2);
            bjpc::RngStream rng(sim_seed_set ? sim_seed : default_seed(), sim_stream);
            const auto sample = sim_mechanism ? bjpc::simulate_mechanism(scheme, params, rng)
                                              : bjpc::simulate_spacings(scheme, params, rng);
            emit(bjpc::dataset_to_json(sample), sim_out);
            std::fprintf(stderr, "simulated k=%d failures, k1=%d from population A\n",
                         scheme.k, sample.k1());
        } else if (fit_cmd->parsed()) {
            const auto sample = load_dataset(fit_data);
            json out = json::object();
            if (fit_method != "amle") {
                const auto res = bjpc::fit_mle(sample);
                out["mle"] = fit_to_json(res.fit);
                out["mle"]["iterations"] = res.diagnostics.iterations;
                std::fprintf(stderr, "MLE : alpha=%.6g lambda1=%.6g lambda2=%.6g\n",
                             res.fit.params.alpha, res.fit.params.lambda1,
                             res.fit.params.lambda2);
            }
            if (fit_method != "mle") {
                const auto fit = bjpc::fit_amle(sample);
                out["amle"] = fit_to_json(fit);
                std::fprintf(stderr, "AMLE: alpha=%.6g lambda1=%.6g lambda2=%.6g\n",
                             fit.params.alpha, fit.params.lambda1, fit.params.lambda2);
            }
            emit(out, fit_out);
        } else if (ci_cmd->parsed()) {
            const auto sample = load_dataset(ci_data);
            const auto fit = bjpc::fit_mle(sample).fit;
            json out = json::object();
            out["fit"] = fit_to_json(fit);
            if (ci_method != "bootstrap") {
                const auto asym = bjpc::asymptotic_ci(sample, fit, bjpc::Probability(ci_level));
                out["asymptotic"] = json::array();
                for (const auto& iv : asym) out["asymptotic"].push_back(interval_to_json(iv));
            }
            if (ci_method != "asymptotic") {
                bjpc::BootstrapDiagnostics diag;
                const auto boot = bjpc::bootstrap_ci(
                    sample, fit, bjpc::Probability(ci_level), ci_boot,
                    bjpc::RngStream(ci_seed_set ? ci_seed : default_seed(), 0xB0), &diag);
                out["bootstrap"] = json::array();
                for (const auto& iv : boot) out["bootstrap"].push_back(interval_to_json(iv));
                out["bootstrap_discarded"] = diag.discarded;
            }
            emit(out, ci_out);
        } else if (region_cmd->parsed()) {
            const auto sample = load_dataset(region_data);
            std::optional<double> split;
            if (region_gamma1 > 0.0) split = region_gamma1;
            const auto region =
                bjpc::joint_region(sample, bjpc::Probability(region_gamma), split, region_grid);
            json out{{"gamma", region.gamma},
                     {"gamma1", region.gamma1},
                     {"gamma2", region.gamma2},
                     {"alpha_lower", region.alpha_interval.first},
                     {"alpha_upper", region.alpha_interval.second},
                     {"volume", region.volume}};
            if (!region_boundary.empty()) {
                std::vector<double> alphas;
                if (!region_alphas.empty()) {
                    std::istringstream in(region_alphas);
                    std::string tok;
                    while (std::getline(in, tok, ',')) alphas.push_back(std::stod(tok));
                } else {
                    const auto fit = bjpc::fit_mle(sample).fit;
                    alphas = {fit.params.alpha, region.alpha_interval.first,
                              0.5 * (region.alpha_interval.first + region.alpha_interval.second),
                              region.alpha_interval.second};
                }
                std::ofstream csv(region_boundary);
                if (!csv) throw std::runtime_error("cannot open " + region_boundary);
                csv << "alpha,sum_lower,sum_upper\n";
                csv.precision(17);
                for (double a : alphas) {
                    const auto [lo, hi] = region.sum_bounds(a);
                    csv << a << "," << lo << "," << hi << "\n";
                }
                out["boundary_file"] = region_boundary;
            }
            emit(out, region_out);
            std::fprintf(stderr, "alpha in (%.4f, %.4f), volume %.6g\n",
                         region.alpha_interval.first, region.alpha_interval.second,
                         region.volume);
        } else if (ocs_cmd->parsed()) {
            double pa = 0, pl1 = 0, pl2 = 0;
            if (std::sscanf(ocs_params_text.c_str(), "%lf,%lf,%lf", &pa, &pl1, &pl2) != 3)
                throw std::invalid_argument("--design-params expects alpha,lambda1,lambda2");
            const bjpc::WeibullParams params(pa, pl1, pl2);
            const auto family = ocs_family == "exhaustive" ? bjpc::SchemeFamily::Exhaustive
                                                           : bjpc::SchemeFamily::SingleBlock;
            const auto ranked = bjpc::search_optimum(
                ocs_m, ocs_k, params, bjpc::Probability(ocs_gamma), family, ocs_block, ocs_reps,
                bjpc::RngStream(ocs_seed_set ? ocs_seed : default_seed(), 0x0C5),
                ocs_grid, ocs_etot_reps);
            std::ostringstream csv;
            csv << "rank,R,expected_volume,volume_se,etot,etot_se\n";
            csv.precision(10);
            for (std::size_t i = 0; i < ranked.size(); ++i) {
                csv << (i + 1) << ",\"";
                for (std::size_t j = 0; j < ranked[i].scheme.removals.size(); ++j)
                    csv << (j ? " " : "") << ranked[i].scheme.removals[j];
                csv << "\"," << ranked[i].expected_volume << "," << ranked[i].volume_se << ","
                    << ranked[i].etot << "," << ranked[i].etot_se << "\n";
            }
            if (ocs_out.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream out(ocs_out);
                if (!out) throw std::runtime_error("cannot open " + ocs_out);
                out << csv.str();
            }
            std::fprintf(stderr, "best scheme: rank 1 of %zu (smallest expected volume)\n",
                         ranked.size());
        } else if (rep_cmd->parsed()) {
            return run_reproduce(rep_table, rep_scale,
                                 rep_seed_set ? rep_seed : default_seed(), rep_boot);
        }
    } catch (const bjpc::SchemeValidationError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}
