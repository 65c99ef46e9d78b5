// End-to-end checks of the command-line surface: runs the built binary.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bjpc/estimate.hpp"
#include "bjpc/io.hpp"
#include "bjpc/reference_tables.hpp"
#include "bjpc/region.hpp"

using nlohmann::json;

namespace {

const std::string kCli = BJPC_CLI_PATH;
const std::string kData = BJPC_DATA_DIR;

struct RunResult {
    int status = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const auto out_path = std::filesystem::temp_directory_path() / "bjpc_cli_out.txt";
    const std::string cmd = kCli + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult res;
    res.status = WEXITSTATUS(raw);
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.output = buf.str();
    std::filesystem::remove(out_path);
    return res;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("fit command reproduces the bundled real-data estimates") {
    const auto res = run("fit --data " + kData + "/scheme1.json --method both");
    REQUIRE(res.status == 0);
    const json out = json::parse(res.output);
    CHECK(out.at("mle").at("alpha").get<double>() == Catch::Approx(0.983459).epsilon(1e-3));
    CHECK(out.at("mle").at("lambda1").get<double>() == Catch::Approx(0.017541).epsilon(1e-3));
    CHECK(out.at("amle").at("alpha").get<double>() == Catch::Approx(0.982218).epsilon(1e-3));
}

TEST_CASE("fit command accepts the CSV form with an explicit scheme") {
    const auto res = run("fit --data " + kData + "/scheme2.csv --m 24 --k 10 --R 2x7,0x2" +
                         " --method mle");
    REQUIRE(res.status == 0);
    const json out = json::parse(res.output);
    CHECK(out.at("mle").at("alpha").get<double>() == Catch::Approx(1.1740).epsilon(1e-3));
    CHECK(out.at("mle").at("lambda2").get<double>() == Catch::Approx(0.009116).epsilon(1e-3));
}

TEST_CASE("simulate is byte-identical for a fixed seed and differs across seeds") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto f1 = dir / "bjpc_sim1.json";
    const auto f2 = dir / "bjpc_sim2.json";
    const auto f3 = dir / "bjpc_sim3.json";
    const std::string argset =
        "simulate --m 25 --k 15 --R 7,0x13 --alpha 0.5 --lambda1 0.5 --lambda2 1 --seed 99";
    REQUIRE(run(argset + " --out " + f1.string()).status == 0);
    REQUIRE(run(argset + " --out " + f2.string()).status == 0);
    REQUIRE(run("simulate --m 25 --k 15 --R 7,0x13 --alpha 0.5 --lambda1 0.5 --lambda2 1"
                " --seed 100 --out " +
                f3.string())
                .status == 0);
    CHECK(slurp(f1) == slurp(f2));
    CHECK(slurp(f1) != slurp(f3));
    const auto parsed = bjpc::read_dataset_json(f1.string());
    CHECK(parsed.scheme.m == 25);
    CHECK(parsed.scheme.k == 15);
    std::filesystem::remove(f1);
    std::filesystem::remove(f2);
    std::filesystem::remove(f3);
}

TEST_CASE("region --emit-boundary is consistent with the library bounds") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv_path = dir / "bjpc_boundary.csv";
    const auto res = run("region --data " + kData + "/scheme1.json --gamma 0.1 --emit-boundary " +
                         csv_path.string());
    REQUIRE(res.status == 0);
    const json out = json::parse(res.output);
    CHECK(out.at("gamma1").get<double>() == Catch::Approx(0.0513167).epsilon(1e-4));

    const auto& sample = bjpc::reference::scheme1_sample();
    const double alpha_hat = bjpc::fit_mle(sample).fit.params.alpha;

    std::ifstream csv(csv_path);
    std::string line;
    std::getline(csv, line);
    CHECK(line == "alpha,sum_lower,sum_upper");
    bool saw_mle_row = false;
    while (std::getline(csv, line)) {
        std::istringstream row(line);
        std::string a_s, lo_s, hi_s;
        std::getline(row, a_s, ',');
        std::getline(row, lo_s, ',');
        std::getline(row, hi_s, ',');
        const double a = std::stod(a_s);
        const auto [lo, hi] = bjpc::lambda_sum_bounds(sample, a,
                                                      bjpc::Probability(out.at("gamma2")));
        CHECK(std::stod(lo_s) == Catch::Approx(lo).epsilon(1e-12));
        CHECK(std::stod(hi_s) == Catch::Approx(hi).epsilon(1e-12));
        if (std::fabs(a - alpha_hat) < 1e-9) saw_mle_row = true;
    }
    CHECK(saw_mle_row);
    std::filesystem::remove(csv_path);
}

TEST_CASE("reproduce of the deterministic tables passes") {
    CHECK(run("reproduce 10").status == 0);
    CHECK(run("reproduce 12").status == 0);
}

TEST_CASE("exit codes distinguish usage, validation, and numerical failures") {
    CHECK(run("fit").status != 0);                                    // usage: missing --data
    CHECK(run("nonsense").status != 0);                               // usage: unknown command
    const auto dir = std::filesystem::temp_directory_path();
    const auto bad = dir / "bjpc_bad.json";
    {
        std::ofstream out(bad);
        out << "{\"m\": 10, \"k\": 5, \"R\": [6,0,0,0], \"w\": [1,2,3,4,5],"
               " \"z\": [1,0,1,0,1]}\n";
    }
    CHECK(run("fit --data " + bad.string()).status == 3);             // scheme constraint
    std::filesystem::remove(bad);
}
