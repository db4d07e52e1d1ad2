// Integration tests driving the built CLI binary through std::system.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
    const fs::path log = dir / "cli_output.log";
    const std::string cmd =
        std::string(INTSEMI_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    res.output = ss.str();
    return res;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("intsemi_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("hy-scan on the scalar generator", "[cli]") {
    const auto dir = fresh_dir("hy");
    const auto res = run_cli("--out " + (dir / "out").string() +
                                 " hy-scan --kappa 0 --alpha 0 --omega -1 --a 0",
                             dir);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("verdict bounded") != std::string::npos);
    CHECK(res.output.find("sup = 1") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "hy_report.json"));
    CHECK(fs::exists(dir / "out" / "hy_per_n_max.csv"));

    json rep;
    std::ifstream(dir / "out" / "hy_report.json") >> rep;
    CHECK(rep["verdict"] == "bounded");
    CHECK(std::abs(rep["sup_value"].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("hy-scan exit code on the trivial-forced verdict", "[cli]") {
    const auto dir = fresh_dir("hy2");
    const auto res = run_cli("--out " + (dir / "out").string() +
                                 " hy-scan --kappa 0 --alpha 0.5 --omega -1 --a 0",
                             dir);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("trivial-forced") != std::string::npos);
}

TEST_CASE("gallery sweep manifest", "[cli]") {
    const auto dir = fresh_dir("gallery");
    const auto res = run_cli("--out " + (dir / "out").string() + " gallery --beta-sweep 0.5:4:0.5", dir);
    CHECK(res.exit_code == 0);

    json manifest;
    std::ifstream(dir / "out" / "gallery_manifest.json") >> manifest;
    REQUIRE(manifest.is_array());
    CHECK(manifest.size() == 8);
    for (const auto& row : manifest) {
        if (row["expected_failure"].get<bool>()) continue;
        CHECK(row["pass"].get<bool>());
        const double beta = row["parameter"].get<double>();
        const double expected = beta <= 2.0 ? 1.0 : 2.0 - beta / 2.0;
        CHECK(std::abs(row["expected"].get<double>() - expected) < 1e-12);
    }
}

TEST_CASE("euler study emits a decreasing error column", "[cli]") {
    const auto dir = fresh_dir("euler");
    const auto res = run_cli("--out " + (dir / "out").string() +
                                 " euler --k 1 --t0 1 --n-list 8,32,128",
                             dir);
    CHECK(res.exit_code == 0);

    std::ifstream csv(dir / "out" / "euler_run.csv");
    std::string line;
    std::getline(csv, line);
    CHECK(line == "n,error,runtime_ms");
    double prev = 1e300;
    int rows = 0;
    while (std::getline(csv, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double err = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(err < prev);
        prev = err;
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("identical config and seed produce byte-identical outputs", "[cli]") {
    const auto dir = fresh_dir("determinism");
    const std::string fam = R"('{"kind": "scalar", "a": -1.0}')";
    const auto r1 = run_cli("--out " + (dir / "a").string() + " --seed 7 --family " + fam +
                                " contour-check --sigma 0 --points 6",
                            dir);
    const auto r2 = run_cli("--out " + (dir / "b").string() + " --seed 7 --family " + fam +
                                " contour-check --sigma 0 --points 6",
                            dir);
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(dir / "a" / "contour_check.csv") == slurp(dir / "b" / "contour_check.csv"));

    const auto r3 = run_cli("--out " + (dir / "c").string() + " --seed 8 --family " + fam +
                                " contour-check --sigma 0 --points 6",
                            dir);
    CHECK(r3.exit_code == 0);
    CHECK(slurp(dir / "a" / "contour_check.csv") != slurp(dir / "c" / "contour_check.csv"));
}

TEST_CASE("config file drives a run and schema errors exit 1", "[cli]") {
    const auto dir = fresh_dir("config");
    {
        std::ofstream cfg(dir / "run.json");
        cfg << R"({"schema": 1, "family": {"kind": "scalar", "a": -1.0}})";
    }
    const auto ok = run_cli("--config " + (dir / "run.json").string() + " --out " +
                                (dir / "out").string() + " hy-scan --omega -1 --a 0",
                            dir);
    CHECK(ok.exit_code == 0);

    {
        std::ofstream cfg(dir / "bad.json");
        cfg << R"({"schema": 3})";
    }
    const auto bad = run_cli("--config " + (dir / "bad.json").string() + " hy-scan", dir);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("schema") != std::string::npos);

    {
        std::ofstream cfg(dir / "badfam.json");
        cfg << R"({"schema": 1, "family": {"kind": "scalar"}})";
    }
    const auto badfam = run_cli("--config " + (dir / "badfam.json").string() + " hy-scan", dir);
    CHECK(badfam.exit_code == 1);
    CHECK(badfam.output.find("missing field 'a'") != std::string::npos);
}

TEST_CASE("sector command reports violations with exit 2", "[cli]") {
    const auto dir = fresh_dir("sector");
    const std::string fam =
        R"('{"kind": "beta_multiplication", "beta": 3.0, "grid": {"xmin": -8, "xmax": 8, "n": 257}}')";
    const auto good = run_cli("--out " + (dir / "good").string() + " --family " + fam +
                                  " sector --estimate E1 --exponents 1.0,0.5",
                              dir);
    CHECK(good.exit_code == 0);

    const auto bad = run_cli("--out " + (dir / "bad").string() + " --family " + fam +
                                 " sector --estimate E1 --exponents 1.0,0.2",
                             dir);
    CHECK(bad.exit_code == 2);
    CHECK(fs::exists(dir / "bad" / "sector_violations.csv"));
}

TEST_CASE("gaussian sector evaluator", "[cli]") {
    const auto dir = fresh_dir("gauss");
    const auto res = run_cli("--out " + (dir / "out").string() +
                                 " sector --estimate E1 --exponents 0.5,0.0 --gaussian 1,1",
                             dir);
    CHECK(res.exit_code == 0);
    json rep;
    std::ifstream(dir / "out" / "sector_report.json") >> rep;
    CHECK(std::abs(rep["best_M"].get<double>() - 1.0) < 1e-9);
    CHECK(rep["best_omega"].get<double>() == 0.0);
}
