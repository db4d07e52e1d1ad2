#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "intsemi/family_factory.hpp"
#include "intsemi/io.hpp"

using namespace intsemi;
using Catch::Approx;
namespace fs = std::filesystem;

TEST_CASE("family descriptors parse", "[factory]") {
    const auto beta = make_family_from_string(
        R"({"kind": "beta_multiplication", "beta": 3.0, "grid": {"xmin": -8, "xmax": 8, "n": 201}})");
    CHECK(family_kind(beta) == "beta_multiplication");
    CHECK(family_kappa_min(beta) == Approx(1.5));

    const auto scalar = make_family_from_string(R"({"kind": "scalar", "a": -1.0})");
    CHECK(family_omega(scalar) == -1.0);

    const auto matrix = make_family_from_string(
        R"({"kind": "matrix", "dim": 2, "entries": [-1.0, 1.0, 0.0, -1.0]})");
    CHECK(family_kind(matrix) == "matrix");

    const auto c01 = make_family_from_string(
        R"({"kind": "singular_c01", "beta": 0.5, "grid": {"smax": 1e4, "n": 501}})");
    CHECK(family_kind(c01) == "singular_c01");
    CHECK(family_kappa_min(c01) == Approx(0.5));
}

TEST_CASE("descriptor errors carry field context", "[factory]") {
    CHECK_THROWS_WITH(make_family_from_string(R"({"kind": "banana"})"),
                      Catch::Matchers::ContainsSubstring("unknown kind"));
    CHECK_THROWS_WITH(make_family_from_string(R"({"kind": "scalar"})"),
                      Catch::Matchers::ContainsSubstring("missing field 'a'"));
    CHECK_THROWS_AS(
        make_family_from_string(
            R"({"kind": "beta_multiplication", "beta": -1.0, "grid": {"xmin": -1, "xmax": 1, "n": 11}})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        make_family_from_string(
            R"({"kind": "beta_multiplication", "beta": 1.0, "grid": {"xmin": 1, "xmax": -1, "n": 11}})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        make_family_from_string(
            R"({"kind": "beta_multiplication", "beta": 1.0, "grid": {"xmin": -1, "xmax": 1, "n": 1}})"),
        std::invalid_argument);
    CHECK_THROWS_WITH(make_family_from_string("{ not json"),
                      Catch::Matchers::ContainsSubstring("invalid JSON"));
}

TEST_CASE("metadata export", "[factory]") {
    const auto fam = make_family_from_string(
        R"({"kind": "beta_multiplication", "beta": 5.0, "grid": {"xmin": -2, "xmax": 2, "n": 21}})");
    const auto meta = family_metadata(fam);
    CHECK(meta["kind"] == "beta_multiplication");
    CHECK(meta["kappa_min"] == "inf");
    CHECK(meta["beta"] == Approx(5.0));
}

TEST_CASE("csv writer round trips full precision", "[io]") {
    const fs::path dir = fs::temp_directory_path() / "intsemi_io_test";
    fs::create_directories(dir);
    const fs::path path = dir / "vals.csv";

    const double tricky = 0.1234567890123456789;
    write_csv(path, {{"x", {1.0, 2.0}}, {"y", {tricky, 3.0e-17}}});

    std::ifstream in(path);
    std::string header, row1;
    std::getline(in, header);
    std::getline(in, row1);
    CHECK(header == "x,y");
    const auto comma = row1.find(',');
    CHECK(std::stod(row1.substr(comma + 1)) == tricky);  // 17 significant digits survive
    fs::remove_all(dir);
}

TEST_CASE("plot data carries a gnuplot header", "[io]") {
    const fs::path dir = fs::temp_directory_path() / "intsemi_io_test2";
    fs::create_directories(dir);
    const fs::path path = dir / "curve.dat";
    write_plot_data(path, "demo", "t", "norm", {1.0, 2.0}, {0.5, 0.25});
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# demo");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++rows;
    CHECK(rows == 2);
    fs::remove_all(dir);
}

TEST_CASE("trace csv and sidecar", "[io]") {
    const fs::path dir = fs::temp_directory_path() / "intsemi_io_test3";
    fs::create_directories(dir);
    NormTrace tr;
    tr.order = 1.0;
    tr.omega = 0.0;
    tr.mesh = MeshKind::graded;
    tr.times = {0.1, 0.2, 0.4};
    tr.values = {1.0, 2.0, 4.0};
    write_trace_csv(dir / "t.csv", tr);
    write_trace_sidecar(dir / "t.meta.json", tr);

    std::ifstream meta(dir / "t.meta.json");
    nlohmann::json j;
    meta >> j;
    CHECK(j["sigma"] == Approx(1.0));
    CHECK(j["mesh"] == "graded");
    CHECK(j["n_samples"] == 3);
    fs::remove_all(dir);
}
