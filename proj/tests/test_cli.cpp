#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "helpers.hpp"

// end-to-end checks of the command-line driver: exit codes and the JSON
// contract, run against the fixtures

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "boolspectra_cli_out.txt";
    std::string cmd = std::string(BOOLSPECTRA_CLI_PATH) + " " + args + " > " +
                      tmp.string() + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = raw == -1 ? -1 : WEXITSTATUS(raw);
    std::ifstream in(tmp);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string fixture(const std::string& name) { return testutil::fixture_path(name); }

}  // namespace

TEST_CASE("cli classify: reference function") {
    RunResult r = run_cli("classify " + fixture("example1.tt.hex"));
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["n"] == 6);
    CHECK(report["classification"]["class"] == "five_valued");
    CHECK(report["support_sizes"]["8"] == 32);
    CHECK(report["support_sizes"]["16"] == 8);
    CHECK(report["resiliency_order"] == -1);
}

TEST_CASE("cli classify: parse failure exits 2") {
    fs::path bad = fs::temp_directory_path() / "boolspectra_truncated.tt.hex";
    std::ofstream(bad) << "abc\n";  // 3 digits: not a power of two
    RunResult r = run_cli("classify " + bad.string());
    CHECK(r.exit_code == 2);
    RunResult missing = run_cli("classify /nonexistent/path.tt.hex");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli build: reference recipe reproduces the pinned table") {
    fs::path out = fs::temp_directory_path() / "example1_rebuilt.tt.hex";
    RunResult r = run_cli("build " + fixture("example1.recipe.json") + " --out " +
                          out.string());
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["outputs"][0]["classification"]["class"] == "five_valued");
    std::string built = testutil::slurp(out.string());
    std::string reference = testutil::slurp(fixture("example1.tt.hex"));
    CHECK(built == reference);
}

TEST_CASE("cli build: plateaued recipe and condition violations") {
    RunResult r = run_cli("build " + fixture("form_c3.recipe.json"));
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    std::string hex = report["outputs"][0]["table"].get<std::string>();
    CHECK(hex + "\n" == testutil::slurp(fixture("form_c3.tt.hex")));

    // a recipe with a non-bent dual on an affine support must exit 3
    fs::path bad = fs::temp_directory_path() / "bad_recipe.json";
    {
        json recipe = {
            {"operation", "construct_plateaued"},
            {"args",
             {{"support", {{"n", 6}, {"v", 0}, {"E", {0, 1, 2, 3, 4, 5, 6, 7,
                                                      8, 9, 10, 11, 12, 13, 14, 15}}}},
              {"dual", {{"anf", "x1x2x3x4 + x1"}, {"n", 4}}}}}};
        // weight-adjust: x1x2x3x4 + x1 has weight 8+... make a weight-6 non-bent
        recipe["args"]["dual"] = {{"hex", "003f"}};  // weight 6, not bent
        std::ofstream(bad) << recipe.dump();
    }
    RunResult rbad = run_cli("build " + bad.string());
    CHECK(rbad.exit_code == 3);

    RunResult rgmm = run_cli("build " + fixture("gmm_small.recipe.json"));
    REQUIRE(rgmm.exit_code == 0);
    json gmm_report = json::parse(rgmm.out);
    CHECK(gmm_report["resiliency_bound"] == 1);
    CHECK(gmm_report["outputs"][0]["resiliency_order"] == 0);
}

TEST_CASE("cli decompose: report and precondition exit code") {
    RunResult r = run_cli("decompose " + fixture("bent_quad_n4.tt.hex") +
                          " --alpha 8 --beta 4");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK((report["kind"] == "bent" || report["kind"] == "semi_bent"));
    CHECK(report["restrictions"].size() == 4);

    RunResult rbad = run_cli("decompose " + fixture("example1.tt.hex") +
                             " --alpha 1 --beta 2");
    CHECK(rbad.exit_code == 4);  // input not bent
}

TEST_CASE("cli certify and profile") {
    fs::path pair = fs::temp_directory_path() / "pair.json";
    {
        json j;
        j["s1"] = {{"n", 6}, {"v", 0}, {"E", {0, 1, 2, 3, 4, 5, 6, 7}}};
        j["d1"] = {{"anf", "x1x2"}, {"n", 3}};
        json e2 = json::array();
        for (int e = 0; e < 32; ++e) e2.push_back(e);
        j["s2"] = {{"n", 6}, {"v", 36}, {"E", e2}};
        j["d2"] = {{"anf", "x1x2 + x3x4 + x5"}, {"n", 5}};
        std::ofstream(pair) << j.dump();
    }
    RunResult r = run_cli("certify " + pair.string());
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["pass"] == true);

    fs::path prof = fs::temp_directory_path() / "profile.json";
    {
        json j;
        json omegas = json::array();
        for (int y = 0; y < 4; ++y)
            for (int row : {8, 4, 2, 1}) omegas.push_back((row << 2) | y);
        j["support"] = {{"n", 6}, {"omegas", omegas}};
        std::ofstream(prof) << j.dump();
    }
    fs::path query = fs::temp_directory_path() / "query.tt.hex";
    {
        auto g = testutil::from_anf(4, "x1x3 + x2x4");
        std::ofstream(query) << boolspectra::emit_truth_table_hex(g) << "\n";
    }
    RunResult rp = run_cli("profile " + prof.string() + " --query " + query.string());
    REQUIRE(rp.exit_code == 0);
    json preport = json::parse(rp.out);
    CHECK(preport["m"] == 4);
    CHECK(preport["generators"].size() == 6);
    CHECK(preport["query_bent_distance"] == true);
}

TEST_CASE("cli decompose: sweep emits one report per pair") {
    RunResult r = run_cli("decompose " + fixture("bent_quad_n4.tt.hex") + " --sweep");
    REQUIRE(r.exit_code == 0);
    json reports = json::parse(r.out);
    CHECK(reports.size() == 15 * 14 / 2);
    for (auto& rep : reports)
        CHECK((rep["kind"] == "bent" || rep["kind"] == "semi_bent"));
}

TEST_CASE("cli build: quadruple recipe writes four tables plus a report") {
    fs::path recipe = fs::temp_directory_path() / "c2.recipe.json";
    {
        using boolspectra::emit_truth_table_hex;
        auto hex = [](const testutil::BooleanFunction& f) {
            return boolspectra::emit_truth_table_hex(f);
        };
        auto a1 = testutil::from_anf(4, "x1x3 + x2x4");
        json a = json::array({hex(a1), hex(a1 ^ testutil::from_anf(4, "x1")),
                              hex(a1 ^ testutil::from_anf(4, "x2")),
                              hex(a1 ^ testutil::from_anf(4, "1 + x1 + x2"))});
        json d = json::array();
        for (std::uint32_t c = 0; c < 4; ++c) {
            std::vector<std::uint32_t> pts;
            for (std::uint32_t z = 0; z < 4; ++z) pts.push_back((c << 2) | z);
            d.push_back(hex(boolspectra::construct_plateaued(
                boolspectra::OrderedSupport::from_points(4, pts),
                testutil::from_bits(2, {0, 0, 0, 1}))));
        }
        json j = {{"operation", "c2"}, {"args", {{"a", a}, {"d", d}}}};
        std::ofstream(recipe) << j.dump();
    }
    fs::path out = fs::temp_directory_path() / "c2_out.tt.hex";
    RunResult r = run_cli("build " + recipe.string() + " --out " + out.string());
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["outputs"].size() == 4);
    CHECK(report["quadruple"]["dual_sum_one"] == true);
    CHECK(report["concatenation"]["classification"]["class"] == "bent");
    for (int i = 1; i <= 4; ++i) {
        fs::path piece = fs::temp_directory_path() /
                         ("c2_out." + std::to_string(i) + ".tt.hex");
        CHECK(fs::exists(piece));
    }
}

TEST_CASE("cli: deterministic byte-for-byte reports") {
    RunResult a = run_cli("classify " + fixture("example1.tt.hex"));
    RunResult b = run_cli("classify " + fixture("example1.tt.hex"));
    CHECK(a.out == b.out);
}

TEST_CASE("cli: the n cap honors BOOLSPECTRA_MAX_N") {
    fs::path tmp = fs::temp_directory_path() / "boolspectra_cap_out.txt";
    std::string cmd = std::string("BOOLSPECTRA_MAX_N=4 ") + BOOLSPECTRA_CLI_PATH +
                      " classify " + fixture("example1.tt.hex") + " > " +
                      tmp.string() + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(raw) == 2);  // a 6-variable table no longer parses
}
