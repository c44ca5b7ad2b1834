#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okbody/run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = okbody::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("okbody-test-" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("vanish writes the expected CSV") {
    TempDir dir;
    const RunResult r = run_cli({"vanish", "--model", "p2:1", "--m", "2", "--val", "mon:1,1@0,0",
                                 "--out", "csv,json", "--outdir", dir.str()});
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(dir.path / "vanish.csv");
    CHECK(csv.find("m,j,a_j_num,a_j_den\n") != std::string::npos);
    CHECK(csv.find("2,1,0,1\n") != std::string::npos);
    CHECK(csv.find("2,4,2,1\n") != std::string::npos);
    CHECK(csv.find("# config:") != std::string::npos);
    CHECK(fs::exists(dir.path / "vanish.json"));
}

TEST_CASE("runs are byte-identical") {
    TempDir a, b;
    for (const TempDir* dir : {&a, &b}) {
        const RunResult r =
            run_cli({"transform", "--model", "blp2:1/2", "--m", "4", "--val", "mon:1,1@1,1",
                     "--out", "json,svg", "--outdir", dir->str()});
        REQUIRE(r.exit_code == 0);
    }
    CHECK(slurp(a.path / "transform.json") == slurp(b.path / "transform.json"));
    CHECK(slurp(a.path / "transform.svg") == slurp(b.path / "transform.svg"));
}

TEST_CASE("equidist reports the frozen distance") {
    TempDir dir;
    const RunResult r = run_cli({"equidist", "--model", "p2:1", "--val", "mon:1,1@0,0", "--m", "20",
                                 "--ref", "simplex", "--out", "json,csv", "--outdir", dir.str()});
    REQUIRE(r.exit_code == 0);
    const std::string json = slurp(dir.path / "equidist.json");
    CHECK(json.find("\"ks_num\": \"1\"") != std::string::npos);
    CHECK(json.find("\"ks_den\": \"11\"") != std::string::npos);
    const std::string csv = slurp(dir.path / "equidist.csv");
    CHECK(csv.find("t,cdf_emp,cdf_ref,deviation") != std::string::npos);
}

TEST_CASE("validation failures exit 2 and name the problem") {
    TempDir dir;
    {
        const RunResult r = run_cli({"vanish", "--model", "blp2:1/3", "--m", "2", "--val", "ordF",
                                     "--outdir", dir.str()});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("not an integer") != std::string::npos);
    }
    {
        const RunResult r = run_cli({"vanish", "--model", "nope:1", "--m", "2", "--val", "ordflag",
                                     "--outdir", dir.str()});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("model spec") != std::string::npos);
    }
    {
        const RunResult r = run_cli({"equidist", "--model", "p2:1", "--val", "ordflag", "--m", "2",
                                     "--outdir", dir.str()});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("--ref") != std::string::npos);
    }
    {
        const RunResult r = run_cli({"vanish", "--bogus-flag", "1"});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("--bogus-flag") != std::string::npos);
    }
    {
        // Irrational values cannot fit the rational CSV schema; JSON carries
        // them exactly.
        const RunResult r = run_cli({"vanish", "--model", "p2:1", "--m", "2", "--val",
                                     "mon-sqrt2@0,0", "--out", "csv", "--outdir", dir.str()});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("json") != std::string::npos);
        const RunResult r2 = run_cli({"vanish", "--model", "p2:1", "--m", "2", "--val",
                                      "mon-sqrt2@0,0", "--out", "json", "--outdir", dir.str()});
        CHECK(r2.exit_code == 0);
        CHECK(slurp(dir.path / "vanish.json").find("\"sqrt2\": \"1\"") != std::string::npos);
    }
}

TEST_CASE("computational failures exit 3 with retry guidance") {
    TempDir dir;
    // An arc truncation cap too small to resolve the top values.
    const RunResult r = run_cli({"vanish", "--model", "p2:1", "--m", "6", "--val", "arc-exp",
                                 "--outdir", dir.str()});
    // Level 6 resolves fine; force a failure through the colength cap by
    // requesting an enormous volume level against the hard truncation cap.
    CHECK(r.exit_code == 0);
    const RunResult r2 = run_cli({"valvol", "--val", "arc-exp", "--M", "20000", "--outdir", dir.str()});
    CHECK(r2.exit_code == 3);
    CHECK(r2.err.find("trunc") != std::string::npos);
}

TEST_CASE("remaining subcommands produce their artifacts") {
    TempDir dir;
    CHECK(run_cli({"dims", "--model", "p2:1", "--m", "3", "--val", "mon:1,1@0,0", "--out",
                   "csv,json", "--outdir", dir.str()})
              .exit_code == 0);
    CHECK(fs::exists(dir.path / "dims.csv"));
    CHECK(run_cli({"asym", "--model", "p2:1", "--val", "arc-exp", "--m", "2,3,4,5", "--outdir",
                   dir.str()})
              .exit_code == 0);
    CHECK(slurp(dir.path / "asym.json").find("superlinear") != std::string::npos);
    CHECK(run_cli({"okounkov", "--model", "blp2:1/2", "--m", "4", "--out", "json,svg", "--outdir",
                   dir.str()})
              .exit_code == 0);
    CHECK(slurp(dir.path / "okounkov.json").find("\"hull\"") != std::string::npos);
    CHECK(slurp(dir.path / "okounkov.svg").find("<svg") != std::string::npos);
    CHECK(run_cli({"restvol", "--model", "blp2:1/2", "--val", "ordF", "--m", "8", "--t", "1/4",
                   "--outdir", dir.str()})
              .exit_code == 0);
    CHECK(slurp(dir.path / "restvol.json").find("\"7/8\"") != std::string::npos);
    CHECK(run_cli({"valvol", "--val", "mon:2,3@0,0", "--M", "120", "--outdir", dir.str()})
              .exit_code == 0);
    CHECK(slurp(dir.path / "valvol.json").find("\"1/6\"") != std::string::npos);
    CHECK(run_cli({"theoremb", "--out", "json,csv", "--outdir", dir.str()}).exit_code == 0);
    CHECK(slurp(dir.path / "theoremb.json").find("\"conical_at_apex\": false") != std::string::npos);
}

TEST_CASE("extremal evaluates a body from JSON") {
    TempDir dir;
    const fs::path body = dir.path / "square.json";
    {
        std::ofstream out(body);
        out << R"({"kind": "polytopeV", "dim": 2,
                   "vertices": [["0","0"],["1","0"],["1","1"],["0","1"]]})";
    }
    const RunResult r = run_cli({"extremal", "--body", body.string(), "--p", "0,0", "--x",
                                 "1/2,1/2", "--outdir", dir.str()});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("E=1/2") != std::string::npos);
    CHECK(slurp(dir.path / "extremal.json").find("\"1/2\"") != std::string::npos);
}

TEST_CASE("config files supply flags") {
    TempDir dir;
    const fs::path cfg = dir.path / "run.toml";
    {
        std::ofstream out(cfg);
        out << "model = \"p2:1\"\n"
            << "val = \"mon:1,1@0,0\"\n"
            << "m = \"2\"\n"
            << "outdir = \"" << dir.str() << "\"\n";
    }
    const RunResult r = run_cli({"vanish", "--config", cfg.string()});
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir.path / "vanish.json"));
}

TEST_CASE("worker pool does not change results") {
    TempDir a, b;
    setenv("OKBODY_WORKERS", "3", 1);
    const RunResult r1 = run_cli({"asym", "--model", "p2:1", "--val", "mon:1,1@1,1", "--m",
                                  "1,2,3,4,5", "--outdir", a.str()});
    setenv("OKBODY_WORKERS", "1", 1);
    const RunResult r2 = run_cli({"asym", "--model", "p2:1", "--val", "mon:1,1@1,1", "--m",
                                  "1,2,3,4,5", "--outdir", b.str()});
    unsetenv("OKBODY_WORKERS");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(a.path / "asym.json") == slurp(b.path / "asym.json"));
}
