#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cfm/cli.hpp"
#include "cfm/io.hpp"
#include "cfm/scenarios.hpp"

using namespace cfm;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "cfm");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    std::ostringstream out;
    std::ostringstream err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("lattice subcommand prints the table for a scenario file") {
    const auto path = write_temp("cfm_cli_ex1.scn",
                                 emit_scenario({"example1", paper_example(1)}));
    const CliResult r = run({"lattice", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("x1+x2+x3,3,0.472222\n") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("lattice subcommand honors --format structured") {
    const auto path = write_temp("cfm_cli_ex1s.scn",
                                 emit_scenario({"example1", paper_example(1)}));
    const CliResult r = run({"lattice", path.string(), "--format", "structured"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"subset\": \"x1+x2+x3\"") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("identify subcommand names the most conflicting source") {
    const auto path = write_temp("cfm_cli_ex2.scn",
                                 emit_scenario({"example2", paper_example(2)}));
    const CliResult r = run({"identify", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("argmax,x1\n") != std::string::npos);
    CHECK(r.out.find("nm_minimal_ok,true\n") != std::string::npos);
    CHECK(r.out.find("fm_monotone,") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("stream subcommand emits time,cf rows plus an optional summary") {
    DriftScenarioConfig cfg;
    cfg.duration_samples = 30;
    cfg.drift_start = 10;
    cfg.drift_end = 20;
    const auto path = write_temp("cfm_cli_drift.csv", emit_series(gen_drift(cfg)));

    const CliResult r =
        run({"stream", path.string(), "--window", "5", "--subset", "x2,x3,x4", "--summary"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("time,cf\n", 0) == 0);
    CHECK(r.out.find("\n5,") != std::string::npos);
    CHECK(r.out.find("# summary mean=") != std::string::npos);

    const CliResult bare = run({"stream", path.string(), "--window", "5"});
    CHECK(bare.exit_code == 0);
    CHECK(bare.out.find("# summary") == std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("stream subcommand converts --window-seconds via the sampling interval") {
    DriftScenarioConfig cfg;
    cfg.duration_samples = 30;
    cfg.drift_start = 10;
    cfg.drift_end = 20;
    const auto path = write_temp("cfm_cli_drift2.csv", emit_series(gen_drift(cfg)));
    const CliResult seconds = run({"stream", path.string(), "--window-seconds", "5"});
    const CliResult samples = run({"stream", path.string(), "--window", "5"});
    CHECK(seconds.exit_code == 0);
    CHECK(seconds.out == samples.out); // 1 Hz data: seconds equal samples
    std::filesystem::remove(path);
}

TEST_CASE("gen --example emits a parseable scenario") {
    const CliResult r = run({"gen", "--example", "2"});
    CHECK(r.exit_code == 0);
    const Scenario s = parse_scenario(r.out);
    CHECK(s.name == "example2");
    CHECK(s.evidence.sources() == paper_example(2).sources());
}

TEST_CASE("gen --drift emits a parseable series honoring --out") {
    const auto path = std::filesystem::temp_directory_path() / "cfm_cli_gen.csv";
    const CliResult r = run({"gen", "--drift", "--samples", "20", "--sensors", "3",
                             "--drift-start", "5", "--drift-end", "15", "--out", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::stringstream buf;
    buf << file.rdbuf();
    const SensorSeries s = parse_series(buf.str());
    CHECK(s.sample_count() == 20);
    CHECK(s.sensor_count() == 3);
    std::filesystem::remove(path);
}

TEST_CASE("validation problems exit 1 with diagnostics on the error stream") {
    const auto bad = write_temp("cfm_cli_bad.scn",
                                R"({"sources": [{"id": 1, "lo": 3, "hi": 2}]})");
    const CliResult r = run({"lattice", bad.string()});
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") != std::string::npos);
    std::filesystem::remove(bad);

    const CliResult missing = run({"lattice", "/no/such/file.scn"});
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.empty());
}

TEST_CASE("usage problems exit 2") {
    CHECK(run({"lattice", "x.scn", "--format", "yaml"}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"stream", "x.csv"}).exit_code == 2);         // no window given
    CHECK(run({"gen"}).exit_code == 2);                     // no --example/--drift
    CHECK(run({"gen", "--example", "9"}).exit_code == 2);   // outside 1..3
    CHECK(run({"stream", "x.csv", "--window", "5", "--window-seconds", "5"}).exit_code == 2);
}

TEST_CASE("--help exits 0 everywhere") {
    CHECK(run({"--help"}).exit_code == 0);
    for (const char* sub : {"lattice", "identify", "stream", "gen"}) {
        const CliResult r = run({sub, "--help"});
        CHECK(r.exit_code == 0);
        CHECK(!r.out.empty());
    }
}

TEST_CASE("subset flags accept ids with or without the x prefix") {
    DriftScenarioConfig cfg;
    cfg.duration_samples = 12;
    cfg.drift_start = 4;
    cfg.drift_end = 8;
    const auto path = write_temp("cfm_cli_subset.csv", emit_series(gen_drift(cfg)));
    const CliResult with_x = run({"stream", path.string(), "--window", "3", "--subset", "x1,x2"});
    const CliResult bare = run({"stream", path.string(), "--window", "3", "--subset", "1,2"});
    CHECK(with_x.exit_code == 0);
    CHECK(with_x.out == bare.out);

    CHECK(run({"stream", path.string(), "--window", "3", "--subset", "x1,huh"}).exit_code == 2);
    // unknown sensor is a data problem, not a usage problem
    CHECK(run({"stream", path.string(), "--window", "3", "--subset", "x9"}).exit_code == 1);
    std::filesystem::remove(path);
}
