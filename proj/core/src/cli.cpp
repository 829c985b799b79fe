#include "cfm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfm/format.hpp"
#include "cfm/io.hpp"
#include "cfm/scenarios.hpp"

namespace cfm {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
}

/// "x1,x2" (or "1,2") -> subset; malformed tokens are usage errors.
SourceSubset parse_subset_flag(const std::string& flag) {
    SourceSubset sub;
    std::size_t start = 0;
    while (start <= flag.size()) {
        std::size_t comma = flag.find(',', start);
        if (comma == std::string::npos) comma = flag.size();
        std::string_view token(flag.data() + start, comma - start);
        if (!token.empty() && token.front() == 'x') token.remove_prefix(1);
        int id = 0;
        const bool ok = !token.empty() &&
                        std::from_chars(token.data(), token.data() + token.size(), id).ptr ==
                            token.data() + token.size() &&
                        id >= 1 && id <= SourceSubset::max_sources;
        if (!ok)
            throw CLI::ValidationError("--subset", "'" + std::string(token) +
                                                       "' is not a source (expected e.g. x1,x2)");
        sub.add(id);
        start = comma + 1;
    }
    return sub;
}

std::size_t window_from_seconds(const SensorSeries& series, double seconds) {
    if (series.sample_count() < 2)
        throw Error(Errc::invalid_config,
                    "cannot infer the sampling interval from fewer than two samples");
    std::vector<double> dts;
    dts.reserve(series.sample_count() - 1);
    for (std::size_t t = 1; t < series.sample_count(); ++t)
        dts.push_back(series.timestamps[t] - series.timestamps[t - 1]);
    std::sort(dts.begin(), dts.end());
    const std::size_t mid = dts.size() / 2;
    const double median =
        (dts.size() % 2 == 1) ? dts[mid] : 0.5 * (dts[mid - 1] + dts[mid]);
    const long long len = std::llround(seconds / median);
    return static_cast<std::size_t>(std::max(1ll, len));
}

std::string bool_word(bool v) { return v ? "true" : "false"; }

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"conflict measurement over interval-valued evidence"};
    app.require_subcommand(1);

    // lattice
    auto* lattice_cmd =
        app.add_subcommand("lattice", "print the conflict value of every source subset");
    std::string lattice_file = "-";
    std::string lattice_format = "table";
    lattice_cmd->add_option("scenario", lattice_file, "scenario file ('-' reads stdin)");
    lattice_cmd->add_option("--format", lattice_format, "output format")
        ->check(CLI::IsMember({"table", "structured"}));
    lattice_cmd->callback([&] {
        const Scenario s = parse_scenario(read_input(lattice_file));
        const LatticeFormat fmt =
            lattice_format == "table" ? LatticeFormat::table : LatticeFormat::structured;
        out << emit_lattice(full_lattice(s.evidence), fmt);
    });

    // identify
    auto* identify_cmd = app.add_subcommand(
        "identify", "rank sources by leave-one-out conflict difference");
    std::string identify_file = "-";
    identify_cmd->add_option("scenario", identify_file, "scenario file ('-' reads stdin)");
    identify_cmd->callback([&] {
        const Scenario s = parse_scenario(read_input(identify_file));
        const ConflictLattice lat = full_lattice(s.evidence);
        const DeltaReport deltas = leave_one_out(lat);
        const NormalityReport nm = check_normal(lat);
        const MonotonicityReport fm = check_monotone(lat);

        out << "source,delta\n";
        for (const auto& [id, d] : deltas.delta)
            out << "x" << id << "," << format_fixed6(d) << "\n";
        SourceSubset argmax;
        for (int id : deltas.argmax_ids) argmax.add(id);
        out << "argmax," << subset_label(argmax) << "\n";
        out << "nm_minimal_ok," << bool_word(nm.minimal_ok) << "\n";
        out << "nm_max_value," << format_fixed6(nm.max_value) << "\n";
        out << "nm_attains_one," << bool_word(nm.attains_one) << "\n";
        out << "fm_monotone," << bool_word(fm.is_monotone) << "\n";
        out << "fm_violations," << fm.violations.size() << "\n";
    });

    // stream
    auto* stream_cmd =
        app.add_subcommand("stream", "conflict over sliding windows of a sensor series");
    std::string stream_file = "-";
    std::size_t window_samples = 0;
    double window_seconds = 0.0;
    std::size_t stride = 1;
    std::string subset_flag;
    bool with_summary = false;
    stream_cmd->add_option("series", stream_file, "series file ('-' reads stdin)");
    auto* window_opt =
        stream_cmd->add_option("--window", window_samples, "window length in samples");
    auto* window_sec_opt = stream_cmd->add_option("--window-seconds", window_seconds,
                                                  "window length in seconds (median-interval)");
    window_opt->excludes(window_sec_opt);
    stream_cmd->add_option("--stride", stride, "window stride in samples");
    stream_cmd->add_option("--subset", subset_flag, "sources to evaluate, e.g. x1,x2,x4");
    stream_cmd->add_flag("--summary", with_summary, "append mean/variance/max");
    stream_cmd->callback([&] {
        if (window_opt->count() == 0 && window_sec_opt->count() == 0)
            throw CLI::RequiredError("--window or --window-seconds");
        const SensorSeries series = parse_series(read_input(stream_file));

        WindowConfig cfg;
        cfg.window_len = window_opt->count() ? window_samples
                                             : window_from_seconds(series, window_seconds);
        cfg.stride = stride;
        if (subset_flag.empty()) {
            for (int id : series.source_ids) cfg.subset.add(id);
        } else {
            cfg.subset = parse_subset_flag(subset_flag);
        }

        const ConflictSeries cs = conflict_series(series, cfg);
        out << "time,cf\n";
        for (const ConflictSeries::Point& p : cs.points)
            out << format_shortest(p.end_time) << "," << format_fixed6(p.cf) << "\n";
        if (with_summary) {
            const SeriesSummary s = summarize(cs);
            out << "# summary mean=" << format_fixed6(s.mean)
                << " variance=" << format_fixed6(s.variance) << " max=" << format_fixed6(s.max)
                << " argmax_time=" << format_shortest(s.argmax_time) << "\n";
        }
    });

    // gen
    auto* gen_cmd =
        app.add_subcommand("gen", "write a built-in scenario or a synthetic drift series");
    int example_k = 0;
    bool drift = false;
    std::string out_path;
    DriftScenarioConfig drift_cfg;
    auto* example_opt = gen_cmd->add_option("--example", example_k, "built-in scenario number")
                            ->check(CLI::IsMember({1, 2, 3}));
    auto* drift_opt = gen_cmd->add_flag("--drift", drift, "generate a drift series");
    example_opt->excludes(drift_opt);
    gen_cmd->add_option("--sensors", drift_cfg.n_sensors, "sensor count");
    gen_cmd->add_option("--samples", drift_cfg.duration_samples, "series length in samples");
    gen_cmd->add_option("--baseline", drift_cfg.baseline, "baseline reading");
    gen_cmd->add_option("--noise", drift_cfg.noise_amplitude, "uniform noise amplitude");
    gen_cmd->add_option("--drift-sensor", drift_cfg.drifting_sensor, "sensor that drifts");
    gen_cmd->add_option("--drift-start", drift_cfg.drift_start, "ramp start sample (1-based)");
    gen_cmd->add_option("--drift-end", drift_cfg.drift_end, "ramp end sample");
    gen_cmd->add_option("--drift-magnitude", drift_cfg.drift_magnitude, "ramp height");
    gen_cmd->add_option("--seed", drift_cfg.seed, "generator seed");
    gen_cmd->add_option("--out", out_path, "write to a file instead of stdout");
    gen_cmd->callback([&] {
        if (example_opt->count() == 0 && !drift)
            throw CLI::RequiredError("--example or --drift");
        if (example_opt->count()) {
            Scenario s{"example" + std::to_string(example_k), paper_example(example_k)};
            write_output(out_path, emit_scenario(s), out);
        } else {
            write_output(out_path, emit_series(gen_drift(drift_cfg)), out);
        }
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cfm
