#include "cfm/scenarios.hpp"

#include <cmath>
#include <random>
#include <string>

namespace cfm {

EvidenceSet paper_example(int k) {
    switch (k) {
    case 1:
        return validate_evidence({{1, {0, 12}}, {2, {0, 4}}, {3, {0, 3}}, {4, {0, 2}}});
    case 2:
        return validate_evidence({{1, {10, 12}}, {2, {1, 4}}, {3, {1, 3}}, {4, {0, 2}}});
    case 3:
        return validate_evidence({{1, {10, 12}}, {2, {4, 7}}, {3, {2, 4}}, {4, {0, 2}}});
    default:
        throw Error(Errc::unknown_example,
                    "no built-in example " + std::to_string(k) + " (expected 1, 2 or 3)");
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53; // [0, 1)
}

void check_config(const DriftScenarioConfig& cfg) {
    auto fail = [](const std::string& msg) { throw Error(Errc::invalid_config, msg); };
    if (cfg.n_sensors < 1) fail("n_sensors must be positive");
    if (cfg.duration_samples < 1) fail("duration_samples must be positive");
    if (!std::isfinite(cfg.baseline)) fail("baseline must be finite");
    if (!(cfg.noise_amplitude >= 0.0) || !std::isfinite(cfg.noise_amplitude))
        fail("noise_amplitude must be finite and non-negative");
    if (!std::isfinite(cfg.drift_magnitude)) fail("drift_magnitude must be finite");
    if (cfg.drifting_sensor < 1 || cfg.drifting_sensor > cfg.n_sensors)
        fail("drifting_sensor must name one of the sensors");
    if (cfg.drift_start < 1 || cfg.drift_start >= cfg.drift_end ||
        cfg.drift_end > cfg.duration_samples)
        fail("drift window must satisfy 1 <= drift_start < drift_end <= duration_samples");
}

} // namespace

SensorSeries gen_drift(const DriftScenarioConfig& cfg) {
    check_config(cfg);

    SensorSeries series;
    series.timestamps.resize(static_cast<std::size_t>(cfg.duration_samples));
    for (int k = 0; k < cfg.duration_samples; ++k)
        series.timestamps[static_cast<std::size_t>(k)] = static_cast<double>(k + 1);

    for (int sensor = 1; sensor <= cfg.n_sensors; ++sensor) {
        std::mt19937_64 rng(splitmix64(cfg.seed ^ (static_cast<std::uint64_t>(sensor) *
                                                   0x9E3779B97F4A7C15ull)));
        std::vector<double> trace(static_cast<std::size_t>(cfg.duration_samples));
        for (int k = 1; k <= cfg.duration_samples; ++k) {
            const double u = unit_double(rng());
            double value = cfg.baseline + (2.0 * u - 1.0) * cfg.noise_amplitude;
            if (sensor == cfg.drifting_sensor) {
                if (k >= cfg.drift_end) {
                    value += cfg.drift_magnitude;
                } else if (k > cfg.drift_start) {
                    value += cfg.drift_magnitude * static_cast<double>(k - cfg.drift_start) /
                             static_cast<double>(cfg.drift_end - cfg.drift_start);
                }
            }
            trace[static_cast<std::size_t>(k - 1)] = value;
        }
        series.source_ids.push_back(sensor);
        series.readings.push_back(std::move(trace));
    }
    return series;
}

} // namespace cfm
