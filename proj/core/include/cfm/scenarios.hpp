#pragma once

#include <cstdint>

#include "cfm/evidence.hpp"
#include "cfm/stream.hpp"

namespace cfm {

/// Built-in four-source scenarios of increasing conflict (k = 1, 2, 3).
EvidenceSet paper_example(int k);

/// Synthetic multi-sensor drift data: every sensor emits baseline plus
/// bounded uniform noise; one sensor additionally ramps linearly to
/// drift_magnitude over [drift_start, drift_end] (1-based sample indices)
/// and holds. Sampling is 1 Hz with timestamps 1..duration_samples.
///
/// Generation is bit-exactly reproducible from (config, seed): sensor i
/// draws from std::mt19937_64 seeded with splitmix64(seed ^ i*0x9E3779B97F4A7C15),
/// mapping each draw to [0, 1) via (x >> 11) * 2^-53.
struct DriftScenarioConfig {
    int n_sensors = 4;
    int duration_samples = 90;
    double baseline = 22.0;
    double noise_amplitude = 0.2;
    int drifting_sensor = 1;
    int drift_start = 30;
    int drift_end = 70;
    double drift_magnitude = 8.0;
    std::uint64_t seed = 42;
};

SensorSeries gen_drift(const DriftScenarioConfig& cfg);

} // namespace cfm
