#pragma once

#include <cstddef>
#include <vector>

#include "cfm/evidence.hpp"

namespace cfm {

/// Rectangular multi-sensor time series: one reading per sensor per
/// timestamp, timestamps strictly increasing, everything finite.
/// readings[k] holds the trace of source_ids[k].
struct SensorSeries {
    std::vector<double> timestamps;
    std::vector<int> source_ids;
    std::vector<std::vector<double>> readings;

    std::size_t sample_count() const { return timestamps.size(); }
    int sensor_count() const { return static_cast<int>(source_ids.size()); }
};

/// Throws if the series violates its invariants (ragged rows, non-finite
/// values, non-increasing time, bad ids).
void validate_series(const SensorSeries& series);

struct WindowConfig {
    std::size_t window_len = 5; // samples
    std::size_t stride = 1;    // samples
    SourceSubset subset;       // sources to evaluate
};

struct Window {
    double end_time = 0.0;
    EvidenceSet evidence;
};

/// Slides a window of window_len samples by stride. Each source's evidence
/// in a window is [min reading, max reading] over the window's samples; the
/// window is labeled with the timestamp of its last sample. Emits
/// floor((T - window_len) / stride) + 1 windows.
std::vector<Window> windows(const SensorSeries& series, const WindowConfig& cfg);

/// Per-window conflict of cfg.subset, computed in a single pass.
struct ConflictSeries {
    struct Point {
        double end_time = 0.0;
        double cf = 0.0;
    };
    std::vector<Point> points;
};

ConflictSeries conflict_series(const SensorSeries& series, const WindowConfig& cfg);

/// Population statistics over the cf values; argmax_time is the earliest
/// window end time attaining the maximum.
struct SeriesSummary {
    double mean = 0.0;
    double variance = 0.0;
    double max = 0.0;
    double argmax_time = 0.0;
};

SeriesSummary summarize(const ConflictSeries& cs);

} // namespace cfm
