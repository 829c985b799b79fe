#include "cfm/stream.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfm/conflict.hpp"

namespace cfm {

void validate_series(const SensorSeries& series) {
    const std::size_t samples = series.sample_count();
    if (series.readings.size() != series.source_ids.size())
        throw Error(Errc::ragged_row, "series has " + std::to_string(series.source_ids.size()) +
                                          " source ids but " +
                                          std::to_string(series.readings.size()) +
                                          " reading rows");

    const int m = series.sensor_count();
    std::vector<bool> seen(static_cast<std::size_t>(std::max(m, 0)), false);
    for (int id : series.source_ids) {
        if (id < 1 || id > m)
            throw Error(Errc::invalid_source_id,
                        "sensor id " + std::to_string(id) + " outside 1.." + std::to_string(m));
        if (seen[static_cast<std::size_t>(id - 1)])
            throw Error(Errc::duplicate_id, "duplicate sensor id " + std::to_string(id));
        seen[static_cast<std::size_t>(id - 1)] = true;
    }

    for (std::size_t k = 0; k < series.readings.size(); ++k) {
        if (series.readings[k].size() != samples)
            throw Error(Errc::ragged_row,
                        "sensor s" + std::to_string(series.source_ids[k]) + " has " +
                            std::to_string(series.readings[k].size()) + " readings for " +
                            std::to_string(samples) + " timestamps");
        for (double v : series.readings[k])
            if (!std::isfinite(v))
                throw Error(Errc::non_finite_value,
                            "non-finite reading for sensor s" +
                                std::to_string(series.source_ids[k]));
    }

    for (std::size_t t = 0; t < samples; ++t) {
        if (!std::isfinite(series.timestamps[t]))
            throw Error(Errc::non_finite_value, "non-finite timestamp");
        if (t > 0 && series.timestamps[t] <= series.timestamps[t - 1])
            throw Error(Errc::non_increasing_time,
                        "timestamps must be strictly increasing at sample " + std::to_string(t + 1));
    }
}

namespace {

/// Single pass over window positions; fn(end_time, per-window evidence).
template <typename Fn>
void for_each_window(const SensorSeries& series, const WindowConfig& cfg, Fn&& fn) {
    validate_series(series);
    if (series.sample_count() == 0 || series.sensor_count() == 0)
        throw Error(Errc::empty_series, "series has no samples");
    if (cfg.window_len == 0)
        throw Error(Errc::invalid_config, "window length must be positive");
    if (cfg.stride == 0)
        throw Error(Errc::invalid_config, "stride must be positive");
    if (cfg.window_len > series.sample_count())
        throw Error(Errc::window_too_long,
                    "window of " + std::to_string(cfg.window_len) + " samples exceeds series of " +
                        std::to_string(series.sample_count()));

    const std::size_t total = series.sample_count();
    std::vector<Source> raw(series.readings.size());
    for (std::size_t start = 0; start + cfg.window_len <= total; start += cfg.stride) {
        for (std::size_t k = 0; k < series.readings.size(); ++k) {
            const std::vector<double>& trace = series.readings[k];
            double lo = trace[start];
            double hi = trace[start];
            for (std::size_t s = start + 1; s < start + cfg.window_len; ++s) {
                lo = std::min(lo, trace[s]);
                hi = std::max(hi, trace[s]);
            }
            raw[k] = Source{series.source_ids[k], {lo, hi}};
        }
        fn(series.timestamps[start + cfg.window_len - 1], validate_evidence(raw));
    }
}

} // namespace

std::vector<Window> windows(const SensorSeries& series, const WindowConfig& cfg) {
    std::vector<Window> out;
    for_each_window(series, cfg,
                    [&](double end_time, EvidenceSet ev) { out.push_back({end_time, std::move(ev)}); });
    return out;
}

ConflictSeries conflict_series(const SensorSeries& series, const WindowConfig& cfg) {
    if (cfg.subset.empty())
        throw Error(Errc::empty_subset, "conflict series needs a non-empty subset");
    for (int id : cfg.subset.members())
        if (std::find(series.source_ids.begin(), series.source_ids.end(), id) ==
            series.source_ids.end())
            throw Error(Errc::unknown_source,
                        "subset names sensor x" + std::to_string(id) + " not present in the series");

    ConflictSeries cs;
    for_each_window(series, cfg, [&](double end_time, const EvidenceSet& ev) {
        cs.points.push_back({end_time, conflict(ev, cfg.subset)});
    });
    return cs;
}

SeriesSummary summarize(const ConflictSeries& cs) {
    if (cs.points.empty())
        throw Error(Errc::empty_series, "cannot summarize an empty conflict series");

    SeriesSummary s;
    s.max = cs.points.front().cf;
    s.argmax_time = cs.points.front().end_time;
    double sum = 0.0;
    for (const ConflictSeries::Point& p : cs.points) {
        sum += p.cf;
        if (p.cf > s.max) {
            s.max = p.cf;
            s.argmax_time = p.end_time;
        }
    }
    const double n = static_cast<double>(cs.points.size());
    s.mean = sum / n;
    double sq = 0.0;
    for (const ConflictSeries::Point& p : cs.points) sq += (p.cf - s.mean) * (p.cf - s.mean);
    s.variance = sq / n;
    return s;
}

} // namespace cfm
