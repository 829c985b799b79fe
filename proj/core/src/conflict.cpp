#include "cfm/conflict.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cfm {

namespace {

void require_pair_or_more(const SourceSubset& sub, const char* op) {
    if (sub.empty())
        throw Error(Errc::empty_subset, std::string(op) + ": subset is empty");
    if (sub.size() == 1)
        throw Error(Errc::singleton_subset,
                    std::string(op) + ": defined for subsets of two or more sources");
}

} // namespace

double weighted_uncovered_length(const Partition& p, int subset_size) {
    const double i = static_cast<double>(subset_size);
    double acc = 0.0;
    for (const PartitionCell& cell : p.cells)
        acc += cell.length() * (i - static_cast<double>(cell.overlap_count)) / i;
    return acc;
}

double conflict_raw(const EvidenceSet& ev, const SourceSubset& sub) {
    require_pair_or_more(sub, "conflict_raw");
    return weighted_uncovered_length(induced_partition(ev, sub), sub.size());
}

double conflict(const EvidenceSet& ev, const SourceSubset& sub) {
    // empty subset: the minimal set measures zero by convention
    if (sub.empty()) return 0.0;
    for (int id : sub.members()) ev.interval_of(id); // membership check
    if (sub.size() == 1) return 0.0;

    const Partition p = induced_partition(ev, sub);
    const double span = p.span_length();
    if (span == 0.0) return 0.0; // coincident point evidence: exact agreement
    return weighted_uncovered_length(p, sub.size()) / span;
}

double grid_oracle(const EvidenceSet& ev, const SourceSubset& sub, std::int64_t cells) {
    require_pair_or_more(sub, "grid_oracle");
    if (cells < 1)
        throw Error(Errc::invalid_config,
                    "grid_oracle: cell count must be positive, got " + std::to_string(cells));

    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(sub.size()));
    for (int id : sub.members()) intervals.push_back(ev.interval_of(id));

    double span_lo = intervals.front().lo;
    double span_hi = intervals.front().hi;
    for (const Interval& iv : intervals) {
        span_lo = std::min(span_lo, iv.lo);
        span_hi = std::max(span_hi, iv.hi);
    }
    if (span_hi == span_lo) return 0.0; // mirror the degenerate-span convention

    const double h = (span_hi - span_lo) / static_cast<double>(cells);
    const double i = static_cast<double>(sub.size());

    // Midpoint containment counts, accumulated source-major: the per-slice
    // counts are small integers, so the total is the exact same number as
    // summing (i - count) slice by slice.
    double covered = 0.0;
    for (const Interval& iv : intervals) {
        std::int64_t c = 0;
        for (std::int64_t s = 0; s < cells; ++s) {
            const double mid = span_lo + (static_cast<double>(s) + 0.5) * h;
            c += (iv.lo <= mid && mid <= iv.hi) ? 1 : 0;
        }
        covered += static_cast<double>(c);
    }
    const double total = i * static_cast<double>(cells);
    return (total - covered) / total;
}

} // namespace cfm
