#include "cfm/partition.hpp"

#include <algorithm>

namespace cfm {

Partition induced_partition(const EvidenceSet& ev, const SourceSubset& sub) {
    if (sub.empty())
        throw Error(Errc::empty_subset, "cannot partition an empty subset");

    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(sub.size()));
    for (int id : sub.members()) intervals.push_back(ev.interval_of(id));

    std::vector<double> endpoints;
    endpoints.reserve(2 * intervals.size());
    for (const Interval& iv : intervals) {
        endpoints.push_back(iv.lo);
        endpoints.push_back(iv.hi);
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

    Partition p;
    p.span_lo = endpoints.front();
    p.span_hi = endpoints.back();
    p.cells.reserve(endpoints.size() - 1);
    for (std::size_t k = 0; k + 1 < endpoints.size(); ++k) {
        PartitionCell cell{endpoints[k], endpoints[k + 1], 0};
        for (const Interval& iv : intervals)
            if (iv.covers(cell.lo, cell.hi)) ++cell.overlap_count;
        p.cells.push_back(cell);
    }
    return p;
}

Partition refined(const Partition& p, std::span<const double> cuts) {
    std::vector<double> sorted(cuts.begin(), cuts.end());
    std::sort(sorted.begin(), sorted.end());

    Partition out;
    out.span_lo = p.span_lo;
    out.span_hi = p.span_hi;
    for (const PartitionCell& cell : p.cells) {
        auto first = std::upper_bound(sorted.begin(), sorted.end(), cell.lo);
        double lo = cell.lo;
        for (auto it = first; it != sorted.end() && *it < cell.hi; ++it) {
            if (*it == lo) continue; // duplicate cut
            out.cells.push_back({lo, *it, cell.overlap_count});
            lo = *it;
        }
        out.cells.push_back({lo, cell.hi, cell.overlap_count});
    }
    return out;
}

} // namespace cfm
