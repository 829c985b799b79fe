#pragma once

#include <span>
#include <vector>

#include "cfm/evidence.hpp"

namespace cfm {

/// One cell of an endpoint-induced partition together with the number of
/// subset sources whose interval covers it.
struct PartitionCell {
    double lo = 0.0;
    double hi = 0.0;
    int overlap_count = 0;

    double length() const { return hi - lo; }
};

/// Contiguous, sorted, positive-length cells covering exactly
/// [span_lo, span_hi]. A subset of coincident point intervals induces a
/// degenerate partition: zero cells over a zero-length span.
struct Partition {
    std::vector<PartitionCell> cells;
    double span_lo = 0.0;
    double span_hi = 0.0;

    double span_length() const { return span_hi - span_lo; }
};

/// Builds the partition induced by the subset's interval endpoints: the
/// 2|sub| endpoints are sorted and deduplicated, consecutive pairs form the
/// cells, and each cell's overlap_count is the number of subset sources
/// whose closed interval covers the closed cell. The span is
/// [min lo, max hi] over the subset.
Partition induced_partition(const EvidenceSet& ev, const SourceSubset& sub);

/// Splits cells at the given cut points (points outside cell interiors are
/// ignored) without changing overlap counts. Refinement leaves the weighted
/// sums over the partition unchanged.
Partition refined(const Partition& p, std::span<const double> cuts);

} // namespace cfm
