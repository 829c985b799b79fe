#pragma once

#include <cstdint>

#include "cfm/evidence.hpp"
#include "cfm/partition.hpp"

namespace cfm {

/// Sum of |cell| * (i - overlap) / i over the partition's cells, where i is
/// the subset size. This is the unnormalized conflict mass: length not
/// covered by all sources, weighted by the fraction of sources missing.
double weighted_uncovered_length(const Partition& p, int subset_size);

/// Unnormalized conflict of a subset of at least two sources, evaluated on
/// its endpoint-induced partition. Non-negative.
double conflict_raw(const EvidenceSet& ev, const SourceSubset& sub);

/// Normalized conflict in [0, 1]. Singletons and the empty subset measure
/// exactly 0; otherwise conflict_raw divided by the subset span length.
/// A degenerate span (all subset intervals coincident points) measures 0:
/// exact agreement carries no conflict.
double conflict(const EvidenceSet& ev, const SourceSubset& sub);

/// Independent verification oracle. Slices the subset span into `cells`
/// uniform pieces, counts at each slice midpoint the subset sources whose
/// interval contains it, and accumulates slice_length * (i - count) / i
/// normalized by the span. Converges to conflict() as cells grows, for
/// intervals in general position. Shares no code with the sweep above.
double grid_oracle(const EvidenceSet& ev, const SourceSubset& sub, std::int64_t cells);

} // namespace cfm
