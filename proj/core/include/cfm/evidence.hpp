#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cfm/error.hpp"

namespace cfm {

/// Closed real interval [lo, hi]. Point intervals (lo == hi) are legal.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    /// True iff the closed interval [a, b] lies inside this interval.
    bool covers(double a, double b) const { return lo <= a && b <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One source's labeled evidence.
struct Source {
    int id = 0;
    Interval interval;

    friend bool operator==(const Source&, const Source&) = default;
};

/// Selection of source ids, canonical bitmask representation: bit (id-1)
/// set iff the source belongs to the subset. Addresses up to 64 sources.
class SourceSubset {
public:
    static constexpr int max_sources = 64;

    SourceSubset() = default;

    static SourceSubset from_mask(std::uint64_t mask) {
        SourceSubset s;
        s.mask_ = mask;
        return s;
    }

    static SourceSubset of(std::initializer_list<int> ids) {
        SourceSubset s;
        for (int id : ids) s.add(id);
        return s;
    }

    /// The full subset {x1, ..., xn}.
    static SourceSubset full(int n);

    SourceSubset& add(int id);
    SourceSubset without(int id) const;

    bool contains(int id) const {
        return id >= 1 && id <= max_sources && (mask_ >> (id - 1)) & 1u;
    }

    int size() const { return static_cast<int>(__builtin_popcountll(mask_)); }
    bool empty() const { return mask_ == 0; }
    std::uint64_t mask() const { return mask_; }

    /// Member ids in ascending order.
    std::vector<int> members() const;

    friend bool operator==(const SourceSubset&, const SourceSubset&) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Validated, ordered collection of labeled interval evidence. Ids are
/// unique and contiguous 1..n; the list keeps the caller's order.
class EvidenceSet {
public:
    int size() const { return static_cast<int>(sources_.size()); }
    const std::vector<Source>& sources() const { return sources_; }

    bool has_id(int id) const {
        return id >= 1 && id <= size();
    }

    const Interval& interval_of(int id) const;

    /// Subset containing every source.
    SourceSubset all() const;

private:
    friend EvidenceSet validate_evidence(const std::vector<Source>& raw);

    std::vector<Source> sources_;
    std::vector<int> position_of_id_; // position_of_id_[id-1] -> index into sources_
};

/// Checks the EvidenceSet invariants and builds the set, preserving input
/// order. Rejects empty input, malformed intervals (lo > hi or non-finite
/// endpoints), duplicate ids and ids outside 1..n.
EvidenceSet validate_evidence(const std::vector<Source>& raw);

} // namespace cfm
