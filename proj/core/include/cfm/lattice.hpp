#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cfm/conflict.hpp"
#include "cfm/evidence.hpp"

namespace cfm {

/// Enumeration guard: a full lattice evaluates 2^n - 1 subsets.
inline constexpr int max_lattice_sources = 24;

/// Conflict value of every non-empty source subset, keyed by canonical
/// bitmask. The empty subset implicitly measures 0.
class ConflictLattice {
public:
    int source_count() const { return n_; }
    std::uint64_t full_mask() const { return (std::uint64_t{1} << n_) - 1; }

    /// Number of non-empty subsets: 2^n - 1.
    std::size_t subset_count() const { return (std::size_t{1} << n_) - 1; }

    double value(const SourceSubset& sub) const { return value_at(sub.mask()); }
    double value_at(std::uint64_t mask) const;

private:
    friend ConflictLattice full_lattice(const EvidenceSet& ev);

    int n_ = 0;
    std::vector<double> values_; // indexed by mask; values_[0] == 0
};

/// Evaluates conflict() for every non-empty subset. Deterministic; subsets
/// are independent and evaluated concurrently for larger n.
ConflictLattice full_lattice(const EvidenceSet& ev);

/// Leave-one-out differences off the top of the lattice:
/// delta[j] = value(X) - value(X \ {j}). The sources attaining the maximum
/// delta are the ones whose removal drops the conflict the most, i.e. the
/// most conflicting sources.
struct DeltaReport {
    std::map<int, double> delta;
    std::vector<int> argmax_ids; // every id attaining the maximum, ascending
};

DeltaReport leave_one_out(const ConflictLattice& lat);

/// Normality check: the minimal sets (empty set and singletons) must
/// measure ~0; attains_one reports whether some subset reaches measure 1.
struct NormalityReport {
    bool minimal_ok = false;
    double max_value = 0.0;
    bool attains_one = false;
};

NormalityReport check_normal(const ConflictLattice& lat, double tol = 1e-9);

/// Monotonicity check over covering pairs (A, B) with B = A + one source.
/// A chain violation always implies a covering-pair violation, so covering
/// pairs suffice.
struct MonotonicityViolation {
    SourceSubset subset;
    SourceSubset superset;
    double subset_value = 0.0;
    double superset_value = 0.0;
};

struct MonotonicityReport {
    bool is_monotone = true;
    std::vector<MonotonicityViolation> violations;
};

MonotonicityReport check_monotone(const ConflictLattice& lat, double tol = 1e-9);

} // namespace cfm
