#include "cfm/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

namespace cfm {

double ConflictLattice::value_at(std::uint64_t mask) const {
    if (mask >= values_.size())
        throw Error(Errc::unknown_source,
                    "subset mask " + std::to_string(mask) + " outside a lattice over " +
                        std::to_string(n_) + " sources");
    return values_[mask];
}

ConflictLattice full_lattice(const EvidenceSet& ev) {
    const int n = ev.size();
    if (n > max_lattice_sources)
        throw Error(Errc::too_many_sources,
                    "full lattice limited to " + std::to_string(max_lattice_sources) +
                        " sources, got " + std::to_string(n));

    ConflictLattice lat;
    lat.n_ = n;
    const std::uint64_t total = std::uint64_t{1} << n;
    lat.values_.assign(total, 0.0);

    auto evaluate = [&](std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t mask = first; mask < last; ++mask)
            lat.values_[mask] = conflict(ev, SourceSubset::from_mask(mask));
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (n < 12 || hw == 1) {
        evaluate(1, total);
        return lat;
    }

    // independent pure evaluations over disjoint mask ranges
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + hw - 1) / hw;
    for (unsigned t = 0; t < hw; ++t) {
        const std::uint64_t first = std::max<std::uint64_t>(1, t * chunk);
        const std::uint64_t last = std::min<std::uint64_t>(total, (t + 1) * chunk);
        if (first < last) workers.emplace_back(evaluate, first, last);
    }
    for (std::thread& w : workers) w.join();
    return lat;
}

DeltaReport leave_one_out(const ConflictLattice& lat) {
    const int n = lat.source_count();
    if (n < 2)
        throw Error(Errc::too_few_sources,
                    "leave-one-out needs at least two sources, got " + std::to_string(n));

    const std::uint64_t full = lat.full_mask();
    const double top = lat.value_at(full);

    DeltaReport report;
    double best = -std::numeric_limits<double>::infinity();
    for (int id = 1; id <= n; ++id) {
        const std::uint64_t without = full & ~(std::uint64_t{1} << (id - 1));
        const double d = top - lat.value_at(without);
        report.delta[id] = d;
        best = std::max(best, d);
    }
    for (const auto& [id, d] : report.delta)
        if (d == best) report.argmax_ids.push_back(id);
    return report;
}

NormalityReport check_normal(const ConflictLattice& lat, double tol) {
    NormalityReport report;
    report.minimal_ok = true;
    for (int id = 1; id <= lat.source_count(); ++id)
        if (lat.value_at(std::uint64_t{1} << (id - 1)) > tol) report.minimal_ok = false;

    for (std::uint64_t mask = 1; mask <= lat.full_mask(); ++mask)
        report.max_value = std::max(report.max_value, lat.value_at(mask));
    report.attains_one = report.max_value >= 1.0 - tol;
    return report;
}

MonotonicityReport check_monotone(const ConflictLattice& lat, double tol) {
    MonotonicityReport report;
    for (std::uint64_t superset = 1; superset <= lat.full_mask(); ++superset) {
        const double big = lat.value_at(superset);
        for (std::uint64_t rest = superset; rest != 0; rest &= rest - 1) {
            const std::uint64_t bit = rest & (~rest + 1);
            const std::uint64_t subset = superset & ~bit;
            if (subset == 0) continue; // the empty set measures 0 and cannot violate
            const double small = lat.value_at(subset);
            if (small > big + tol)
                report.violations.push_back({SourceSubset::from_mask(subset),
                                             SourceSubset::from_mask(superset), small, big});
        }
    }
    report.is_monotone = report.violations.empty();
    return report;
}

} // namespace cfm
