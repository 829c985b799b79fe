#include "cfm/evidence.hpp"

#include <cmath>
#include <string>

namespace cfm {

SourceSubset SourceSubset::full(int n) {
    if (n < 0 || n > max_sources)
        throw Error(Errc::too_many_sources,
                    "subset can address at most 64 sources, got n = " + std::to_string(n));
    SourceSubset s;
    s.mask_ = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
}

SourceSubset& SourceSubset::add(int id) {
    if (id < 1 || id > max_sources)
        throw Error(Errc::invalid_source_id,
                    "source id must be in 1..64, got " + std::to_string(id));
    mask_ |= std::uint64_t{1} << (id - 1);
    return *this;
}

SourceSubset SourceSubset::without(int id) const {
    SourceSubset s = *this;
    if (id >= 1 && id <= max_sources) s.mask_ &= ~(std::uint64_t{1} << (id - 1));
    return s;
}

std::vector<int> SourceSubset::members() const {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        ids.push_back(static_cast<int>(__builtin_ctzll(m)) + 1);
    return ids;
}

const Interval& EvidenceSet::interval_of(int id) const {
    if (!has_id(id))
        throw Error(Errc::unknown_source,
                    "no source with id " + std::to_string(id) + " in evidence of size " +
                        std::to_string(size()));
    return sources_[static_cast<std::size_t>(position_of_id_[id - 1])].interval;
}

SourceSubset EvidenceSet::all() const {
    return SourceSubset::full(size());
}

EvidenceSet validate_evidence(const std::vector<Source>& raw) {
    if (raw.empty())
        throw Error(Errc::empty_input, "evidence must contain at least one source");

    const int n = static_cast<int>(raw.size());
    EvidenceSet ev;
    ev.sources_ = raw;
    ev.position_of_id_.assign(raw.size(), -1);

    for (int k = 0; k < n; ++k) {
        const Source& s = raw[static_cast<std::size_t>(k)];
        // ids unique and each in 1..n together force contiguity
        if (s.id < 1 || s.id > n)
            throw Error(Errc::invalid_source_id,
                        "source id " + std::to_string(s.id) + " outside 1.." + std::to_string(n));
        if (ev.position_of_id_[s.id - 1] != -1)
            throw Error(Errc::duplicate_id, "duplicate source id " + std::to_string(s.id));
        if (!std::isfinite(s.interval.lo) || !std::isfinite(s.interval.hi))
            throw Error(Errc::invalid_interval,
                        "source " + std::to_string(s.id) + ": endpoints must be finite");
        if (s.interval.lo > s.interval.hi)
            throw Error(Errc::invalid_interval,
                        "source " + std::to_string(s.id) + ": lo " +
                            std::to_string(s.interval.lo) + " exceeds hi " +
                            std::to_string(s.interval.hi));
        ev.position_of_id_[s.id - 1] = k;
    }
    return ev;
}

} // namespace cfm
