#pragma once

#include <string>
#include <string_view>

#include "cfm/evidence.hpp"
#include "cfm/lattice.hpp"
#include "cfm/stream.hpp"

namespace cfm {

/// A named evidence set as stored in a scenario file.
struct Scenario {
    std::string name;
    EvidenceSet evidence;
};

/// Scenario files are JSON documents:
///   { "name": "example1", "sources": [ {"id": 1, "lo": 0.0, "hi": 12.0}, ... ] }
/// Malformed documents raise syntax_error (with location); documents that
/// parse but do not validate raise validation_error wrapping the cause.
Scenario parse_scenario(std::string_view text);
std::string emit_scenario(const Scenario& scenario);

/// Series files are CSV: header `time,s1,s2,...`, one row per timestamp.
/// Values are emitted at full precision and round-trip exactly.
SensorSeries parse_series(std::string_view text);
std::string emit_series(const SensorSeries& series);

enum class LatticeFormat { table, structured };

/// Renders every non-empty subset, sorted by (size, members), one row per
/// subset with the CF value at six decimal places. Byte-for-byte
/// deterministic for a given lattice.
std::string emit_lattice(const ConflictLattice& lat, LatticeFormat format);

/// Label like "x1+x2+x3" for a subset's members.
std::string subset_label(const SourceSubset& sub);

} // namespace cfm
