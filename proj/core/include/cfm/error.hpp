#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cfm {

/// Failure categories raised by the library. Data problems are rejected at
/// validation boundaries; computational routines only signal shape errors.
enum class Errc {
    // evidence validation
    empty_input,
    invalid_interval,
    duplicate_id,
    invalid_source_id,
    // subset shape
    empty_subset,
    singleton_subset,
    unknown_source,
    // lattice
    too_many_sources,
    too_few_sources,
    // series / windowing
    window_too_long,
    empty_series,
    non_increasing_time,
    ragged_row,
    non_finite_value,
    // configuration and parsing
    invalid_config,
    unknown_example,
    syntax_error,
    validation_error,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying an Errc. Wrapping errors (e.g. a parser rejecting a
/// document because validation failed) keep the underlying code in cause().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    Error(Errc code, Errc cause, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code), cause_(cause) {}

    Errc code() const noexcept { return code_; }
    std::optional<Errc> cause() const noexcept { return cause_; }

private:
    Errc code_;
    std::optional<Errc> cause_;
};

} // namespace cfm
