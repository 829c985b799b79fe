#include "cfm/error.hpp"

namespace cfm {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::empty_input: return "empty_input";
    case Errc::invalid_interval: return "invalid_interval";
    case Errc::duplicate_id: return "duplicate_id";
    case Errc::invalid_source_id: return "invalid_source_id";
    case Errc::empty_subset: return "empty_subset";
    case Errc::singleton_subset: return "singleton_subset";
    case Errc::unknown_source: return "unknown_source";
    case Errc::too_many_sources: return "too_many_sources";
    case Errc::too_few_sources: return "too_few_sources";
    case Errc::window_too_long: return "window_too_long";
    case Errc::empty_series: return "empty_series";
    case Errc::non_increasing_time: return "non_increasing_time";
    case Errc::ragged_row: return "ragged_row";
    case Errc::non_finite_value: return "non_finite_value";
    case Errc::invalid_config: return "invalid_config";
    case Errc::unknown_example: return "unknown_example";
    case Errc::syntax_error: return "syntax_error";
    case Errc::validation_error: return "validation_error";
    }
    return "unknown";
}

} // namespace cfm
