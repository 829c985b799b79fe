#pragma once

#include <iosfwd>

namespace cfm {

/// Command-line entry point. Data goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on validation/data errors, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cfm
