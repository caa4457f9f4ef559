#pragma once

#include "tempus/experiments.hpp"

#include <iosfwd>

namespace tempus {

/// Parses flags (and an optional --config key=value file; flags win) into a
/// RunConfig. CLI11 parse failures and --help are reported through its own
/// exception types; semantic problems are aggregated by require_valid().
RunConfig parse_command_line(int argc, const char* const* argv);

/// Full CLI entry point. Results go to `out` (or --out); errors go to `err`
/// as "tempus: error [Category]: message".
///
/// Exit codes: 0 success, 2 invalid configuration, 3 numerical error,
/// 4 internal invariant violation, 5 I/O failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tempus
