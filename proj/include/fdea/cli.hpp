#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdea {

/// Command-line entry point. `args` excludes the program name. Returns the
/// process exit code: 0 on success (including --help), 1 on usage, parse or
/// data errors, 2 on model infeasibility.
///
/// Subcommands:
///   evaluate  bound triples + scalarized efficiencies per DMU
///   rank      geometric-average ranking with classifications
///   compare   side-by-side comparison against an external ranking
///   fuzzify   collapse raw observation rows into (min, mean, max) TFNs
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdea
