#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poscodeg::cli {

/// Runs one command-line invocation (arguments exclude the program name)
/// against the given streams and returns the process exit code:
///   0  success / graph is free / property holds
///   1  copy found / property violated
///   2  search finished without exhausting its space
///   3  size outside the supported range
///   64 usage error or malformed input
/// Output is byte-identical for identical arguments; --jobs changes timing
/// only.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace poscodeg::cli
