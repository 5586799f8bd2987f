#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace poteq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAnomaly = 2;

/// Runs one command line (program name excluded). "-" as a file argument
/// reads `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace poteq::cli
