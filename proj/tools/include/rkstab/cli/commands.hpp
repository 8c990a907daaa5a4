#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkstab::cli {

/// Exit codes: analyze follows the verdict (0 stable, 1 not stable,
/// 2 undetermined); tables/verify/decay/counterexample use 0 = pass,
/// 1 = fail. Usage and input errors return kExitError.
inline constexpr int kExitError = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rkstab::cli
