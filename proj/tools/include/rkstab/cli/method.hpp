#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rkstab/polynomial.hpp"

namespace rkstab::cli {

/// Where a method comes from on the command line. Exactly one of the three
/// sources is set.
struct MethodSpec {
  std::optional<std::string> preset;
  std::optional<std::string> alpha;    // "1, 1, 1/2"
  std::optional<std::string> tableau;  // path to a tableau document
  Weights which = Weights::Main;
  int steps = 1;
};

struct ResolvedMethod {
  std::string descriptor;
  StabilityPolynomial polynomial;
  int order = 0;  // linear order of the single-step method
  bool approximate_input = false;
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument for conflicting or missing sources, bad
/// rational strings and unknown presets; InvalidMethod for degenerate input.
ResolvedMethod resolve_method(const MethodSpec& spec);

/// Comma-separated coefficient list, alpha_0 first.
StabilityPolynomial parse_alpha_list(const std::string& text);

}  // namespace rkstab::cli
