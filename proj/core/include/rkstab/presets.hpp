#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rkstab/polynomial.hpp"

namespace rkstab {

class UnknownPreset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named method from the built-in catalog.
struct Preset {
  std::string name;
  StabilityPolynomial polynomial;
  /// Set for embedded-pair presets; the polynomial was reduced from it.
  std::optional<ButcherTableau> tableau;
  /// Some coefficient was irrational and is carried as a rational
  /// approximation (the 3(2) pair's sqrt(82) weights).
  bool approximate_input = false;
};

/// Catalog names:
///   euler, taylor(p)                       p >= 1
///   ssprk(4,3), ssprk(5,4), ssprk(10,4)
///   pair2(1), pair3(2), pair4(3)           main weights
///   pairN(M).main, pairN(M).embedded
/// Whitespace inside the parentheses is ignored.
Preset preset(std::string_view name);

/// Tableau of an embedded pair ("pair2(1)", "pair3(2)", "pair4(3)").
ButcherTableau preset_tableau(std::string_view pair_name);

/// Non-parametric catalog entries plus a few taylor(p) examples.
std::vector<std::string> preset_names();

/// sqrt(82) truncated to 40 decimal places.
Rational sqrt82_approximation();

}  // namespace rkstab
