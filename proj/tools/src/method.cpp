#include "rkstab/cli/method.hpp"

#include <sstream>

#include "rkstab/presets.hpp"
#include "rkstab/tableau_io.hpp"

namespace rkstab::cli {

StabilityPolynomial parse_alpha_list(const std::string& text) {
  std::vector<Rational> alpha;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) alpha.push_back(parse_rational(item));
  if (alpha.empty()) throw std::invalid_argument("empty coefficient list");
  return StabilityPolynomial(std::move(alpha));
}

ResolvedMethod resolve_method(const MethodSpec& spec) {
  const int sources = int(spec.preset.has_value()) + int(spec.alpha.has_value()) + int(spec.tableau.has_value());
  if (sources != 1) throw std::invalid_argument("give exactly one of --preset, --alpha, --tableau");
  if (spec.steps < 1) throw std::invalid_argument("--steps must be >= 1");

  ResolvedMethod out{"", taylor_polynomial(1), 0, false, {}};
  if (spec.preset) {
    std::string name = *spec.preset;
    if (spec.which == Weights::Embedded && name.starts_with("pair") && name.find('.') == std::string::npos) {
      name += ".embedded";
    }
    auto p = preset(name);
    out.descriptor = p.name;
    out.polynomial = std::move(p.polynomial);
    out.approximate_input = p.approximate_input;
  } else if (spec.alpha) {
    out.polynomial = parse_alpha_list(*spec.alpha);
    out.descriptor = "alpha" + to_string(out.polynomial);
  } else {
    const auto tableau = load_tableau(*spec.tableau);
    out.polynomial = tableau_stability_coefficients(tableau, spec.which);
    out.descriptor = *spec.tableau + (spec.which == Weights::Main ? " (main)" : " (embedded)");
    out.warnings = tableau_warnings(tableau);
  }
  out.order = linear_order(out.polynomial);
  if (spec.steps > 1) {
    out.polynomial = compose_steps(out.polynomial, spec.steps);
    out.descriptor += "^" + std::to_string(spec.steps);
  }
  return out;
}

}  // namespace rkstab::cli
