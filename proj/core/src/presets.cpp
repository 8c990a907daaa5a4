#include "rkstab/presets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace rkstab {
namespace {

Rational q(long num, long den = 1) { return Rational(Integer(num), Integer(den)); }

std::string normalize(std::string_view name) {
  std::string out;
  for (char ch : name) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  return out;
}

StabilityPolynomial taylor_plus(int p, std::vector<Rational> tail) {
  auto alpha = taylor_polynomial(p).coefficients();
  alpha.insert(alpha.end(), tail.begin(), tail.end());
  return StabilityPolynomial(std::move(alpha));
}

RationalMatrix lower(std::size_t s, std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix a(s, s);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) a(i, j++) = v;
    ++i;
  }
  return a;
}

ButcherTableau pair21() {
  ButcherTableau t;
  t.a = lower(3, {{}, {q(1)}, {q(1, 2), q(1, 2)}});
  t.c = {q(0), q(1), q(1)};
  t.b = {q(1, 2), q(1, 2), q(0)};
  t.bhat = std::vector<Rational>{q(1), q(-1, 6), q(1, 6)};
  return t;
}

ButcherTableau pair32() {
  const Rational r = sqrt82_approximation();
  ButcherTableau t;
  t.a = lower(4, {{}, {q(1, 2)}, {q(-1), q(2)}, {q(1, 6), q(2, 3), q(1, 6)}});
  t.c = {q(0), q(1, 2), q(1), q(1)};
  t.b = {q(1, 6), q(2, 3), q(1, 6), q(0)};
  t.bhat = std::vector<Rational>{(22 - r) / 72, (r + 14) / 36, (r - 4) / 144, (16 - r) / 48};
  return t;
}

ButcherTableau pair43() {
  ButcherTableau t;
  t.a = lower(5, {{},
                  {q(2, 5)},
                  {q(-3, 20), q(3, 4)},
                  {q(19, 44), q(-15, 44), q(10, 11)},
                  {q(11, 72), q(25, 72), q(25, 72), q(11, 72)}});
  t.c = {q(0), q(2, 5), q(3, 5), q(1), q(1)};
  t.b = {q(11, 72), q(25, 72), q(25, 72), q(11, 72), q(0)};
  t.bhat = std::vector<Rational>{q(1251515, 8970912), q(3710105, 8970912), q(2519695, 8970912),
                                 q(61105, 8970912), q(119041, 747576)};
  return t;
}

// Parses "taylor(p)" -> p, or nullopt.
std::optional<int> taylor_order(std::string_view name) {
  constexpr std::string_view prefix = "taylor(";
  if (!name.starts_with(prefix) || !name.ends_with(")")) return std::nullopt;
  auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  int p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return p;
}

}  // namespace

Rational sqrt82_approximation() {
  Integer scale = 1;
  for (int i = 0; i < 40; ++i) scale *= 10;
  return Rational(boost::multiprecision::sqrt(Integer(82) * scale * scale), scale);
}

ButcherTableau preset_tableau(std::string_view pair_name) {
  const auto name = normalize(pair_name);
  if (name == "pair2(1)") return pair21();
  if (name == "pair3(2)") return pair32();
  if (name == "pair4(3)") return pair43();
  throw UnknownPreset("unknown embedded pair: \"" + std::string(pair_name) + "\"");
}

Preset preset(std::string_view raw_name) {
  const auto name = normalize(raw_name);

  if (name == "euler") return {name, taylor_polynomial(1), std::nullopt, false};
  if (auto p = taylor_order(name)) {
    if (*p < 1) throw UnknownPreset("taylor(p) needs p >= 1");
    return {name, taylor_polynomial(*p), std::nullopt, false};
  }
  if (name == "ssprk(4,3)") return {name, taylor_plus(3, {q(1, 48)}), std::nullopt, false};
  if (name == "ssprk(5,4)") {
    // Printed as a 16-digit decimal; kept bit-exact as that decimal.
    return {name, taylor_plus(4, {parse_rational("4.477718303076007e-3")}), std::nullopt, false};
  }
  if (name == "ssprk(10,4)") {
    return {name,
            taylor_plus(4, {q(17, 2160), q(7, 6480), q(1, 9720), q(1, 155520), q(1, 4199040),
                            q(1, 251942400)}),
            std::nullopt, false};
  }
  if (name.starts_with("pair")) {
    std::string base = name;
    Weights which = Weights::Main;
    if (auto dot = name.find('.'); dot != std::string::npos) {
      base = name.substr(0, dot);
      const auto suffix = name.substr(dot + 1);
      if (suffix == "embedded") {
        which = Weights::Embedded;
      } else if (suffix != "main") {
        throw UnknownPreset("unknown pair weights \"" + suffix + "\" (main|embedded)");
      }
    }
    auto tableau = preset_tableau(base);
    const bool approximate = base == "pair3(2)" && which == Weights::Embedded;
    auto poly = tableau_stability_coefficients(tableau, which);
    const std::string full = base + (which == Weights::Main ? ".main" : ".embedded");
    return {full, std::move(poly), std::move(tableau), approximate};
  }
  throw UnknownPreset("unknown preset: \"" + std::string(raw_name) + "\"");
}

std::vector<std::string> preset_names() {
  return {"euler",           "taylor(1)",         "taylor(2)",          "taylor(3)",
          "taylor(4)",       "taylor(5)",         "taylor(6)",          "taylor(7)",
          "taylor(8)",       "taylor(9)",         "taylor(10)",         "taylor(11)",
          "taylor(12)",      "ssprk(4,3)",        "ssprk(5,4)",         "ssprk(10,4)",
          "pair2(1).main",   "pair2(1).embedded", "pair3(2).main",      "pair3(2).embedded",
          "pair4(3).main",   "pair4(3).embedded"};
}

}  // namespace rkstab
