#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rkstab/classify.hpp"
#include "rkstab/cli/method.hpp"
#include "rkstab/matrix.hpp"

namespace rkstab::cli {

inline constexpr std::string_view kCounterexampleNote = "counterexample known (rk4-counterexample system)";
inline constexpr std::string_view kApproximateNote =
    "approximate-input: irrational tableau entries replaced by 40-digit rationals";

struct AnalysisReport {
  std::string method;
  int p = 0;  // linear order of the single step
  int k_star = 0;
  Rational beta_star;
  RationalMatrix gamma_star;
  std::vector<double> eigenvalues;  // descending, full precision
  StabilityStatus verdict = StabilityStatus::Undetermined;
  std::vector<std::string> notes;

  /// Table column: yes / no / ? / no*.
  std::string ss() const;
  bool operator==(const AnalysisReport&) const = default;
};

/// Classifies the method. Undetermined verdicts are probed with the
/// rk4-counterexample system; a norm above 1 + 1e-9 adds kCounterexampleNote.
AnalysisReport analyze(const ResolvedMethod& method);
AnalysisReport analyze(std::string descriptor, const StabilityPolynomial& r);

int exit_code(StabilityStatus status);

nlohmann::ordered_json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

/// Six significant digits, tables style: -8.21836e-2, -1.30384, +5.60618e-3.
std::string format_sci(double value);

std::string render_text(const AnalysisReport& report);
std::string csv_header();
std::string csv_row(const AnalysisReport& report);
std::string csv_escape(const std::string& field);

}  // namespace rkstab::cli
