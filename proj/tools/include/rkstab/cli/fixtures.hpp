#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rkstab/cli/report.hpp"

namespace rkstab::cli {

/// One reference table row. `gamma` is the printed matrix M with
/// Gamma* = -M, rows separated by ';' (empty when not printed); entries
/// written as decimals are compared at relative 1e-4, the rest exactly.
struct FixtureRow {
  std::string label;
  std::string source;  // preset name; empty for pairs whose tableau must be supplied
  int steps = 1;
  int k_star = 0;
  std::string beta;  // exact "p/q", or a decimal compared at relative 1e-5
  std::vector<double> eigenvalues;
  std::string gamma;
  std::string ss;  // yes / no / ? / no*
  std::string remark;
};

inline constexpr std::string_view kTableSelectors[] = {"linear", "rk4-multistep", "ssprk", "pairs"};

/// Throws std::invalid_argument for unknown selectors.
std::vector<FixtureRow> fixture_rows(std::string_view selector);

/// Pairs whose tableaux are not shipped: "5(4)" .. "9(8)".
bool is_external_pair(std::string_view label);

struct RowResult {
  FixtureRow fixture;
  std::optional<AnalysisReport> report;  // empty: tableau unavailable
  std::vector<std::string> mismatches;
  std::vector<std::string> findings;     // e.g. counterexample found where the table says "?"
};

/// Compares a report with a fixture row; returns human-readable mismatches.
std::vector<std::string> compare_row(const FixtureRow& fixture, const AnalysisReport& report,
                                     std::vector<std::string>* findings = nullptr);

struct TableOptions {
  std::optional<std::pair<int, int>> orders;       // linear table only
  std::map<std::string, std::string> pair_tableaux;  // "5(4)" -> tableau path
};

std::vector<RowResult> run_table(std::string_view selector, const TableOptions& options);

/// "a..b" or "a".
std::pair<int, int> parse_order_range(const std::string& text);

}  // namespace rkstab::cli
