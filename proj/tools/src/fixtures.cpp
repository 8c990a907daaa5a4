#include "rkstab/cli/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rkstab/presets.hpp"
#include "rkstab/tableau_io.hpp"

namespace rkstab::cli {

namespace {

const std::string kH2 = "1,1/2;1/2,1/3";
const std::string kT4 = "1,1/2,1/6;1/2,1/3,1/8;1/6,1/8,1/24";

std::vector<FixtureRow> linear_rows() {
  return {
      {"p=1", "taylor(1)", 1, 1, "1", {-1.00000}, "1", "no", ""},
      {"p=2", "taylor(2)", 1, 2, "1/4", {-1.30902, -1.90983e-1}, "1,1/2;1/2,1/2", "no", ""},
      {"p=3", "taylor(3)", 1, 2, "-1/12", {-1.26759, -6.57415e-2}, kH2, "yes", ""},
      {"p=4", "taylor(4)", 1, 3, "-1/72", {-1.30128, -7.93266e-2, 5.60618e-3}, kT4, "no*", ""},
      {"p=5", "taylor(5)", 1, 3, "1/360", {-1.30150, -8.07336e-2, -1.10151e-3},
       "1,1/2,1/6;1/2,1/3,1/8;1/6,1/8,1/20", "no", ""},
      {"p=6", "taylor(6)", 1, 4, "1/2880", {-1.30375, -8.21871e-2, -1.40529e-3, -1.60133e-4},
       "1,1/2,1/6,1/24;1/2,1/3,1/8,1/30;1/6,1/8,1/20,1/72;1/24,1/30,1/72,1/240", "no", ""},
      {"p=7", "taylor(7)", 1, 4, "-1/20160", {-1.30375, -8.21836e-2, -1.36301e-3, -7.86229e-6},
       "1,1/2,1/6,1/24;1/2,1/3,1/8,1/30;1/6,1/8,1/20,1/72;1/24,1/30,1/72,1/252", "yes", ""},
      {"p=8", "taylor(8)", 1, 5, "-1/201600", {-1.30384, -8.22588e-2, -1.38580e-3, -9.32706e-6, 2.24989e-6},
       "1,1/2,1/6,1/24,1/120;1/2,1/3,1/8,1/30,1/144;1/6,1/8,1/20,1/72,1/336;"
       "1/24,1/30,1/72,1/252,1/1152;1/120,1/144,1/336,1/1152,23/120960",
       "?", ""},
      {"p=9", "taylor(9)", 1, 5, "1/1814400", {-1.30384, -8.22588e-2, -1.38585e-3, -9.75366e-6, -3.11800e-8}, "",
       "no", ""},
      {"p=10", "taylor(10)", 1, 6, "1/21772800",
       {-1.30384, -8.22613e-2, -1.38688e-3, -9.91006e-6, -4.70638e-8, -1.63872e-8}, "", "no",
       "reference beta 1/221772800 is a misprint of 2/(10! * 12) = 1/21772800"},
      {"p=11", "taylor(11)", 1, 6, "-1/239500800",
       {-1.30384, -8.22613e-2, -1.38688e-3, -9.90966e-6, -3.87351e-8, -7.87018e-11}, "", "yes", ""},
      {"p=12", "taylor(12)", 1, 7, "-1/3353011200",
       {-1.30384, -8.22614e-2, -1.38691e-3, -9.91617e-6, -3.93334e-8, 1.45458e-10, -8.54170e-11}, "", "?", ""},
  };
}

std::vector<FixtureRow> rk4_rows() {
  return {
      {"(P4)^2", "taylor(4)", 2, 3, "-1/36", {-5.73797, -4.99093e-1, -1.29329e-2}, "2,2,4/3;2,8/3,2;4/3,2,19/12",
       "yes", ""},
      {"(P4)^3", "taylor(4)", 3, 3, "-1/24", {-2.28380e1, -1.21069, -7.62892e-2},
       "3,9/2,9/2;9/2,9,81/8;9/2,81/8,97/8", "yes", ""},
  };
}

std::vector<FixtureRow> ssprk_rows() {
  return {
      {"(4,3)", "ssprk(4,3)", 1, 2, "-1/24", {-1.26759, -6.57415e-2}, kH2, "yes", ""},
      {"(10,4)", "ssprk(10,4)", 1, 3, "-1/3240", {-1.30149, -8.06493e-2, -7.35115e-4},
       "1,1/2,1/6;1/2,1/3,1/8;1/6,1/8,107/2160", "yes", ""},
      {"(5,4)", "ssprk(5,4)", 1, 3, "-4.93345e-3", {-1.30140, -8.00541e-2, 1.97309e-3},
       "1,1/2,1/6;1/2,1/3,1/8;1/6,1/8,0.046144", "no*",
       "reference gamma_33 = 1/24 is a misprint; the printed eigenvalues belong to 0.046144"},
      {"(5,4)^2", "ssprk(5,4)", 2, 3, "-9.86690e-3", {-5.74021, -5.01739e-1, -1.70056e-2},
       "2,2,4/3;2,8/3,2;4/3,2,1.5923", "yes", ""},
      {"(5,4)^3", "ssprk(5,4)", 3, 3, "-1.48004e-2", {-2.28450e1, -1.21415, -7.93174e-2},
       "3,9/2,9/2;9/2,9,81/8;9/2,81/8,12.138", "yes", ""},
  };
}

std::vector<FixtureRow> pair_rows() {
  return {
      {"2(1) p=2", "pair2(1).main", 1, 2, "1/4", {-1.30902, -1.90983e-1}, "", "no", ""},
      {"2(1) p=1", "pair2(1).embedded", 1, 1, "1", {-1.00000}, "", "no", ""},
      {"3(2) p=3", "pair3(2).main", 1, 2, "-1/12", {-1.26759, -6.57415e-2}, "", "yes", ""},
      {"3(2) p=2", "pair3(2).embedded", 1, 2, "1/12", {-1.28130, -1.11257e-1}, "", "no", ""},
      {"4(3) p=4", "pair4(3).main", 1, 3, "-1/72", {-1.30128, -7.93266e-2, 5.60618e-3}, "", "no*", ""},
      {"4(3) p=3", "pair4(3).embedded", 1, 2, "-119041/4485456", {-1.26759, -6.57415e-2}, "", "yes", ""},
      {"5(4) p=5", "", 1, 3, "-43/6209280", {-1.3015, -8.07336e-2, -1.10151e-3}, "", "yes", ""},
      {"5(4) p=4", "", 1, 3, "51767/367590960", {-1.30150, -8.07430e-2, -1.14174e-3}, "", "no", ""},
      {"6(5) p=6", "", 1, 4, "79007/2560896000", {-1.30375, -8.21839e-2, -1.36689e-3, -2.38718e-5}, "", "no", ""},
      {"6(5) p=5", "", 1, 3, "1233467/9027158400", {-1.30150, -8.07336e-2, -1.10151e-3}, "", "no", ""},
      {"7(6) p=7", "", 1, 4, "29615605063/38967665360400000",
       {-1.30375, -8.21836e-2, -1.36301e-3, -7.86229e-6}, "", "no", ""},
      {"7(6) p=6", "", 1, 4, "-20202919901/1855603112400000",
       {-1.30375, -8.21833e-2, -1.35985e-3, 5.49402e-6}, "", "?", ""},
      {"8(7) p=8", "", 1, 5, "-3.21308e-7", {-1.30384, -8.22588e-2, -1.38584e-3, -9.71236e-6, 1.43671e-7}, "", "?",
       ""},
      {"8(7) p=7", "", 1, 4, "-2.39706e-6", {-1.30375, -8.21836e-2, -1.36301e-3, -7.86229e-6}, "", "yes", ""},
      {"9(8) p=9", "", 1, 5, "-8.95352e-9", {-1.30384, -8.22588e-2, -1.38585e-3, -9.75366e-6, -3.11800e-8}, "",
       "yes", ""},
      {"9(8) p=8", "", 1, 5, "-5.46447e-7", {-1.30384, -8.22588e-2, -1.38585e-3, -9.78641e-6, -1.64476e-7}, "",
       "yes", ""},
  };
}

bool is_decimal(const std::string& text) { return text.find_first_of(".eE") != std::string::npos; }

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

std::string pair_name(const std::string& label) { return label.substr(0, label.find(' ')); }

StabilityStatus status_of(const std::string& ss) {
  if (ss == "yes") return StabilityStatus::StronglyStable;
  if (ss == "no") return StabilityStatus::NotStronglyStable;
  return StabilityStatus::Undetermined;
}

}  // namespace

std::vector<FixtureRow> fixture_rows(std::string_view selector) {
  if (selector == "linear") return linear_rows();
  if (selector == "rk4-multistep") return rk4_rows();
  if (selector == "ssprk") return ssprk_rows();
  if (selector == "pairs") return pair_rows();
  throw std::invalid_argument("unknown table '" + std::string(selector) +
                              "' (expected linear, rk4-multistep, ssprk or pairs)");
}

bool is_external_pair(std::string_view label) {
  for (std::string_view p : {"5(4)", "6(5)", "7(6)", "8(7)", "9(8)"}) {
    if (label.starts_with(p)) return true;
  }
  return false;
}

std::vector<std::string> compare_row(const FixtureRow& f, const AnalysisReport& r, std::vector<std::string>* findings) {
  std::vector<std::string> bad;
  if (r.k_star != f.k_star) {
    bad.push_back("k* " + std::to_string(r.k_star) + " != " + std::to_string(f.k_star));
  }
  if (is_decimal(f.beta)) {
    if (!close(to_double(r.beta_star), std::stod(f.beta), 1e-5)) {
      bad.push_back("beta* " + format_sci(to_double(r.beta_star)) + " != " + f.beta);
    }
  } else if (r.beta_star != parse_rational(f.beta)) {
    bad.push_back("beta* " + to_string(r.beta_star) + " != " + f.beta);
  }

  auto mine = r.eigenvalues;
  auto want = f.eigenvalues;
  std::sort(mine.begin(), mine.end());
  std::sort(want.begin(), want.end());
  if (mine.size() != want.size()) {
    bad.push_back("eigenvalue count " + std::to_string(mine.size()) + " != " + std::to_string(want.size()));
  } else {
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (!close(mine[i], want[i], 1e-5)) bad.push_back("eigenvalue " + format_sci(mine[i]) + " != " + format_sci(want[i]));
    }
  }

  if (!f.gamma.empty()) {
    std::stringstream rows(f.gamma);
    std::string row;
    std::size_t i = 0;
    while (std::getline(rows, row, ';')) {
      std::stringstream cells(row);
      std::string cell;
      std::size_t k = 0;
      while (std::getline(cells, cell, ',')) {
        if (i >= r.gamma_star.rows() || k >= r.gamma_star.cols()) {
          bad.push_back("Gamma* has wrong shape");
          return bad;
        }
        const Rational got = -r.gamma_star(i, k);
        const bool ok = is_decimal(cell) ? close(to_double(got), std::stod(cell), 1e-4) : got == parse_rational(cell);
        if (!ok) {
          bad.push_back("Gamma*(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") = -" + to_string(got) +
                        " != -" + cell);
        }
        ++k;
      }
      ++i;
    }
  }

  if (r.verdict != status_of(f.ss)) {
    bad.push_back("verdict " + std::string(to_string(r.verdict)) + " != " + f.ss);
  } else if (f.ss == "no*" && r.ss() != "no*") {
    bad.push_back("no counterexample found for a no* row");
  } else if (f.ss == "?" && r.ss() == "no*" && findings) {
    findings->push_back("counterexample found although the table leaves this row open");
  }
  return bad;
}

std::pair<int, int> parse_order_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    const int hi = dots == std::string::npos ? lo : std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad order range '" + text + "' (expected a..b)");
  }
}

std::vector<RowResult> run_table(std::string_view selector, const TableOptions& options) {
  std::vector<RowResult> out;
  for (auto& f : fixture_rows(selector)) {
    if (selector == "linear" && options.orders) {
      const int p = std::stoi(f.label.substr(2));
      if (p < options.orders->first || p > options.orders->second) continue;
    }
    RowResult row{f, std::nullopt, {}, {}};
    if (!f.source.empty()) {
      const auto p = preset(f.source);
      const auto r = f.steps > 1 ? compose_steps(p.polynomial, f.steps) : p.polynomial;
      ResolvedMethod m{f.source + (f.steps > 1 ? "^" + std::to_string(f.steps) : ""), r, linear_order(p.polynomial),
                       p.approximate_input, {}};
      row.report = analyze(m);
    } else if (auto it = options.pair_tableaux.find(pair_name(f.label)); it != options.pair_tableaux.end()) {
      const auto tableau = load_tableau(it->second);
      const bool embedded = f.label.back() != f.label.front();  // "5(4) p=4" is the embedded row
      const auto which = embedded ? Weights::Embedded : Weights::Main;
      const auto r = tableau_stability_coefficients(tableau, which);
      ResolvedMethod m{it->second + (embedded ? " (embedded)" : " (main)"), r, linear_order(r), false,
                       tableau_warnings(tableau)};
      row.report = analyze(m);
    }
    if (row.report) row.mismatches = compare_row(f, *row.report, &row.findings);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace rkstab::cli
