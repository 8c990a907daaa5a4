#include "rkstab/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rkstab/energy.hpp"
#include "rkstab/verify.hpp"

namespace rkstab::cli {

namespace {

bool counterexample_found(const StabilityPolynomial& r) {
  const auto sweep = stability_sweep(r, counterexample_rk4(), 1e-4, 1e-1, 60);
  return sweep.max_norm() > 1.0 + 1e-9;
}

StabilityStatus parse_status(const std::string& text) {
  for (auto s : {StabilityStatus::StronglyStable, StabilityStatus::NotStronglyStable, StabilityStatus::Undetermined}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

}  // namespace

std::string AnalysisReport::ss() const {
  switch (verdict) {
    case StabilityStatus::StronglyStable: return "yes";
    case StabilityStatus::NotStronglyStable: return "no";
    case StabilityStatus::Undetermined: break;
  }
  for (const auto& n : notes) {
    if (n == kCounterexampleNote) return "no*";
  }
  return "?";
}

AnalysisReport analyze(std::string descriptor, const StabilityPolynomial& r) {
  const auto energy = expand_energy(r);
  const auto verdict = classify_strong_stability(energy);
  const auto lead = leading_data(energy);

  AnalysisReport out;
  out.method = std::move(descriptor);
  out.p = linear_order(r);
  out.k_star = lead.k_star;
  out.beta_star = lead.beta_star;
  out.gamma_star = lead.gamma_star;
  out.eigenvalues = verdict.gamma_star_eigenvalues;
  out.verdict = verdict.status;
  out.notes = verdict.notes;
  if (verdict.status == StabilityStatus::Undetermined && counterexample_found(r)) {
    out.notes.emplace_back(kCounterexampleNote);
  }
  return out;
}

AnalysisReport analyze(const ResolvedMethod& method) {
  auto out = analyze(method.descriptor, method.polynomial);
  out.p = method.order;
  if (method.approximate_input) out.notes.emplace_back(kApproximateNote);
  for (const auto& w : method.warnings) out.notes.push_back("tableau: " + w);
  return out;
}

int exit_code(StabilityStatus status) {
  switch (status) {
    case StabilityStatus::StronglyStable: return 0;
    case StabilityStatus::NotStronglyStable: return 1;
    case StabilityStatus::Undetermined: return 2;
  }
  return 3;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["p"] = report.p;
  j["k_star"] = report.k_star;
  j["beta_star"] = {{"exact", to_string(report.beta_star)}, {"float", to_double(report.beta_star)}};
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.gamma_star.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < report.gamma_star.cols(); ++k) row.push_back(to_string(report.gamma_star(i, k)));
    rows.push_back(std::move(row));
  }
  j["gamma_star"] = {{"exact", std::move(rows)}, {"eigenvalues", report.eigenvalues}};
  j["verdict"] = std::string(to_string(report.verdict));
  j["notes"] = report.notes;
  return j;
}

AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  AnalysisReport out;
  out.method = j.at("method").get<std::string>();
  out.p = j.at("p").get<int>();
  out.k_star = j.at("k_star").get<int>();
  out.beta_star = parse_rational(j.at("beta_star").at("exact").get<std::string>());
  const auto& rows = j.at("gamma_star").at("exact");
  const std::size_t n = rows.size();
  out.gamma_star = RationalMatrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("gamma_star is not square");
    for (std::size_t k = 0; k < n; ++k) out.gamma_star(i, k) = parse_rational(rows[i][k].get<std::string>());
  }
  out.eigenvalues = j.at("gamma_star").at("eigenvalues").get<std::vector<double>>();
  out.verdict = parse_status(j.at("verdict").get<std::string>());
  out.notes = j.at("notes").get<std::vector<std::string>>();
  return out;
}

std::string format_sci(double value) {
  if (value == 0.0) return "0.00000";
  if (!std::isfinite(value)) return std::to_string(value);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.5e", value);
  std::string s(buf);
  const auto e = s.find('e');
  const int exponent = std::stoi(s.substr(e + 1));
  // explicit '+' like the tables use for the positive eigenvalues
  const std::string mantissa = s.substr(0, e);
  return exponent == 0 ? mantissa : mantissa + "e" + std::to_string(exponent);
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "method        " << r.method << "\n";
  out << "linear order  " << r.p << "\n";
  out << "k*            " << r.k_star << "\n";
  out << "beta*         " << to_string(r.beta_star) << "  (" << format_sci(to_double(r.beta_star)) << ")\n";
  out << "Gamma*\n";
  for (std::size_t i = 0; i < r.gamma_star.rows(); ++i) {
    out << "   ";
    for (std::size_t k = 0; k < r.gamma_star.cols(); ++k) out << "  " << to_string(r.gamma_star(i, k));
    out << "\n";
  }
  out << "eigenvalues  ";
  for (double v : r.eigenvalues) out << " " << format_sci(v);
  out << "\n";
  out << "energy acc.   " << 2 * r.k_star - 1 << "\n";
  out << "verdict       " << to_string(r.verdict) << " (SS: " << r.ss() << ")\n";
  for (const auto& n : r.notes) out << "note          " << n << "\n";
  return out.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_header() { return "method,p,k_star,beta_exact,beta_float,eigenvalues,verdict,ss,notes"; }

std::string csv_row(const AnalysisReport& r) {
  std::string eig;
  for (double v : r.eigenvalues) eig += (eig.empty() ? "" : ";") + format_sci(v);
  std::string notes;
  for (const auto& n : r.notes) notes += (notes.empty() ? "" : ";") + n;
  std::ostringstream out;
  out << csv_escape(r.method) << ',' << r.p << ',' << r.k_star << ',' << to_string(r.beta_star) << ','
      << format_sci(to_double(r.beta_star)) << ',' << eig << ',' << to_string(r.verdict) << ',' << r.ss() << ','
      << csv_escape(notes);
  return out.str();
}

}  // namespace rkstab::cli
