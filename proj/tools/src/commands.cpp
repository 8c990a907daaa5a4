#include "rkstab/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rkstab/cli/fixtures.hpp"
#include "rkstab/cli/method.hpp"
#include "rkstab/cli/report.hpp"
#include "rkstab/energy.hpp"
#include "rkstab/verify.hpp"

namespace rkstab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  bool quiet = false;
};

struct MethodOptions {
  std::string preset, alpha, tableau, which = "main";
  int steps = 1;
  CLI::Option* preset_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* tableau_opt = nullptr;

  void attach(CLI::App* app) {
    preset_opt = app->add_option("--preset", preset, "named method, e.g. taylor(4), ssprk(5,4), pair3(2)");
    alpha_opt = app->add_option("--alpha", alpha, "stability polynomial coefficients \"1,1,1/2,...\"");
    tableau_opt = app->add_option("--tableau", tableau, "Butcher tableau file (JSON)");
    app->add_option("--which", which, "weights of an embedded pair")->check(CLI::IsMember({"main", "embedded"}));
    app->add_option("--steps", steps, "compose m steps")->check(CLI::PositiveNumber);
  }

  MethodSpec spec(const char* fallback_preset = nullptr) const {
    MethodSpec s;
    if (*preset_opt) s.preset = preset;
    if (*alpha_opt) s.alpha = alpha;
    if (*tableau_opt) s.tableau = tableau;
    if (fallback_preset && !s.preset && !s.alpha && !s.tableau) s.preset = fallback_preset;
    s.which = which == "embedded" ? Weights::Embedded : Weights::Main;
    s.steps = steps;
    return s;
  }
};

std::string join(const std::vector<double>& values, const char* sep) {
  std::string out;
  for (double v : values) out += (out.empty() ? "" : sep) + format_sci(v);
  return out;
}

Json tau_table(const SweepReport& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.tau_grid.size(); ++i) rows.push_back({{"tau", s.tau_grid[i]}, {"norm", s.h_norms[i]}});
  return rows;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Globals& g, const MethodOptions& m, std::ostream& out) {
  const auto report = analyze(resolve_method(m.spec()));
  if (g.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (g.format == "csv") {
    out << csv_header() << "\n" << csv_row(report) << "\n";
  } else if (g.quiet) {
    out << to_string(report.verdict) << " (SS: " << report.ss() << ")\n";
  } else {
    out << render_text(report);
  }
  return exit_code(report.verdict);
}

// ----------------------------------------------------------------- tables

int cmd_tables(const Globals& g, const std::string& selector, const std::string& orders, bool check,
               const std::vector<std::string>& pair_files, std::ostream& out) {
  TableOptions options;
  if (!orders.empty()) {
    if (selector != "linear") throw std::invalid_argument("--orders applies to the linear table only");
    options.orders = parse_order_range(orders);
  }
  for (const auto& item : pair_files) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || !is_external_pair(item.substr(0, eq))) {
      throw std::invalid_argument("--pair-tableau expects NAME=PATH with NAME one of 5(4) .. 9(8)");
    }
    options.pair_tableaux[item.substr(0, eq)] = item.substr(eq + 1);
  }

  const auto rows = run_table(selector, options);
  bool failed = false;
  for (const auto& row : rows) failed = failed || !row.mismatches.empty();

  auto status_of = [&](const RowResult& row) -> std::string {
    if (!row.report) return "tableau unavailable";
    if (!check) return "";
    return row.mismatches.empty() ? "ok" : "MISMATCH";
  };

  if (g.format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j{{"label", row.fixture.label}, {"available", row.report.has_value()}};
      if (row.report) j["report"] = to_json(*row.report);
      j["expected_ss"] = row.fixture.ss;
      if (check) j["mismatches"] = row.mismatches;
      j["findings"] = row.findings;
      if (!row.fixture.remark.empty()) j["remark"] = row.fixture.remark;
      arr.push_back(std::move(j));
    }
    out << Json{{"table", selector}, {"checked", check}, {"pass", !failed}, {"rows", std::move(arr)}}.dump(2) << "\n";
  } else if (g.format == "csv") {
    out << "label,k_star,beta_exact,beta_float,eigenvalues,ss,status\n";
    for (const auto& row : rows) {
      out << csv_escape(row.fixture.label) << ',';
      if (row.report) {
        const auto& r = *row.report;
        out << r.k_star << ',' << to_string(r.beta_star) << ',' << format_sci(to_double(r.beta_star)) << ','
            << join(r.eigenvalues, ";") << ',' << r.ss() << ',';
      } else {
        out << ",,,,,";
      }
      out << status_of(row) << "\n";
    }
  } else {
    for (const auto& row : rows) {
      if (!row.report) {
        if (!g.quiet) out << std::left << std::setw(10) << row.fixture.label << "  tableau unavailable\n";
        continue;
      }
      const auto& r = *row.report;
      if (!g.quiet) {
        out << std::left << std::setw(10) << row.fixture.label << "  k*=" << r.k_star << "  beta*=" << std::setw(16)
            << to_string(r.beta_star) << "  (" << format_sci(to_double(r.beta_star)) << ")  SS=" << std::setw(3)
            << r.ss() << "  " << status_of(row) << "\n";
        out << "            eigenvalues: " << join(r.eigenvalues, " ") << "\n";
        for (const auto& n : r.notes) out << "            note: " << n << "\n";
        if (!row.fixture.remark.empty()) out << "            remark: " << row.fixture.remark << "\n";
      }
      for (const auto& f : row.findings) out << "            finding: " << f << "\n";
      for (const auto& bad : row.mismatches) {
        if (check) out << row.fixture.label << ": " << bad << "\n";
      }
    }
    if (check) out << "tables " << selector << ": " << (failed ? "FAIL" : "pass") << "\n";
  }
  return check && failed ? 1 : 0;
}

// ----------------------------------------------------------------- verify

struct SweepOptions {
  double tau_min = 1e-4, tau_max = 1e-1;
  int points = 40;
  void attach(CLI::App* app) {
    app->add_option("--tau-min", tau_min)->check(CLI::PositiveNumber);
    app->add_option("--tau-max", tau_max)->check(CLI::PositiveNumber);
    app->add_option("--points", points)->check(CLI::Range(2, 100000));
  }
};

SemiNegativeSystem build_system(const std::string& kind, std::optional<int> dim, std::uint64_t seed,
                                double dissipation) {
  if (kind == "random") return make_random_semi_negative(dim.value_or(8), seed, dissipation);
  if (kind == "upwind") return make_upwind_advection(dim.value_or(32));
  if (dim && *dim != 3) throw std::invalid_argument("the rk4-counterexample system is 3-dimensional");
  return counterexample_rk4();
}

int cmd_verify(const Globals& g, const MethodOptions& m, const std::string& kind, std::optional<int> dim,
               std::uint64_t seed, double dissipation, const SweepOptions& sw, std::ostream& out) {
  if (sw.tau_min >= sw.tau_max) throw std::invalid_argument("--tau-min must be below --tau-max");
  const auto method = resolve_method(m.spec());
  const auto report = analyze(method);
  const auto sys = build_system(kind, dim, seed, dissipation);
  const auto sweep = stability_sweep(method.polynomial, sys, sw.tau_min, sw.tau_max, sw.points);
  const bool expands = sweep.max_norm() > 1.0 + 1e-9;

  std::string claim = "none (the verdict makes no claim about this system)";
  bool consistent = true;
  if (report.verdict == StabilityStatus::StronglyStable) {
    claim = "stable for small tau";
    consistent = sweep.max_stable_tau.has_value();
  } else if (report.ss() == "no*" && kind == "rk4-counterexample") {
    claim = "norm exceeds 1";
    consistent = expands;
  }

  if (g.format == "json") {
    Json j{{"method", method.descriptor},
           {"system", sys.label},
           {"dimension", sys.dimension()},
           {"verdict", to_string(report.verdict)},
           {"ss", report.ss()},
           {"max_norm", sweep.max_norm()},
           {"max_stable_tau", optional_number(sweep.max_stable_tau)},
           {"expands", expands},
           {"claim", claim},
           {"consistent", consistent},
           {"sweep", tau_table(sweep)}};
    out << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    out << "tau,norm\n";
    for (std::size_t i = 0; i < sweep.tau_grid.size(); ++i) {
      out << std::setprecision(10) << sweep.tau_grid[i] << ',' << std::setprecision(17) << sweep.h_norms[i] << "\n";
    }
  } else {
    if (!g.quiet) {
      out << "method          " << method.descriptor << "\n";
      out << "system          " << sys.label << " (n=" << sys.dimension() << ")\n";
      out << "verdict         " << to_string(report.verdict) << " (SS: " << report.ss() << ")\n";
      out << "tau             ||R(tau L)||_H - 1\n";
      for (std::size_t i = 0; i < sweep.tau_grid.size(); ++i) {
        out << "  " << std::left << std::setw(14) << format_sci(sweep.tau_grid[i]) << format_sci(sweep.h_norms[i] - 1)
            << "\n";
      }
    }
    out << "max norm        " << std::setprecision(15) << sweep.max_norm() << (expands ? "  (> 1)" : "") << "\n";
    out << "max stable tau  " << (sweep.max_stable_tau ? format_sci(*sweep.max_stable_tau) : "none") << "\n";
    out << "expected        " << claim << "\n";
    out << "consistent      " << (consistent ? "yes" : "no") << "\n";
  }
  return consistent ? 0 : 1;
}

// ------------------------------------------------------------------ decay

std::vector<double> parse_taus(const std::string& text) {
  if (text.empty()) return default_decay_taus();
  std::vector<double> taus;
  std::stringstream in(text);
  std::string item;
  // "0.2,0.1,0.05,..." or "geom:start:ratio:count"
  if (text.starts_with("geom:")) {
    std::vector<double> parts;
    std::stringstream spec(text.substr(5));
    while (std::getline(spec, item, ':')) parts.push_back(std::stod(item));
    if (parts.size() != 3 || parts[2] < 1) throw std::invalid_argument("--taus geom:START:RATIO:COUNT");
    for (int i = 0; i < int(parts[2]); ++i) taus.push_back(parts[0] * std::pow(parts[1], i));
    return taus;
  }
  while (std::getline(in, item, ',')) taus.push_back(std::stod(item));
  return taus;
}

int cmd_decay(const Globals& g, const MethodOptions& m, std::uint64_t seed, const std::string& taus_text,
              double dissipation, std::ostream& out) {
  if (dissipation != 0.0) throw std::invalid_argument("energy decay is measured on conserving systems only");
  const auto method = resolve_method(m.spec());
  const auto report = analyze(method);
  const auto fit = energy_decay_order(method.polynomial, seed, parse_taus(taus_text));
  const int expected = energy_accuracy(leading_data(expand_energy(method.polynomial)));
  const bool pass = std::abs(fit.slope - expected) <= 0.3;
  const std::string sign = fit.deficit_sign > 0 ? "positive deficit (energy lost)" : "negative deficit (energy grows)";

  if (g.format == "json") {
    Json j{{"method", method.descriptor}, {"seed", seed},          {"taus", fit.taus},
           {"deficits", fit.deficits},    {"slope", fit.slope},    {"expected", expected},
           {"deficit_sign", fit.deficit_sign}, {"verdict", to_string(report.verdict)}, {"pass", pass}};
    out << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    out << "tau,deficit\n";
    for (std::size_t i = 0; i < fit.taus.size(); ++i) {
      out << std::setprecision(10) << fit.taus[i] << ',' << std::setprecision(17) << fit.deficits[i] << "\n";
    }
  } else {
    if (!g.quiet) {
      out << "method          " << method.descriptor << "\n";
      out << "tau             |u0|^2 - |uN|^2\n";
      for (std::size_t i = 0; i < fit.taus.size(); ++i) {
        out << "  " << std::left << std::setw(14) << format_sci(fit.taus[i]) << format_sci(fit.deficits[i]) << "\n";
      }
    }
    out << "slope           " << std::fixed << std::setprecision(3) << fit.slope << std::defaultfloat << "\n";
    out << "expected        " << expected << " (2k*-1)\n";
    out << "sign            " << sign << "\n";
    out << "result          " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

// --------------------------------------------------------- counterexample

int cmd_counterexample(const Globals& g, const MethodOptions& m, const SweepOptions& sw, std::ostream& out) {
  auto single = m.spec("taylor(4)");
  const int steps = single.steps > 1 ? single.steps : 2;
  single.steps = 1;
  auto multi = single;
  multi.steps = steps;
  const auto one = resolve_method(single);
  const auto many = resolve_method(multi);
  const auto sys = counterexample_rk4();
  const auto s1 = stability_sweep(one.polynomial, sys, sw.tau_min, sw.tau_max, sw.points);
  const auto sm = stability_sweep(many.polynomial, sys, sw.tau_min, sw.tau_max, sw.points);
  const bool expands = s1.max_norm() > 1.0 + 1e-9;
  const bool reproduced = expands && sm.max_stable_tau.has_value();

  if (g.format == "json") {
    Json j{{"system", sys.label},
           {"single", {{"method", one.descriptor}, {"max_norm", s1.max_norm()}, {"expands", expands},
                       {"sweep", tau_table(s1)}}},
           {"multi", {{"method", many.descriptor}, {"max_stable_tau", optional_number(sm.max_stable_tau)},
                      {"sweep", tau_table(sm)}}},
           {"reproduced", reproduced}};
    out << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    out << "tau,single_norm,multi_norm\n";
    for (std::size_t i = 0; i < s1.tau_grid.size(); ++i) {
      out << std::setprecision(10) << s1.tau_grid[i] << ',' << std::setprecision(17) << s1.h_norms[i] << ','
          << sm.h_norms[i] << "\n";
    }
  } else {
    if (!g.quiet) {
      out << "H = I, L =\n";
      for (Eigen::Index i = 0; i < sys.generator.rows(); ++i) {
        out << "  ";
        for (Eigen::Index k = 0; k < sys.generator.cols(); ++k) out << std::setw(4) << sys.generator(i, k);
        out << "\n";
      }
      out << "tau             " << std::left << std::setw(18) << one.descriptor << many.descriptor << "   (norm - 1)\n";
      for (std::size_t i = 0; i < s1.tau_grid.size(); ++i) {
        out << "  " << std::setw(14) << format_sci(s1.tau_grid[i]) << std::setw(18) << format_sci(s1.h_norms[i] - 1)
            << format_sci(sm.h_norms[i] - 1) << "\n";
      }
    }
    out << one.descriptor << ": max norm " << std::setprecision(15) << s1.max_norm()
        << (expands ? " > 1, not strongly stable" : ", no expansion on this grid") << "\n";
    out << many.descriptor << ": max stable tau "
        << (sm.max_stable_tau ? format_sci(*sm.max_stable_tau) : std::string("none")) << "\n";
  }
  return reproduced ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong stability analysis of explicit Runge-Kutta methods for linear semi-negative systems", "rkstab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--quiet", g.quiet, "only the summary lines (text format)");

  std::function<int()> action;

  auto* analyze_cmd = app.add_subcommand("analyze", "energy analysis and strong-stability verdict of one method");
  MethodOptions analyze_method;
  analyze_method.attach(analyze_cmd);
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(g, analyze_method, out); }; });

  auto* tables_cmd = app.add_subcommand("tables", "reproduce the reference stability tables");
  std::string selector, orders;
  bool check = false;
  std::vector<std::string> pair_files;
  tables_cmd->add_option("table", selector, "linear | rk4-multistep | ssprk | pairs")->required();
  tables_cmd->add_option("--orders", orders, "order range for the linear table, e.g. 1..12");
  tables_cmd->add_flag("--check", check, "compare against the stored table values");
  tables_cmd->add_option("--pair-tableau", pair_files, "NAME=PATH tableau for 5(4) .. 9(8)");
  tables_cmd->callback([&] { action = [&] { return cmd_tables(g, selector, orders, check, pair_files, out); }; });

  auto* verify_cmd = app.add_subcommand("verify", "floating-point norm sweep on a semi-negative system");
  MethodOptions verify_method;
  verify_method.attach(verify_cmd);
  std::string system = "random";
  std::optional<int> dim;
  std::uint64_t seed = 1;
  double dissipation = 0.5;
  SweepOptions sweep;
  verify_cmd->add_option("--system", system)->check(CLI::IsMember({"random", "upwind", "rk4-counterexample"}));
  verify_cmd->add_option("--dim", dim, "system dimension (random: 8, upwind: 32)");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--dissipation", dissipation, "random system only")->check(CLI::NonNegativeNumber);
  sweep.attach(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] { return cmd_verify(g, verify_method, system, dim, seed, dissipation, sweep, out); };
  });

  auto* decay_cmd = app.add_subcommand("decay", "measure the energy-deficit order on a conserving system");
  MethodOptions decay_method;
  decay_method.attach(decay_cmd);
  std::uint64_t decay_seed = 1;
  std::string taus;
  double decay_dissipation = 0.0;
  decay_cmd->add_option("--seed", decay_seed);
  decay_cmd->add_option("--taus", taus, "comma list or geom:START:RATIO:COUNT (default 0.2 halved 5 times)");
  decay_cmd->add_option("--dissipation", decay_dissipation, "must be 0");
  decay_cmd->callback([&] {
    action = [&] { return cmd_decay(g, decay_method, decay_seed, taus, decay_dissipation, out); };
  });

  auto* cx_cmd = app.add_subcommand("counterexample", "single step expands, m steps contract (default taylor(4), m=2)");
  MethodOptions cx_method;
  cx_method.attach(cx_cmd);
  SweepOptions cx_sweep;
  cx_sweep.attach(cx_cmd);
  cx_cmd->callback([&] { action = [&] { return cmd_counterexample(g, cx_method, cx_sweep, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace rkstab::cli
