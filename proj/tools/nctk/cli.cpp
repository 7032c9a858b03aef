// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "json.hpp"
#include "nctk/distance.hpp"
#include "nctk/standard_model.hpp"

namespace nctk::cli {

namespace {

using nlohmann::json;

// Input problems detected after argument parsing.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int precision = 12) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string fmt(Complex z) {
  std::ostringstream s;
  s << fmt(z.real()) << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << fmt(std::abs(z.imag())) << "i";
  return s.str();
}

json number_json(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

// Appends records to a CSV file, writing the header when the file is new
// or empty.
void append_csv(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream f(path, std::ios::app | std::ios::binary);
  if (!f) throw InputError("cannot open CSV file '" + path + "' for writing");
  if (fresh) f << csv_record(header) << "\r\n";
  for (const auto& r : rows) f << csv_record(r) << "\r\n";
}

struct Globals {
  bool json = false;
  std::string csv;
  std::uint64_t seed = 42;
  int restarts = 16;
  int max_iter = 5000;
  double tol = 1e-8;

  SolverOptions solver() const {
    SolverOptions o;
    o.seed = seed;
    o.restarts = restarts;
    o.max_iterations = max_iter;
    o.tolerance = tol;
    try {
      o.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("solver flags: ") + e.what());
    }
    return o;
  }
};

PureState parse_state(const FiniteAlgebra& alg, const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) throw InputError("state '" + arg + "': expected k:v1,v2,...");
  const std::string head = arg.substr(0, colon);
  std::size_t comp = 0;
  try {
    std::size_t used = 0;
    const unsigned long k = std::stoul(head, &used);
    if (used != head.size()) throw std::invalid_argument("trailing characters");
    comp = k;
  } catch (const std::exception&) {
    try {
      comp = alg.index_of(head);
    } catch (const std::exception&) {
      throw InputError("state '" + arg + "': unknown component '" + head + "'");
    }
  }
  if (comp >= alg.size()) throw InputError("state '" + arg + "': component index out of range");
  CVector v;
  std::stringstream rest(arg.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    try {
      v.push_back(parse_complex(item));
    } catch (const std::invalid_argument& e) {
      throw InputError("state '" + arg + "': " + e.what());
    }
  }
  if (v.size() != alg.component(comp).n) {
    throw InputError("state '" + arg + "': component '" + alg.component(comp).label + "' needs " +
                     std::to_string(alg.component(comp).n) + " entries");
  }
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw InputError("state '" + arg + "': zero or non-finite vector");
  for (auto& z : v) z /= n;
  return make_state(alg, comp, std::move(v));
}

std::vector<std::pair<Complex, Complex>> default_higgs_grid() {
  return {{{0.0, 0.0}, {0.0, 0.0}},  {{-0.5, 0.0}, {0.0, 0.3}}, {{0.2, 0.0}, {0.0, 0.0}},
          {{0.0, 0.0}, {0.5, 0.0}},  {{-0.3, 0.4}, {0.1, -0.2}}, {{1.0, 0.0}, {0.0, 1.0}},
          {{0.0, -0.7}, {0.0, 0.0}}, {{-0.9, 0.0}, {0.0, 0.0}},  {{0.25, 0.25}, {-0.5, 0.5}}};
}

json check_json(const AxiomCheck& c) {
  json j{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}, {"tolerance", c.tolerance}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (c.value) j["value"] = *c.value;
  if (!c.coefficients.empty()) {
    json nz = json::array();
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
      if (c.coefficients[i] != 0.0) nz.push_back({{"term", i}, {"coefficient", c.coefficients[i]}});
    }
    j["coefficients"] = std::move(nz);
  }
  return j;
}

void print_report(std::ostream& out, const AxiomReport& r) {
  out << std::left << std::setw(22) << "check" << std::setw(6) << "pass" << std::setw(14) << "residual"
      << "tolerance\n";
  for (const auto& c : r.checks) {
    out << std::left << std::setw(22) << c.name << std::setw(6) << (c.pass ? "yes" : "NO") << std::setw(14)
        << fmt(c.residual, 4) << fmt(c.tolerance, 4);
    if (c.value) out << "  (value " << fmt(*c.value) << ")";
    if (!c.pass && !c.witness.empty()) out << "  " << c.witness;
    out << "\n";
  }
}

void print_matrix(std::ostream& out, const std::vector<std::vector<long long>>& m) {
  for (const auto& row : m) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << std::setw(4) << row[j];
    out << "]\n";
  }
}

int cmd_check(const Globals& g, const std::string& file, std::ostream& out) {
  const auto d = doc::load_triple(file);
  const AxiomReport r = check_all(d.triple, d.projectors);
  std::optional<std::vector<std::vector<long long>>> inter;
  if (!d.projectors.empty() && d.triple.real_structure) inter = intersection_matrix(d.triple, d.projectors);
  if (g.json) {
    json j{{"file", file}, {"all_pass", r.all_pass()}, {"checks", json::array()}};
    for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
    if (inter) j["intersection_matrix"] = *inter;
    out << j.dump(2) << "\n";
  } else {
    out << file << ": " << d.triple.algebra.size() << " component(s), hilbert_dim " << d.triple.hilbert_dim()
        << ", " << (d.triple.is_even() ? "even" : "odd") << ", KR dimension " << d.triple.kr_dim << "\n";
    print_report(out, r);
    if (inter) {
      out << "intersection matrix:\n";
      print_matrix(out, *inter);
    }
    out << (r.all_pass() ? "all checks pass\n" : "some checks FAIL\n");
  }
  return r.all_pass() ? kSuccess : kDomainFailure;
}

int cmd_distance(const Globals& g, const std::string& file, const std::vector<std::string>& states, std::ostream& out) {
  if (states.size() != 2) throw InputError("distance needs exactly two --state options");
  const auto d = doc::load_triple(file);
  const PureState a = parse_state(d.triple.algebra, states[0]);
  const PureState b = parse_state(d.triple.algebra, states[1]);
  const DistanceResult r = spectral_distance(d.triple, a, b, g.solver());
  if (g.json) {
    json j{{"file", file},
           {"state1", states[0]},
           {"state2", states[1]},
           {"value", number_json(r.value)},
           {"achieved_constraint", r.achieved_constraint},
           {"iterations", r.iterations},
           {"restarts", r.restarts_used},
           {"converged", r.converged}};
    if (r.maximizer) j["maximizer"] = *r.maximizer;
    out << j.dump(2) << "\n";
  } else {
    out << "distance            " << fmt(r.value) << "\n";
    if (!r.is_infinite()) {
      out << "||[D, a*]||         " << fmt(r.achieved_constraint) << "\n"
          << "iterations          " << r.iterations << " over " << r.restarts_used << " restart(s)\n"
          << "converged           " << (r.converged ? "yes" : "no") << "\n";
    } else {
      out << "(the difference of the states does not vanish on the commutant of D)\n";
    }
  }
  if (!g.csv.empty()) {
    append_csv(g.csv, {"file", "state1", "state2", "value", "achieved_constraint", "iterations", "restarts", "converged"},
               {{file, states[0], states[1], fmt(r.value, 17), fmt(r.achieved_constraint, 17), std::to_string(r.iterations),
                 std::to_string(r.restarts_used), r.converged ? "true" : "false"}});
  }
  return kSuccess;
}

int cmd_m2_sweep(const Globals& g, double d1, double d2, int grid, const std::string& out_path, std::ostream& out) {
  if (d1 == d2) throw InputError("m2-sweep needs d1 != d2");
  if (grid < 1) throw InputError("m2-sweep needs a positive grid size");
  FiniteAlgebra alg({make_component(ComponentKind::Mn, 2)});
  Representation rep(alg, 2, {alg.component(0).sa_basis});
  const FiniteSpectralTriple t = make_triple(alg, rep, ComplexMatrix{{d1, 0.0}, {0.0, d2}}, std::nullopt, std::nullopt, 1);
  const SolverOptions opts = g.solver();
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<std::string>> rows;
  double max_abs = 0.0, max_rel = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double t1 = 2.0 * std::numbers::pi * i / grid;
      const double t2 = 2.0 * std::numbers::pi * j / grid;
      const CVector xi{s, s * std::polar(1.0, t1)};
      const CVector zeta{s, s * std::polar(1.0, t2)};
      const double cf = closed_form_m2(d1, d2, xi, zeta);
      const double sv = spectral_distance(t, make_state(alg, 0, xi), make_state(alg, 0, zeta), opts).value;
      const double err = std::abs(cf - sv);
      max_abs = std::max(max_abs, err);
      if (cf > 0.0) max_rel = std::max(max_rel, err / cf);
      rows.push_back({fmt(t1, 17), fmt(t2, 17), fmt(cf, 17), fmt(sv, 17), fmt(err, 17)});
    }
  }
  const std::vector<std::string> header{"theta1", "theta2", "closed_form", "solver", "abs_err"};
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot open '" + out_path + "' for writing");
    f << csv_record(header) << "\r\n";
    for (const auto& r : rows) f << csv_record(r) << "\r\n";
  }
  if (g.json) {
    out << json{{"pairs", rows.size()}, {"max_abs_err", max_abs}, {"max_rel_err", max_rel}, {"out", out_path}}.dump(2)
        << "\n";
  } else {
    if (out_path.empty()) {
      out << csv_record(header) << "\n";
      for (const auto& r : rows) out << csv_record(r) << "\n";
    }
    out << "pairs " << rows.size() << ", max abs_err " << fmt(max_abs) << ", max rel_err " << fmt(max_rel) << "\n";
  }
  return kSuccess;
}

int cmd_sm(const Globals& g, const std::string& masses, const std::vector<std::string>& higgs, bool axioms,
           std::ostream& out) {
  const SMParams p = masses.empty() ? SMParams{} : doc::load_masses(masses);
  const StandardModelGeometry sm = build_internal_triple(p);
  std::vector<std::pair<Complex, Complex>> grid;
  for (const auto& h : higgs) {
    const auto comma = h.find(',');
    if (comma == std::string::npos) throw InputError("--higgs '" + h + "': expected h1,h2");
    try {
      grid.emplace_back(parse_complex(h.substr(0, comma)), parse_complex(h.substr(comma + 1)));
    } catch (const std::invalid_argument& e) {
      throw InputError("--higgs '" + h + "': " + e.what());
    }
  }
  if (grid.empty()) grid = default_higgs_grid();

  const SolverOptions opts = g.solver();
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  if (!g.json) {
    out << "standard-model internal triple: hilbert_dim " << sm.triple.hilbert_dim() << ", m_t = " << fmt(p.top_mass())
        << "\n";
  }
  std::optional<AxiomReport> report;
  std::vector<std::vector<long long>> inter;
  if (axioms) {
    report = check_all(sm.triple, canonical_projectors(sm.triple));
    inter = intersection_matrix(sm.triple, canonical_projectors(sm.triple));
    if (!g.json) {
      print_report(out, *report);
      out << "intersection matrix (C, H, M3):\n";
      print_matrix(out, inter);
    }
  }
  if (!g.json) {
    out << std::left << std::setw(24) << "h1" << std::setw(24) << "h2" << std::setw(16) << "g_tt" << std::setw(16)
        << "1/sqrt(g_tt)" << std::setw(16) << "distance" << "rel_dev\n";
  }
  for (const auto& [h1, h2] : grid) {
    const HiggsDoublet h{h1, h2};
    const double gtt = metric_coefficient(p, h);
    const double pred = 1.0 / std::sqrt(gtt);
    const DistanceResult r = sheet_distance(higgs_fluctuation(sm, h), opts);
    const double dev = std::isfinite(pred) ? std::abs(r.value - pred) / pred : std::abs(r.value);
    if (g.json) {
      rows.push_back({{"h1", fmt(h1)}, {"h2", fmt(h2)}, {"g_tt", number_json(gtt)}, {"predicted", number_json(pred)},
                      {"distance", number_json(r.value)}, {"rel_dev", dev}});
    } else {
      out << std::left << std::setw(24) << fmt(h1) << std::setw(24) << fmt(h2) << std::setw(16) << fmt(gtt, 8)
          << std::setw(16) << fmt(pred, 8) << std::setw(16) << fmt(r.value, 8) << fmt(dev, 3) << "\n";
    }
    csv.push_back({fmt(h1), fmt(h2), fmt(gtt, 17), fmt(pred, 17), fmt(r.value, 17), fmt(dev, 17)});
  }
  if (g.json) {
    json j{{"hilbert_dim", sm.triple.hilbert_dim()}, {"top_mass", p.top_mass()}, {"sheets", rows}};
    if (report) {
      j["all_pass"] = report->all_pass();
      j["checks"] = json::array();
      for (const auto& c : report->checks) j["checks"].push_back(check_json(c));
      j["intersection_matrix"] = inter;
    }
    out << j.dump(2) << "\n";
  }
  if (!g.csv.empty()) append_csv(g.csv, {"h1", "h2", "g_tt", "predicted", "distance", "rel_dev"}, csv);
  return report && !report->all_pass() ? kDomainFailure : kSuccess;
}

json neutrino_json(const NeutrinoReport& r) {
  json obs = json::array();
  for (const auto& o : r.obstructions) obs.push_back({{"neutrino", o.neutrino + 1}, {"min_residual", o.min_residual}});
  return {{"alpha", r.extension.alpha},
          {"eps", r.extension.eps},
          {"symbolic_matrix", r.symbolic},
          {"numeric_matrix", r.numeric},
          {"determinant", r.determinant},
          {"formula_determinant", r.formula_determinant},
          {"poincare", r.poincare},
          {"majorana_obstructions", obs},
          {"admissible", r.admissible},
          {"verdict", r.verdict}};
}

void print_neutrino(std::ostream& out, const NeutrinoReport& r) {
  out << "alpha = " << r.extension.alpha << ", eps = (";
  for (std::size_t i = 0; i < r.extension.eps.size(); ++i) out << (i ? "," : "") << r.extension.eps[i];
  out << ")\nintersection matrix from the extended representation (C, H, M3):\n";
  print_matrix(out, r.numeric);
  out << "det = " << r.determinant << " (36(6 - sum eps) = " << r.formula_determinant << ")\n";
  for (const auto& o : r.obstructions) out << o.witness << "\n";
  out << r.verdict << "\n";
}

int cmd_neutrinos(const Globals& g, int alpha, const std::vector<int>& eps, bool scan, std::ostream& out) {
  const StandardModelGeometry sm = build_internal_triple();
  if (scan) {
    json all = json::array();
    for (const auto& x : all_neutrino_extensions()) {
      const NeutrinoReport r = neutrino_extension_analysis(x, sm);
      if (g.json) {
        all.push_back(neutrino_json(r));
      } else {
        print_neutrino(out, r);
        out << "\n";
      }
    }
    if (g.json) out << all.dump(2) << "\n";
    return kSuccess;
  }
  NeutrinoExtension x{alpha, eps};
  try {
    x.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const NeutrinoReport r = neutrino_extension_analysis(x, sm);
  if (g.json) {
    out << neutrino_json(r).dump(2) << "\n";
  } else {
    print_neutrino(out, r);
  }
  return r.admissible ? kSuccess : kDomainFailure;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  const auto malformed = [&] { return std::invalid_argument("malformed complex literal '" + std::string(text) + "'"); };
  // sign_only is the value of a bare sign, or 0 where one is not allowed.
  const auto to_double = [&](const std::string& part, double sign_only) -> double {
    if (part.empty() || part == "+" || part == "-") {
      if (sign_only == 0.0) throw malformed();
      return part == "-" ? -sign_only : sign_only;
    }
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end != part.c_str() + part.size() || !std::isfinite(v)) throw malformed();
    return v;
  };
  const char last = s.back();
  if (last != 'i' && last != 'j') return {to_double(s, 0.0), 0.0};
  s.pop_back();
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, to_double(s, 1.0)};
  const std::string re = s.substr(0, split);
  return {to_double(re, 0.0), to_double(s.substr(split), 1.0)};
}

std::string csv_record(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out += f;
      continue;
    }
    out.push_back('"');
    for (char c : f) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    out.push_back('"');
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite noncommutative geometry toolkit", "nctk"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--csv", g.csv, "Append results to this CSV file");
  app.add_option("--seed", g.seed, "Solver seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Solver restarts")->capture_default_str();
  app.add_option("--max-iter", g.max_iter, "Subgradient iterations per restart")->capture_default_str();
  app.add_option("--tol", g.tol, "Solver tolerance")->capture_default_str();

  std::string file;
  auto* check = app.add_subcommand("check", "Check the axioms of a triple document");
  check->add_option("file", file, "Triple JSON document")->required();

  std::string dfile;
  std::vector<std::string> states;
  auto* dist = app.add_subcommand("distance", "Spectral distance between two pure states");
  dist->add_option("file", dfile, "Triple JSON document")->required();
  dist->add_option("--state", states, "State k:v1,v2,... (component index or label, complex entries)")->required();

  double d1 = 0.0, d2 = 1.0;
  int grid = 8;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("m2-sweep", "Equatorial M2(C) distances against the closed form");
  sweep->add_option("--d1", d1, "First eigenvalue of D")->capture_default_str();
  sweep->add_option("--d2", d2, "Second eigenvalue of D")->capture_default_str();
  sweep->add_option("--grid", grid, "Angles per axis")->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV output path (stdout if absent)");

  std::string masses;
  std::vector<std::string> higgs;
  bool axioms = false;
  auto* sm = app.add_subcommand("sm", "Standard-model internal triple and Higgs sheet distances");
  sm->add_option("--masses", masses, "Mass parameter JSON (defaults built in)");
  sm->add_option("--higgs", higgs, "Higgs doublet h1,h2 (repeatable)");
  sm->add_flag("--axioms", axioms, "Also run every axiom check");

  int alpha = 0;
  std::vector<int> eps;
  bool scan = false;
  auto* nu = app.add_subcommand("neutrinos", "Poincare duality with sterile neutrinos");
  nu->add_option("--alpha", alpha, "Number of new neutrinos (0-3)");
  nu->add_option("--eps", eps, "1 (Majorana type) or 2 (Dirac type) per neutrino")->delimiter(',');
  nu->add_flag("--scan", scan, "Analyse all 15 configurations");

  std::vector<const char*> argv{"nctk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*check) return cmd_check(g, file, out);
    if (*dist) return cmd_distance(g, dfile, states, out);
    if (*sweep) return cmd_m2_sweep(g, d1, d2, grid, sweep_out, out);
    if (*sm) return cmd_sm(g, masses, higgs, axioms, out);
    if (*nu) return cmd_neutrinos(g, alpha, eps, scan, out);
  } catch (const doc::DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kInputError;
}

}  // namespace nctk::cli
