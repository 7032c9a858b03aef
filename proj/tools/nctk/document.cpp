// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "document.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace nctk::doc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& path, const std::string& what) {
  throw DocumentError(source + ": " + (path.empty() ? "/" : path) + ": " + what);
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw DocumentError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error: " + msg);
  }
}

struct Reader {
  std::string source;

  const json& at(const json& j, const std::string& path, const char* key) const {
    if (!j.is_object()) fail(source, path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(source, path, std::string("missing key \"") + key + "\"");
    return *it;
  }

  long long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(source, path, "expected an integer");
    return j.get<long long>();
  }

  double number(const json& j, const std::string& path) const {
    if (!j.is_number()) fail(source, path, "expected a number");
    return j.get<double>();
  }

  Complex complex(const json& j, const std::string& path) const {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
      return {j[0].get<double>(), j[1].get<double>()};
    }
    fail(source, path, "expected a number or an [re, im] pair");
  }

  ComplexMatrix matrix(const json& j, const std::string& path) const {
    if (!j.is_array() || j.empty()) fail(source, path, "expected a non-empty list of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string rp = path + "/" + std::to_string(i);
      if (!j[i].is_array()) fail(source, rp, "expected a row (list of entries)");
      if (i == 0) cols = j[i].size();
      if (j[i].size() != cols || cols == 0) fail(source, rp, "row length differs from the first row");
      for (std::size_t c = 0; c < cols; ++c) entries.push_back(complex(j[i][c], rp + "/" + std::to_string(c)));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
  }

  ComplexMatrix square(const json& j, const std::string& path, std::size_t n) const {
    ComplexMatrix m = matrix(j, path);
    if (m.rows() != n || m.cols() != n) {
      fail(source, path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    return m;
  }
};

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

// Runs a library constructor and converts its exceptions into located
// document errors.
template <typename F>
auto guarded(const std::string& source, const std::string& path, F&& f) {
  try {
    return f();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    fail(source, path, e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TripleDocument parse_triple(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  const Reader r{source};
  if (!j.is_object()) fail(source, "", "expected a JSON object");

  const json& alg = r.at(j, "", "algebra");
  if (!alg.is_array() || alg.empty()) fail(source, "/algebra", "expected a non-empty list of components");
  std::vector<AlgebraComponent> comps;
  for (std::size_t k = 0; k < alg.size(); ++k) {
    const std::string p = "/algebra/" + std::to_string(k);
    const json& kind = r.at(alg[k], p, "kind");
    if (!kind.is_string()) fail(source, p + "/kind", "expected \"C\", \"H\" or \"Mn\"");
    std::string label;
    if (const auto it = alg[k].find("label"); it != alg[k].end()) {
      if (!it->is_string()) fail(source, p + "/label", "expected a string");
      label = it->get<std::string>();
    }
    const ComponentKind ck = guarded(source, p + "/kind", [&] { return parse_component_kind(kind.get<std::string>()); });
    long long n = ck == ComponentKind::C ? 1 : ck == ComponentKind::H ? 2 : 0;
    if (const auto it = alg[k].find("n"); it != alg[k].end()) n = r.integer(*it, p + "/n");
    if (n <= 0) fail(source, p + "/n", "expected a positive integer");
    comps.push_back(guarded(source, p, [&] { return make_component(ck, static_cast<std::size_t>(n), label); }));
  }
  FiniteAlgebra algebra = guarded(source, "/algebra", [&] { return FiniteAlgebra(std::move(comps)); });

  const long long hd = r.integer(r.at(j, "", "hilbert_dim"), "/hilbert_dim");
  if (hd <= 0) fail(source, "/hilbert_dim", "expected a positive integer");
  const auto n = static_cast<std::size_t>(hd);

  const json& rj = r.at(j, "", "representation");
  if (!rj.is_array() || rj.size() != algebra.size()) {
    fail(source, "/representation", "expected one list of images per algebra component (" + std::to_string(algebra.size()) + ")");
  }
  std::vector<std::vector<ComplexMatrix>> images(algebra.size());
  for (std::size_t k = 0; k < rj.size(); ++k) {
    const std::string p = "/representation/" + std::to_string(k);
    if (!rj[k].is_array()) fail(source, p, "expected a list of matrices");
    for (std::size_t i = 0; i < rj[k].size(); ++i) images[k].push_back(r.square(rj[k][i], p + "/" + std::to_string(i), n));
  }
  Representation rep = guarded(source, "/representation", [&] { return Representation(algebra, n, std::move(images)); });

  ComplexMatrix dirac = r.square(r.at(j, "", "dirac"), "/dirac", n);

  std::optional<ComplexMatrix> grading;
  const json& gj = r.at(j, "", "grading");
  if (gj.is_string()) {
    if (gj.get<std::string>() != "odd") fail(source, "/grading", "expected a matrix or \"odd\"");
  } else {
    grading = r.square(gj, "/grading", n);
  }

  std::optional<RealStructure> real;
  if (const auto it = j.find("real_structure"); it != j.end() && !it->is_null()) {
    real = RealStructure{r.square(r.at(*it, "/real_structure", "unitary"), "/real_structure/unitary", n)};
  }
  const long long kr = r.integer(r.at(j, "", "kr_dim"), "/kr_dim");

  TripleDocument out{guarded(source, "", [&] {
                       return make_triple(std::move(algebra), std::move(rep), std::move(dirac), std::move(grading),
                                          std::move(real), static_cast<int>(kr));
                     }),
                     {}};

  if (const auto it = j.find("projectors"); it != j.end()) {
    if (!it->is_array()) fail(source, "/projectors", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "/projectors/" + std::to_string(i);
      const json& cj = r.at((*it)[i], p, "component");
      std::size_t comp = 0;
      if (cj.is_string()) {
        comp = guarded(source, p + "/component", [&] { return out.triple.algebra.index_of(cj.get<std::string>()); });
      } else {
        const long long c = r.integer(cj, p + "/component");
        if (c < 0 || static_cast<std::size_t>(c) >= out.triple.algebra.size()) fail(source, p + "/component", "no such component");
        comp = static_cast<std::size_t>(c);
      }
      const std::size_t cn = out.triple.algebra.component(comp).n;
      out.projectors.push_back({comp, r.square(r.at((*it)[i], p, "matrix"), p + "/matrix", cn)});
    }
  }
  return out;
}

TripleDocument load_triple(const std::filesystem::path& path) { return parse_triple(read_file(path), path.string()); }

std::string serialize_triple(const TripleDocument& d, int indent) {
  const auto& t = d.triple;
  json j;
  json alg = json::array();
  for (const auto& c : t.algebra.components()) {
    alg.push_back({{"label", c.label}, {"kind", to_string(c.kind)}, {"n", c.n}});
  }
  j["algebra"] = std::move(alg);
  j["hilbert_dim"] = t.hilbert_dim();
  json rep = json::array();
  for (const auto& comp : t.rep.images()) {
    json list = json::array();
    for (const auto& m : comp) list.push_back(matrix_json(m));
    rep.push_back(std::move(list));
  }
  j["representation"] = std::move(rep);
  j["dirac"] = matrix_json(t.dirac);
  j["grading"] = t.grading ? matrix_json(*t.grading) : json("odd");
  if (t.real_structure) j["real_structure"] = {{"unitary", matrix_json(t.real_structure->unitary)}};
  j["kr_dim"] = t.kr_dim;
  if (!d.projectors.empty()) {
    json ps = json::array();
    for (const auto& p : d.projectors) {
      ps.push_back({{"component", t.algebra.component(p.component).label}, {"matrix", matrix_json(p.matrix)}});
    }
    j["projectors"] = std::move(ps);
  }
  return j.dump(indent) + "\n";
}

SMParams parse_masses(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  const Reader r{source};
  if (!j.is_object()) fail(source, "", "expected a JSON object");
  SMParams p;
  if (const auto it = j.find("generations"); it != j.end()) {
    const long long g = r.integer(*it, "/generations");
    if (g <= 0) fail(source, "/generations", "expected a positive integer");
    p.generations = static_cast<std::size_t>(g);
  }
  for (const auto& [key, target] : {std::pair{"up", &p.up}, std::pair{"down", &p.down}, std::pair{"lepton", &p.lepton}}) {
    const auto it = j.find(key);
    if (it == j.end()) continue;
    const std::string path = std::string("/") + key;
    if (!it->is_array()) fail(source, path, "expected a list of masses");
    target->clear();
    for (std::size_t i = 0; i < it->size(); ++i) target->push_back(r.number((*it)[i], path + "/" + std::to_string(i)));
  }
  if (const auto it = j.find("ckm"); it != j.end()) {
    if (it->is_object()) {
      constexpr double deg = std::numbers::pi / 180.0;
      const double t12 = r.number(r.at(*it, "/ckm", "theta12_deg"), "/ckm/theta12_deg") * deg;
      const double t13 = r.number(r.at(*it, "/ckm", "theta13_deg"), "/ckm/theta13_deg") * deg;
      const double t23 = r.number(r.at(*it, "/ckm", "theta23_deg"), "/ckm/theta23_deg") * deg;
      const double dl = r.number(r.at(*it, "/ckm", "delta_rad"), "/ckm/delta_rad");
      p.ckm = ckm_from_angles(t12, t13, t23, dl);
    } else {
      p.ckm = r.matrix(*it, "/ckm");
    }
  } else if (p.generations != 3) {
    p.ckm = ComplexMatrix::identity(p.generations);
  }
  guarded(source, "", [&] {
    p.validate();
    return 0;
  });
  return p;
}

SMParams load_masses(const std::filesystem::path& path) { return parse_masses(read_file(path), path.string()); }

}  // namespace nctk::doc
