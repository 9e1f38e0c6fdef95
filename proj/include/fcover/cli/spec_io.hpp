#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcover/euler.hpp"
#include "fcover/f_structure.hpp"
#include "fcover/parser.hpp"
#include "fcover/point_algebra.hpp"
#include "fcover/super_frobenius.hpp"

namespace fcover::cli {

using json = nlohmann::ordered_json;

// Malformed spec file (bad JSON, missing or mistyped field). Maps to exit code 2.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { none, structure_constants, ideal };

struct GradingSpec {
  std::vector<Bidegree> bidegrees;
  Vector r;
};

// Finite-dimensional algebra block: purely even tables feed the point-algebra checks,
// tables with odd classes the super-Frobenius checks.
struct AlgebraSpec {
  std::vector<Parity> parity;
  std::vector<Vector> table;  // d*d
  Vector unit;
  std::optional<Matrix> pairing;
  std::optional<Vector> functional;  // g(a, b) = functional(a b)
  std::optional<Vector> delta;

  std::size_t dim() const { return parity.size(); }
  bool has_odd() const {
    for (auto p : parity)
      if (p == Parity::odd) return true;
    return false;
  }
};

struct ManifoldSpec {
  std::size_t n = 0;
  Mode mode = Mode::none;
  std::map<std::pair<std::size_t, std::size_t>, std::string> structure_constants;  // 1-based, a <= b
  std::string identity = "e1";
  std::vector<std::string> ideal;
  std::optional<std::vector<std::string>> radical;
  std::optional<std::vector<Point>> sample_points;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> budget;
  std::optional<GradingSpec> gradings;
  std::optional<AlgebraSpec> algebra;
};

namespace detail {

inline Rational json_rational(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SpecError(where + ": " + e.what());
  }
  throw SpecError(where + ": expected an integer or a rational string like \"3/2\"");
}

inline Vector json_vector(const json& v, const std::string& where, std::optional<std::size_t> len = {}) {
  if (!v.is_array()) throw SpecError(where + ": expected an array");
  Vector out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(json_rational(v[k], where + "[" + std::to_string(k) + "]"));
  if (len && out.size() != *len)
    throw SpecError(where + ": expected " + std::to_string(*len) + " entries, got " + std::to_string(out.size()));
  return out;
}

inline std::size_t json_size(const json& v, const std::string& where, std::size_t min = 0) {
  if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min))
    throw SpecError(where + ": expected an integer >= " + std::to_string(min));
  return v.get<std::size_t>();
}

inline std::vector<std::string> json_strings(const json& v, const std::string& where) {
  if (!v.is_array()) throw SpecError(where + ": expected an array of expression strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw SpecError(where + ": expected an array of expression strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// "(a,b)" with 1-based indices
inline std::pair<std::size_t, std::size_t> pair_key(const std::string& key, std::size_t dim, const std::string& where) {
  static const std::regex re(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(key, m, re)) throw SpecError(where + ": key \"" + key + "\" is not of the form \"(a,b)\"");
  std::size_t a = std::stoul(m[1]), b = std::stoul(m[2]);
  if (a < 1 || b < 1 || a > dim || b > dim)
    throw SpecError(where + ": index out of range in \"" + key + "\" (dimension " + std::to_string(dim) + ")");
  return {a, b};
}

inline AlgebraSpec read_algebra(const json& j) {
  if (!j.is_object()) throw SpecError("algebra: expected an object");
  AlgebraSpec a;
  std::size_t d = 0;
  if (j.contains("parity")) {
    if (!j["parity"].is_array()) throw SpecError("algebra.parity: expected an array");
    for (const auto& p : j["parity"]) {
      if (p == "even")
        a.parity.push_back(Parity::even);
      else if (p == "odd")
        a.parity.push_back(Parity::odd);
      else
        throw SpecError("algebra.parity: entries must be \"even\" or \"odd\"");
    }
    d = a.parity.size();
    if (j.contains("dim") && json_size(j["dim"], "algebra.dim") != d) throw SpecError("algebra.dim disagrees with parity");
  } else {
    if (!j.contains("dim")) throw SpecError("algebra: needs \"dim\" or \"parity\"");
    d = json_size(j["dim"], "algebra.dim", 1);
    a.parity.assign(d, Parity::even);
  }
  if (d == 0) throw SpecError("algebra: dimension 0");

  if (!j.contains("table") || !j["table"].is_object()) throw SpecError("algebra.table: expected an object");
  std::vector<std::optional<Vector>> slots(d * d);
  for (const auto& [key, val] : j["table"].items()) {
    auto [x, y] = pair_key(key, d, "algebra.table");
    if (slots[(x - 1) * d + (y - 1)]) throw SpecError("algebra.table: duplicate key " + key);
    slots[(x - 1) * d + (y - 1)] = json_vector(val, "algebra.table" + key, d);
  }
  // a missing (b,a) is filled from (a,b) by (super)commutativity; missing pairs are zero
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      auto& s = slots[x * d + y];
      if (s) continue;
      if (const auto& t = slots[y * d + x]) {
        Vector v = *t;
        if (a.parity[x] == Parity::odd && a.parity[y] == Parity::odd)
          for (auto& c : v) c = -c;
        s = std::move(v);
      }
    }
  for (auto& s : slots) a.table.push_back(s ? *s : Vector(d));

  if (j.contains("unit")) {
    a.unit = json_vector(j["unit"], "algebra.unit", d);
  } else {
    a.unit = Vector(d);
    a.unit[0] = 1;
  }
  if (j.contains("pairing")) {
    const auto& p = j["pairing"];
    if (!p.is_array() || p.size() != d) throw SpecError("algebra.pairing: expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    Matrix g(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      auto row = json_vector(p[r], "algebra.pairing[" + std::to_string(r) + "]", d);
      for (std::size_t c = 0; c < d; ++c) g(r, c) = row[c];
    }
    a.pairing = std::move(g);
  }
  if (j.contains("functional")) a.functional = json_vector(j["functional"], "algebra.functional", d);
  if (a.pairing && a.functional) throw SpecError("algebra: give either \"pairing\" or \"functional\", not both");
  if (j.contains("delta")) a.delta = json_vector(j["delta"], "algebra.delta", d);
  return a;
}

inline GradingSpec read_gradings(const json& j) {
  if (!j.is_array()) throw SpecError("gradings: expected an array of {p, q, r} objects");
  if (j.empty()) throw SpecError("gradings: the list is empty");
  GradingSpec g;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    std::string where = "gradings[" + std::to_string(k) + "]";
    if (!e.is_object() || !e.contains("p") || !e.contains("q")) throw SpecError(where + ": needs p and q");
    g.bidegrees.push_back(Bidegree{static_cast<unsigned>(json_size(e["p"], where + ".p")),
                                   static_cast<unsigned>(json_size(e["q"], where + ".q"))});
    g.r.push_back(e.contains("r") ? json_rational(e["r"], where + ".r") : Rational(0));
  }
  return g;
}

}  // namespace detail

inline ManifoldSpec read_spec(const json& j) {
  using namespace detail;
  if (!j.is_object()) throw SpecError("spec: top level must be an object");
  static const std::vector<std::string> known{"n",         "mode",  "structure_constants", "identity", "ideal",
                                              "radical",   "sample_points", "seed",        "samples",  "budget",
                                              "gradings",  "algebra",       "family",      "description"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw SpecError("spec: unknown field \"" + key + "\"");

  ManifoldSpec s;
  if (j.contains("mode")) {
    if (j["mode"] == "structure_constants")
      s.mode = Mode::structure_constants;
    else if (j["mode"] == "ideal")
      s.mode = Mode::ideal;
    else
      throw SpecError("mode: expected \"structure_constants\" or \"ideal\"");
  }
  if (j.contains("structure_constants") && s.mode != Mode::structure_constants)
    throw SpecError("structure_constants given but mode is not \"structure_constants\"");
  if (j.contains("ideal") && s.mode != Mode::ideal) throw SpecError("ideal given but mode is not \"ideal\"");
  if (j.contains("radical") && s.mode != Mode::ideal) throw SpecError("radical is only meaningful with mode \"ideal\"");

  if (s.mode != Mode::none || j.contains("n")) {
    if (!j.contains("n")) throw SpecError("n: missing");
    s.n = json_size(j["n"], "n", 1);
  }

  if (s.mode == Mode::structure_constants) {
    if (!j.contains("structure_constants") || !j["structure_constants"].is_object())
      throw SpecError("structure_constants: expected an object mapping \"(a,b)\" to expressions");
    std::map<std::pair<std::size_t, std::size_t>, std::string> given;
    for (const auto& [key, val] : j["structure_constants"].items()) {
      auto k = pair_key(key, s.n, "structure_constants");
      if (!val.is_string()) throw SpecError("structure_constants" + key + ": expected an expression string");
      if (given.count(k)) throw SpecError("structure_constants: duplicate key " + key);
      given[k] = val.get<std::string>();
    }
    for (std::size_t a = 1; a <= s.n; ++a)
      for (std::size_t b = a; b <= s.n; ++b) {
        auto it = given.find({a, b});
        auto rev = given.find({b, a});
        if (it == given.end() && rev == given.end())
          throw SpecError("structure_constants: missing (" + std::to_string(a) + "," + std::to_string(b) + ")");
        s.structure_constants[{a, b}] = it != given.end() ? it->second : rev->second;
      }
    // keep asymmetric input so the commutativity check can see it
    for (const auto& [k, v] : given)
      if (k.first > k.second) s.structure_constants[k] = v;
    if (j.contains("identity")) {
      const auto& id = j["identity"];
      if (id.is_number_integer()) {
        auto k = json_size(id, "identity", 1);
        if (k > s.n) throw SpecError("identity: index out of range");
        s.identity = "e" + std::to_string(k);
      } else if (id.is_string()) {
        s.identity = id.get<std::string>();
      } else {
        throw SpecError("identity: expected a basis index or a field expression");
      }
    }
  }
  if (s.mode == Mode::ideal) {
    if (!j.contains("ideal")) throw SpecError("ideal: missing");
    s.ideal = json_strings(j["ideal"], "ideal");
    if (s.ideal.empty()) throw SpecError("ideal: the generator list is empty");
    if (j.contains("radical")) s.radical = json_strings(j["radical"], "radical");
  }
  if (j.contains("sample_points")) {
    if (s.n == 0) throw SpecError("sample_points need n");
    if (!j["sample_points"].is_array()) throw SpecError("sample_points: expected an array of points");
    std::vector<Point> pts;
    for (std::size_t k = 0; k < j["sample_points"].size(); ++k)
      pts.push_back(json_vector(j["sample_points"][k], "sample_points[" + std::to_string(k) + "]", s.n));
    s.sample_points = std::move(pts);
  }
  if (j.contains("seed")) {
    const auto& seed = j["seed"];
    if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0))
      throw SpecError("seed: expected a non-negative integer");
    s.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("samples")) s.samples = json_size(j["samples"], "samples", 1);
  if (j.contains("budget")) s.budget = json_size(j["budget"], "budget", 1);
  if (j.contains("gradings")) s.gradings = read_gradings(j["gradings"]);
  if (j.contains("algebra")) s.algebra = read_algebra(j["algebra"]);
  if (s.mode == Mode::none && !s.gradings && !s.algebra)
    throw SpecError("spec: nothing to check (no mode, gradings or algebra)");
  return s;
}

inline ManifoldSpec read_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  return read_spec(j);
}

inline ManifoldSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_spec_text(ss.str());
}

// ---------------------------------------------------------------------------------------
// Building library objects. Expression errors surface as ParseError with the field named.

namespace detail {

inline Polynomial parse_field(const std::string& where, const std::string& src, const VariableSet& vars,
                              const ParseOptions& opts = {}) {
  try {
    return parse_poly(src, vars, opts);
  } catch (const ParseError& e) {
    throw ParseError(e.position(), where + ": \"" + src + "\": " + std::string(e.what()));
  }
}

inline VectorField parse_vector_field(const std::string& where, const std::string& src, const VariableSet& vars) {
  auto p = parse_field(where, src, vars, ParseOptions{true, {}});
  try {
    return VectorField::from_symbol(p);
  } catch (const std::invalid_argument& e) {
    throw SpecError(where + ": \"" + src + "\" is not a combination of e1..en with coefficients in t");
  }
}

}  // namespace detail

inline FMultiplication build_multiplication(const ManifoldSpec& s) {
  if (s.mode != Mode::structure_constants) throw SpecError("spec has no structure constants");
  VariableSet vars(s.n);
  std::vector<VectorField> products;
  for (std::size_t a = 1; a <= s.n; ++a)
    for (std::size_t b = 1; b <= s.n; ++b) {
      auto it = s.structure_constants.find({a, b});
      if (it == s.structure_constants.end()) it = s.structure_constants.find({b, a});
      products.push_back(detail::parse_vector_field("structure_constants(" + std::to_string(a) + "," +
                                                        std::to_string(b) + ")",
                                                    it->second, vars));
    }
  return FMultiplication(vars, std::move(products), detail::parse_vector_field("identity", s.identity, vars));
}

inline IdealPresentation build_ideal(const std::vector<std::string>& gens, std::size_t n, const std::string& field) {
  VariableSet vars(n);
  std::vector<Polynomial> polys;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto p = detail::parse_field(field + "[" + std::to_string(k) + "]", gens[k], vars);
    if (p.uses_z()) throw SpecError(field + "[" + std::to_string(k) + "]: z is reserved");
    polys.push_back(std::move(p));
  }
  return IdealPresentation(vars, std::move(polys), OrderKind::block);
}

inline SuperFrobeniusAlgebra build_super_algebra(const AlgebraSpec& a) {
  if (a.functional) return SuperFrobeniusAlgebra::from_frobenius_form(a.parity, a.table, a.unit, *a.functional);
  if (!a.pairing) throw SpecError("algebra: odd classes need a \"pairing\" or \"functional\"");
  return SuperFrobeniusAlgebra(a.parity, a.table, *a.pairing, a.unit);
}

inline PointAlgebra build_point_algebra(const AlgebraSpec& a) {
  if (a.has_odd()) throw SpecError("algebra: point-algebra analysis needs a purely even table");
  return PointAlgebra(a.dim(), a.table, a.unit);
}

}  // namespace fcover::cli
