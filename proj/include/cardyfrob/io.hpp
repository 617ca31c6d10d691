#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "action.hpp"
#include "cardy.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "group.hpp"
#include "hurwitz.hpp"
#include "rational.hpp"
#include "report.hpp"

// JSON documents: group input, surface specs, and the machine-readable outputs of the CLI.
// Object keys come out sorted (nlohmann::json uses std::map) and rationals are canonical strings.

namespace cardyfrob::io {

using json = nlohmann::json;

/// Input error that names the offending JSON path.
class ParseError : public InputError {
public:
  ParseError(const std::string& path, const std::string& what) : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

struct GroupDocument {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> k_generators;
};

inline json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(file, std::string("invalid JSON: ") + e.what());
  }
}

inline std::vector<Permutation> parse_permutations(const json& j, const std::string& path, std::size_t degree) {
  if (!j.is_array()) throw ParseError(path, "expected an array of permutations");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw ParseError(p, "expected an array of images");
    Permutation perm;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const auto& v = j[i][k];
      if (!v.is_number_unsigned()) throw ParseError(p + "[" + std::to_string(k) + "]", "expected a non-negative integer");
      perm.push_back(v.get<std::uint32_t>());
    }
    if (!is_bijection(perm, degree)) throw ParseError(p, "not a permutation of 0.." + std::to_string(degree - 1));
    out.push_back(std::move(perm));
  }
  return out;
}

inline GroupDocument parse_group_document(const json& j) {
  if (!j.is_object()) throw ParseError("$", "expected an object");
  GroupDocument doc;
  if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0)
    throw ParseError("$.degree", "expected a positive integer");
  doc.degree = j["degree"].get<std::size_t>();
  if (!j.contains("generators")) throw ParseError("$.generators", "missing");
  doc.generators = parse_permutations(j["generators"], "$.generators", doc.degree);
  if (j.contains("k_generators")) doc.k_generators = parse_permutations(j["k_generators"], "$.k_generators", doc.degree);
  return doc;
}

/// Builds G and K, with K the subgroup generated by k_generators (trivial when absent).
inline SubgroupPair load_pair(const GroupDocument& doc, std::size_t order_bound = kDefaultOrderBound) {
  const FiniteGroup g = build_group(doc.degree, doc.generators, order_bound);
  std::vector<Element> k_elems;
  for (std::size_t i = 0; i < doc.k_generators.size(); ++i) {
    const auto idx = g.index_of(doc.k_generators[i]);
    if (!idx) throw ParseError("$.k_generators[" + std::to_string(i) + "]", "not an element of G");
    k_elems.push_back(*idx);
  }
  return analyze_pair(g, closure(g, k_elems));
}

inline Subgroup parse_subgroup_generators(const FiniteGroup& g, const json& j, const std::string& path) {
  if (!g.has_permutations()) throw ParseError(path, "group has no permutation realization");
  const auto perms = parse_permutations(j, path, g.degree());
  std::vector<Element> elems;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto idx = g.index_of(perms[i]);
    if (!idx) throw ParseError(path + "[" + std::to_string(i) + "]", "not an element of G");
    elems.push_back(*idx);
  }
  return closure(g, elems);
}

inline SurfaceSpec parse_surface(const json& j, const std::string& path = "$") {
  if (!j.is_object()) throw ParseError(path, "expected a surface object");
  SurfaceSpec s;
  if (j.contains("orientable")) {
    if (!j["orientable"].is_boolean()) throw ParseError(path + ".orientable", "expected a boolean");
    s.orientable = j["orientable"].get<bool>();
  }
  Rational genus = 0;
  if (j.contains("genus")) {
    const auto& g = j["genus"];
    if (g.is_number_integer()) genus = Rational(g.get<long long>());
    else if (g.is_string()) {
      try {
        genus = parse_rational(g.get<std::string>());
      } catch (const InputError& e) {
        throw ParseError(path + ".genus", e.what());
      }
    } else
      throw ParseError(path + ".genus", "expected an integer or a \"p/q\" string");
  }
  const Rational twice = genus * 2;
  if (genus < 0 || boost::multiprecision::denominator(twice) != 1)
    throw ParseError(path + ".genus", "genus must be a non-negative integer or half-integer");
  s.twice_genus = static_cast<std::size_t>(boost::multiprecision::numerator(twice));
  if (s.orientable && s.twice_genus % 2 != 0) throw ParseError(path + ".genus", "orientable surfaces need an integer genus");
  if (!s.orientable && s.twice_genus == 0) throw ParseError(path + ".genus", "non-orientable surfaces need genus >= 1/2");
  if (j.contains("interior")) {
    const auto& a = j["interior"];
    if (!a.is_array()) throw ParseError(path + ".interior", "expected an array of labels");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string()) throw ParseError(path + ".interior[" + std::to_string(i) + "]", "expected a label");
      s.interior.push_back(a[i].get<std::string>());
    }
  }
  if (j.contains("boundary")) {
    const auto& b = j["boundary"];
    if (!b.is_array()) throw ParseError(path + ".boundary", "expected an array of contours");
    for (std::size_t c = 0; c < b.size(); ++c) {
      const std::string cp = path + ".boundary[" + std::to_string(c) + "]";
      if (!b[c].is_array()) throw ParseError(cp, "expected an array of labels");
      if (b[c].empty()) throw ParseError(cp, "a boundary contour needs at least one marked point");
      std::vector<std::string> contour;
      for (std::size_t i = 0; i < b[c].size(); ++i) {
        if (!b[c][i].is_string()) throw ParseError(cp + "[" + std::to_string(i) + "]", "expected a label");
        contour.push_back(b[c][i].get<std::string>());
      }
      s.boundary.push_back(std::move(contour));
    }
  }
  return s;
}

/// A single surface object, or an array of them for a disjoint union.
inline std::vector<SurfaceSpec> parse_surfaces(const json& j) {
  std::vector<SurfaceSpec> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_surface(j[i], "$[" + std::to_string(i) + "]"));
    if (out.empty()) throw ParseError("$", "empty surface list");
  } else {
    out.push_back(parse_surface(j));
  }
  return out;
}

/// Validates labels against the catalog and re-raises with the JSON path of the offender.
inline void check_labels(const FieldCatalog& catalog, const std::vector<SurfaceSpec>& specs) {
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const std::string base = specs.size() == 1 ? "$" : "$[" + std::to_string(s) + "]";
    for (std::size_t i = 0; i < specs[s].interior.size(); ++i)
      if (!catalog.interior_index(specs[s].interior[i]))
        throw ParseError(base + ".interior[" + std::to_string(i) + "]", "unknown interior field '" + specs[s].interior[i] + "'");
    for (std::size_t c = 0; c < specs[s].boundary.size(); ++c)
      for (std::size_t i = 0; i < specs[s].boundary[c].size(); ++i)
        if (!catalog.boundary_index(specs[s].boundary[c][i]))
          throw ParseError(base + ".boundary[" + std::to_string(c) + "][" + std::to_string(i) + "]",
                           "unknown boundary field '" + specs[s].boundary[c][i] + "'");
  }
}

inline json surface_to_json(const SurfaceSpec& s) {
  json j;
  j["orientable"] = s.orientable;
  j["genus"] = to_string(s.genus());
  j["interior"] = s.interior;
  j["boundary"] = s.boundary;
  return j;
}

inline json info_to_json(const SubgroupPair& p) {
  json j;
  j["G_order"] = p.g.order();
  j["K_order"] = p.k.order();
  j["normalizer_order"] = p.normalizer.order();
  j["N_order"] = p.quotient.group.order();
  j["X_size"] = p.overgroups.size();
  j["core_free"] = p.core_free;
  json orders = json::array();
  for (const auto& s : p.overgroups) orders.push_back(s.order());
  j["X_orders"] = orders;
  json warnings = json::array();
  if (!p.core_free) warnings.push_back("K is not core-free: it contains a nontrivial normal subgroup of G");
  j["warnings"] = warnings;
  return j;
}

inline json catalog_to_json(const FieldCatalog& c) {
  json j;
  json interior = json::array();
  for (const auto& f : c.interior)
    interior.push_back({{"label", f.label},
                        {"class_size", f.cls.size()},
                        {"aut", f.aut_order},
                        {"star", c.interior[f.star].label},
                        {"d", f.d_alpha},
                        {"representative", c.group().name(f.cls.representative)}});
  json boundary = json::array();
  for (const auto& f : c.boundary)
    boundary.push_back({{"label", f.label},
                        {"rep", {f.representative().first, f.representative().second}},
                        {"orbit_size", f.orbit.size()},
                        {"aut", f.aut_order},
                        {"star", c.boundary[f.star].label}});
  j["interior"] = interior;
  j["boundary"] = boundary;
  j["points"] = c.nset.point_names;
  j["provenance"] = c.provenance;
  return j;
}

inline json element_to_json(const AlgebraElement& x) {
  json j = json::array();
  for (const auto& q : x) j.push_back(to_string(q));
  return j;
}

/// Summary of an algebra; with dump = true also the structure constants, form, involution and unit.
inline json algebra_to_json(const EquippedFrobeniusAlgebra& alg, bool dump) {
  json j;
  j["dimension"] = alg.dim();
  j["basis"] = alg.labels();
  if (!dump) return j;
  json constants = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = 0; k < alg.dim(); ++k)
      for (const auto& [m, c] : alg.product(i, k))
        constants.push_back({alg.label(i), alg.label(k), alg.label(m), to_string(c)});
  j["structure_constants"] = constants;
  json form = json::array();
  for (std::size_t r = 0; r < alg.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < alg.dim(); ++c) row.push_back(to_string(alg.form()(r, c)));
    form.push_back(row);
  }
  j["form"] = form;
  j["linear_form"] = element_to_json(alg.linear_form());
  j["involution"] = alg.involution();
  j["unit"] = element_to_json(alg.unit());
  return j;
}

inline json report_to_json(const Report& r) {
  json j = json::array();
  for (const auto& e : r.results()) {
    json item = {{"axiom", e.axiom}, {"status", e.passed ? "pass" : "fail"}};
    if (!e.passed) item["witness"] = e.witness;
    j.push_back(item);
  }
  return j;
}

} // namespace cardyfrob::io
