#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace cardyfrob {

using Point = std::uint32_t;
using PointPair = std::pair<Point, Point>;

/// A finite group N acting on points 0..size()-1 through a dense action table.
struct NSet {
  FiniteGroup group;
  std::vector<Point> table;  // table[n * size + x] = n(x)
  std::vector<std::string> point_names;
  std::string provenance;

  std::size_t size() const { return point_names.size(); }
  Point act(Element n, Point x) const { return table[static_cast<std::size_t>(n) * size() + x]; }

  std::size_t fixed_points(Element n) const {
    std::size_t f = 0;
    for (Point x = 0; x < size(); ++x) f += act(n, x) == x;
    return f;
  }
};

/// Identity and compatibility axioms of the action, checked exhaustively.
inline bool is_action(const NSet& s) {
  const auto& n = s.group;
  if (s.table.size() != n.order() * s.size()) return false;
  for (Point x = 0; x < s.size(); ++x)
    if (s.act(FiniteGroup::identity(), x) != x) return false;
  for (Element g = 0; g < n.order(); ++g)
    for (Element h = 0; h < n.order(); ++h)
      for (Point x = 0; x < s.size(); ++x)
        if (s.act(g, s.act(h, x)) != s.act(n.mul(g, h), x)) return false;
  return true;
}

/// Everything derived from a pair K <= G: the normalizer, N = N_G(K)/K, the subgroup set X and the action.
struct SubgroupPair {
  FiniteGroup g;
  Subgroup k;
  Subgroup normalizer;
  QuotientGroup quotient;
  std::vector<Subgroup> overgroups;
  bool core_free = true;
  NSet nset;
};

inline std::string describe_subgroup(const FiniteGroup& g, const Subgroup& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (i) out += ",";
    out += g.name(s.elements[i]);
  }
  return out + ">";
}

/// N = N_G(K)/K acting on the subgroups of G containing K by conjugation.
inline SubgroupPair analyze_pair(const FiniteGroup& g, const Subgroup& k) {
  if (!is_subgroup(g, k)) throw InputError("K is not a subgroup of G");
  SubgroupPair p;
  p.g = g;
  p.k = k;
  p.normalizer = normalizer(g, k);
  p.quotient = quotient_group(g, p.normalizer, k);
  p.overgroups = subgroups_containing(g, k);
  p.core_free = is_core_free(g, k);

  const std::size_t npts = p.overgroups.size();
  auto locate = [&](const Subgroup& s) -> Point {
    auto it = std::lower_bound(p.overgroups.begin(), p.overgroups.end(), s, canonical_less);
    if (it == p.overgroups.end() || !(*it == s)) throw LogicError("conjugate of an overgroup of K is not in X");
    return static_cast<Point>(it - p.overgroups.begin());
  };

  NSet& ns = p.nset;
  ns.group = p.quotient.group;
  ns.table.assign(ns.group.order() * npts, 0);
  for (std::size_t q = 0; q < ns.group.order(); ++q)
    for (std::size_t x = 0; x < npts; ++x)
      ns.table[q * npts + x] = locate(conjugate_subgroup(g, p.quotient.representatives[q], p.overgroups[x]));
  // K acts trivially, so conjugation by any coset member must agree with the representative.
  for (auto h : p.normalizer.elements) {
    const Element q = *p.quotient.projection[h];
    for (std::size_t x = 0; x < npts; ++x)
      if (locate(conjugate_subgroup(g, h, p.overgroups[x])) != ns.table[q * npts + x])
        throw LogicError("conjugation action does not factor through N_G(K)/K");
  }
  for (const auto& s : p.overgroups) ns.point_names.push_back("S" + std::to_string(*s.id) + "[" + std::to_string(s.order()) + "]");
  ns.provenance = "|G|=" + std::to_string(g.order()) + " K=" + describe_subgroup(g, k);
  return p;
}

inline NSet conjugation_nset(const FiniteGroup& g, const Subgroup& k) { return analyze_pair(g, k).nset; }

/// Minimal element of each left coset xS, ascending; coset c is reps[c] * S.
inline std::vector<Element> coset_representatives(const FiniteGroup& g, const Subgroup& s) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto y : s.elements) seen[g.mul(x, y)] = true;
  }
  return reps;
}

/// G acting on the left cosets G/S by left translation; cosets are numbered by their minimal element.
inline NSet coset_nset(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) throw InputError("S is not a subgroup of G");
  const auto reps = coset_representatives(g, s);
  std::vector<Point> coset_of(g.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (auto y : s.elements) coset_of[g.mul(reps[c], y)] = static_cast<Point>(c);
  NSet ns;
  ns.group = g;
  const std::size_t npts = reps.size();
  ns.table.assign(g.order() * npts, 0);
  for (Element h = 0; h < g.order(); ++h)
    for (std::size_t c = 0; c < npts; ++c) ns.table[h * npts + c] = coset_of[g.mul(h, reps[c])];
  for (auto r : reps) ns.point_names.push_back(g.name(r) + "S");
  ns.provenance = "|G|=" + std::to_string(g.order()) + " G/S, S=" + describe_subgroup(g, s);
  return ns;
}

/// Number of elements n with n^2 = a^-1.
inline std::size_t count_square_roots_of_inverse(const FiniteGroup& n, Element a) {
  std::size_t d = 0;
  const Element target = n.inv(a);
  for (Element x = 0; x < n.order(); ++x) d += n.mul(x, x) == target;
  return d;
}

struct InteriorField {
  std::string label;
  ConjugacyClass cls;
  std::size_t aut_order = 0;
  std::size_t star = 0;
  std::size_t d_alpha = 0;
};

struct BoundaryField {
  std::string label;
  std::vector<PointPair> orbit;  // sorted; orbit.front() is the representative
  std::size_t aut_order = 0;
  std::size_t star = 0;

  const PointPair& representative() const { return orbit.front(); }
  bool diagonal() const { return orbit.front().first == orbit.front().second; }
};

/// Labelled interior fields (conjugacy classes of N) and boundary fields (N-orbits on X x X).
struct FieldCatalog {
  std::vector<InteriorField> interior;
  std::vector<BoundaryField> boundary;
  NSet nset;
  std::string provenance;
  std::vector<std::size_t> class_of;    // N element -> interior index
  std::vector<std::size_t> field_of_pair;  // x * |X| + y -> boundary index

  const FiniteGroup& group() const { return nset.group; }
  std::size_t boundary_field(Point x, Point y) const { return field_of_pair[static_cast<std::size_t>(x) * nset.size() + y]; }

  std::optional<std::size_t> interior_index(const std::string& label) const {
    for (std::size_t i = 0; i < interior.size(); ++i)
      if (interior[i].label == label) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> boundary_index(const std::string& label) const {
    for (std::size_t i = 0; i < boundary.size(); ++i)
      if (boundary[i].label == label) return i;
    return std::nullopt;
  }
};

inline std::size_t d_alpha(const FieldCatalog& c, std::size_t field) {
  return count_square_roots_of_inverse(c.group(), c.interior.at(field).cls.representative);
}

/// (1/|N|) * sum over n of fix(n)^2: the number of N-orbits on X x X.
inline Rational burnside_pair_orbit_count(const NSet& s) {
  Integer total = 0;
  for (Element n = 0; n < s.group.order(); ++n) {
    const auto f = s.fixed_points(n);
    total += Integer(f) * f;
  }
  return Rational(total, Integer(s.group.order()));
}

inline FieldCatalog build_catalog(const NSet& nset) {
  FieldCatalog c;
  c.nset = nset;
  c.provenance = nset.provenance;
  const FiniteGroup& n = nset.group;

  const auto classes = conjugacy_classes(n);
  c.class_of = class_lookup(n, classes);
  for (const auto& cls : classes) {
    InteriorField f;
    f.label = cls.label;
    f.cls = cls;
    f.aut_order = centralizer(n, cls.representative).order();
    f.star = c.class_of[n.inv(cls.representative)];
    f.d_alpha = count_square_roots_of_inverse(n, cls.representative);
    c.interior.push_back(std::move(f));
  }

  const std::size_t npts = nset.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  c.field_of_pair.assign(npts * npts, unset);
  // Lexicographic scan: the first pair met in each orbit is its minimal representative.
  for (Point x = 0; x < npts; ++x)
    for (Point y = 0; y < npts; ++y) {
      if (c.field_of_pair[x * npts + y] != unset) continue;
      BoundaryField b;
      const std::size_t idx = c.boundary.size();
      b.label = "b" + std::to_string(idx);
      for (Element g = 0; g < n.order(); ++g) {
        const Point gx = nset.act(g, x);
        const Point gy = nset.act(g, y);
        if (c.field_of_pair[gx * npts + gy] == unset) {
          c.field_of_pair[gx * npts + gy] = idx;
          b.orbit.emplace_back(gx, gy);
        }
      }
      std::sort(b.orbit.begin(), b.orbit.end());
      if (n.order() % b.orbit.size() != 0) throw LogicError("orbit size does not divide |N|");
      b.aut_order = n.order() / b.orbit.size();
      c.boundary.push_back(std::move(b));
    }
  for (auto& b : c.boundary) b.star = c.boundary_field(b.representative().second, b.representative().first);
  return c;
}

} // namespace cardyfrob
