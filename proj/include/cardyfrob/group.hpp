#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cardyfrob {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderBound = 2000;

/// (p * q)(i) = p(q(i)): apply q first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline bool is_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Cycle notation, fixed points omitted; the identity prints as "()".
inline std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = p[x];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

/// A finite group as a Cayley table on dense indices; index 0 is the identity.
class FiniteGroup {
public:
  FiniteGroup() = default;

  /// Builds from a complete multiplication table; names are optional display strings.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> names = {}) {
    if (order == 0 || table.size() != order * order) throw LogicError("multiplication table has wrong size");
    FiniteGroup g;
    g.order_ = order;
    g.table_ = std::move(table);
    for (std::size_t i = 0; i < order; ++i)
      if (g.table_[i] != i || g.table_[i * order] != i) throw LogicError("index 0 is not a two-sided identity");
    g.inv_.assign(order, 0);
    for (Element a = 0; a < order; ++a) {
      bool found = false;
      for (Element b = 0; b < order; ++b)
        if (g.mul(a, b) == 0) {
          if (g.mul(b, a) != 0) throw LogicError("right inverse is not a left inverse");
          g.inv_[a] = b;
          found = true;
          break;
        }
      if (!found) throw LogicError("element without inverse");
    }
    if (names.empty())
      for (std::size_t i = 0; i < order; ++i) names.push_back("g" + std::to_string(i));
    g.names_ = std::move(names);
    g.compute_orders();
    return g;
  }

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(Element a) const { return element_orders_[a]; }
  const std::string& name(Element a) const { return names_[a]; }

  bool has_permutations() const { return !perms_.empty(); }
  std::size_t degree() const { return degree_; }
  const Permutation& permutation(Element a) const { return perms_.at(a); }

  std::optional<Element> index_of(const Permutation& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

private:
  friend FiniteGroup build_group(std::size_t, const std::vector<Permutation>&, std::size_t);

  void compute_orders() {
    element_orders_.assign(order_, 1);
    for (Element a = 1; a < order_; ++a) {
      std::size_t k = 1;
      for (Element x = a; x != 0; x = mul(x, a)) ++k;
      element_orders_[a] = k;
    }
  }

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> element_orders_;
  std::vector<std::string> names_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, Element> lookup_;
};

/// Closure of the generators under composition. Elements are numbered breadth-first from
/// the identity, right-multiplying by the generators in input order.
inline FiniteGroup build_group(std::size_t degree, const std::vector<Permutation>& generators,
                               std::size_t order_bound = kDefaultOrderBound) {
  if (degree == 0) throw InputError("degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_bijection(generators[i], degree))
      throw InputError("generator " + std::to_string(i) + " is not a permutation of 0.." + std::to_string(degree - 1));

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  FiniteGroup g;
  g.degree_ = degree;
  g.perms_.push_back(id);
  g.lookup_.emplace(id, 0);
  for (std::size_t head = 0; head < g.perms_.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation y = compose(g.perms_[head], gen);
      if (g.lookup_.count(y)) continue;
      if (g.perms_.size() >= order_bound)
        throw ResourceError("group order exceeds the bound " + std::to_string(order_bound));
      g.lookup_.emplace(y, static_cast<Element>(g.perms_.size()));
      g.perms_.push_back(std::move(y));
    }
  }

  const std::size_t n = g.perms_.size();
  g.order_ = n;
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = g.lookup_.at(compose(g.perms_[a], g.perms_[b]));
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[g.perms_[a][i]] = static_cast<std::uint32_t>(i);
    g.inv_[a] = g.lookup_.at(r);
  }
  for (const auto& p : g.perms_) g.names_.push_back(cycle_notation(p));
  g.compute_orders();
  return g;
}

/// Subgroup as a sorted element set. id is its position in a canonical subgroup list, when it has one.
struct Subgroup {
  std::vector<Element> elements;
  std::optional<std::size_t> id;

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// (order, element list) ordering used for canonical subgroup ids.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

inline Subgroup trivial_subgroup() { return Subgroup{{FiniteGroup::identity()}, std::nullopt}; }

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  for (Element x = 0; x < g.order(); ++x) s.elements.push_back(x);
  return s;
}

/// Smallest subgroup containing the given elements.
inline Subgroup closure(const FiniteGroup& g, const std::vector<Element>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> found{FiniteGroup::identity()};
  in[0] = true;
  std::vector<Element> gens;
  for (auto x : generators)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  for (std::size_t head = 0; head < found.size(); ++head)
    for (auto s : gens) {
      const Element y = g.mul(found[head], s);
      if (!in[y]) {
        in[y] = true;
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup{std::move(found), std::nullopt};
}

/// Closure, identity, inverse and Lagrange checks for a candidate element set.
inline bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.elements.empty() || !s.contains(FiniteGroup::identity())) return false;
  if (g.order() % s.order() != 0) return false;
  for (auto a : s.elements) {
    if (!s.contains(g.inv(a))) return false;
    for (auto b : s.elements)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

struct ConjugacyClass {
  Element representative = 0;
  std::vector<Element> members;
  std::string label;

  std::size_t size() const { return members.size(); }
};

/// Classes ordered by element order, then by minimal member; labelled a0, a1, ... in that order.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ConjugacyClass> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Element> orbit;
    for (Element h = 0; h < g.order(); ++h) orbit.insert(g.conjugate(h, x));
    ConjugacyClass c;
    c.representative = x;
    c.members.assign(orbit.begin(), orbit.end());
    for (auto y : c.members) seen[y] = true;
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [&](const ConjugacyClass& a, const ConjugacyClass& b) {
    const auto oa = g.element_order(a.representative);
    const auto ob = g.element_order(b.representative);
    if (oa != ob) return oa < ob;
    return a.representative < b.representative;
  });
  for (std::size_t k = 0; k < classes.size(); ++k) classes[k].label = "a" + std::to_string(k);
  return classes;
}

/// Maps every element to the index of its class in `classes`.
inline std::vector<std::size_t> class_lookup(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> of(g.order(), 0);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto x : classes[k].members) of[x] = k;
  return of;
}

inline Subgroup centralizer(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw InputError("element index out of range");
  Subgroup s;
  for (Element h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h)) s.elements.push_back(h);
  return s;
}

inline bool normalizes(const FiniteGroup& g, Element h, const Subgroup& k) {
  for (auto x : k.elements)
    if (!k.contains(g.conjugate(h, x))) return false;
  return true;
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& k) {
  Subgroup s;
  for (Element h = 0; h < g.order(); ++h)
    if (normalizes(g, h, k)) s.elements.push_back(h);
  return s;
}

/// Intersection of all conjugates of k.
inline Subgroup core(const FiniteGroup& g, const Subgroup& k) {
  Subgroup s;
  for (auto x : k.elements) {
    bool everywhere = true;
    for (Element h = 0; h < g.order() && everywhere; ++h) everywhere = k.contains(g.conjugate(h, x));
    if (everywhere) s.elements.push_back(x);
  }
  return s;
}

inline bool is_core_free(const FiniteGroup& g, const Subgroup& k) { return core(g, k).order() == 1; }

/// h S h^-1 as a sorted subgroup.
inline Subgroup conjugate_subgroup(const FiniteGroup& g, Element h, const Subgroup& s) {
  Subgroup out;
  out.elements.reserve(s.order());
  for (auto x : s.elements) out.elements.push_back(g.conjugate(h, x));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

struct QuotientGroup {
  FiniteGroup group;
  /// Parent element of minimal index in each coset, indexed by quotient element.
  std::vector<Element> representatives;
  /// Quotient element for each parent element of the numerator subgroup; nullopt outside it.
  std::vector<std::optional<Element>> projection;
};

/// h / k for k normal in h (both subgroups of g). Cosets are numbered by their minimal element.
inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  for (auto x : k.elements)
    if (!h.contains(x)) throw LogicError("quotient: k is not contained in the numerator subgroup");
  for (auto a : h.elements)
    if (!normalizes(g, a, k)) throw LogicError("quotient: k is not normal in the numerator subgroup");

  QuotientGroup q;
  q.projection.assign(g.order(), std::nullopt);
  for (auto a : h.elements) {  // ascending, so the first unassigned element is the coset minimum
    if (q.projection[a]) continue;
    const auto idx = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(a);
    for (auto x : k.elements) q.projection[g.mul(a, x)] = idx;
  }
  const std::size_t n = q.representatives.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(g.name(q.representatives[i]));
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = *q.projection[g.mul(q.representatives[i], q.representatives[j])];
  }
  q.group = FiniteGroup::from_table(n, std::move(table), std::move(names));
  return q;
}

/// Every subgroup of g containing k, sorted by (order, element list), with ids set to list positions.
/// Found by iterated closure: each known S is extended by each element outside it.
inline std::vector<Subgroup> subgroups_containing(const FiniteGroup& g, const Subgroup& k) {
  std::set<std::vector<Element>> found;
  std::deque<std::vector<Element>> frontier;
  const Subgroup start = closure(g, k.elements);
  found.insert(start.elements);
  frontier.push_back(start.elements);
  while (!frontier.empty()) {
    const std::vector<Element> s = std::move(frontier.front());
    frontier.pop_front();
    std::vector<bool> in(g.order(), false);
    for (auto x : s) in[x] = true;
    for (Element x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<Element> gens = s;
      gens.push_back(x);
      Subgroup t = closure(g, gens);
      if (found.insert(t.elements).second) frontier.push_back(std::move(t.elements));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : found) out.push_back(Subgroup{e, std::nullopt});
  std::sort(out.begin(), out.end(), canonical_less);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
  return out;
}

} // namespace cardyfrob
