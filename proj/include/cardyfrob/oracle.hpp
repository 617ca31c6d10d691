#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "action.hpp"
#include "cardy.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hurwitz.hpp"
#include "matrix.hpp"
#include "rational.hpp"

// Brute-force evaluators. Nothing here touches the structure constants of A or B: closed surfaces
// are counted as tuples in N, bounded ones as traces of integer matrices on V_X.

namespace cardyfrob {

inline constexpr std::uint64_t kDefaultTupleBound = 100'000'000;

struct OracleResult {
  Rational value;
  std::uint64_t tuples_examined = 0;
};

namespace detail {

inline void check_tuple_bound(const FiniteGroup& n, const std::vector<const ConjugacyClass*>& classes,
                              std::size_t free_elements, std::uint64_t bound) {
  long double total = 1;
  for (const auto* c : classes) total *= static_cast<long double>(c->size());
  for (std::size_t i = 0; i < free_elements; ++i) total *= static_cast<long double>(n.order());
  if (total > static_cast<long double>(bound))
    throw ResourceError("tuple enumeration of " + std::to_string(static_cast<double>(total)) + " exceeds the bound " +
                        std::to_string(bound));
}

// Counts tuples whose word evaluates to e; `step` extends a partial product by one tuple slot.
struct TupleCounter {
  const FiniteGroup& n;
  const std::vector<const ConjugacyClass*>& classes;
  std::size_t free_slots;
  bool squares;  // x_1^2 ... x_k^2 when true, [x_1, y_1] ... when false
  std::uint64_t hits = 0;
  std::uint64_t visited = 0;

  void run_classes(std::size_t level, Element partial) {
    if (level == classes.size()) {
      run_free(0, partial);
      return;
    }
    for (auto x : classes[level]->members) run_classes(level + 1, n.mul(partial, x));
  }

  void run_free(std::size_t level, Element partial) {
    if (level == free_slots) {
      ++visited;
      if (partial == FiniteGroup::identity()) ++hits;
      return;
    }
    if (squares) {
      for (Element x = 0; x < n.order(); ++x) run_free(level + 1, n.mul(partial, n.mul(x, x)));
    } else {
      for (Element x = 0; x < n.order(); ++x)
        for (Element y = 0; y < n.order(); ++y) {
          const Element commutator = n.mul(n.mul(x, y), n.mul(n.inv(x), n.inv(y)));
          run_free(level + 2, n.mul(partial, commutator));
        }
    }
  }
};

} // namespace detail

/// (1/|N|) #{(a_1..a_m, x_1, y_1, .., x_g, y_g) : a_i in alpha_i, a_1..a_m [x_1,y_1]..[x_g,y_g] = e}.
inline OracleResult closed_orientable_oracle(const FiniteGroup& n, std::size_t genus,
                                             const std::vector<const ConjugacyClass*>& classes,
                                             std::uint64_t bound = kDefaultTupleBound) {
  detail::check_tuple_bound(n, classes, 2 * genus, bound);
  detail::TupleCounter counter{n, classes, 2 * genus, false};
  counter.run_classes(0, FiniteGroup::identity());
  return {Rational(static_cast<long long>(counter.hits), static_cast<long long>(n.order())), counter.visited};
}

/// (1/|N|) #{(a_1..a_m, x_1..x_k) : a_i in alpha_i, a_1..a_m x_1^2..x_k^2 = e}, k = 2g crosscaps.
inline OracleResult closed_nonorientable_oracle(const FiniteGroup& n, std::size_t twice_genus,
                                                const std::vector<const ConjugacyClass*>& classes,
                                                std::uint64_t bound = kDefaultTupleBound) {
  if (twice_genus == 0) throw InputError("non-orientable oracle needs at least one crosscap");
  detail::check_tuple_bound(n, classes, twice_genus, bound);
  detail::TupleCounter counter{n, classes, twice_genus, true};
  counter.run_classes(0, FiniteGroup::identity());
  return {Rational(static_cast<long long>(counter.hits), static_cast<long long>(n.order())), counter.visited};
}

namespace detail {

inline Matrix<Integer> interior_matrix(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec,
                                       const ResolvedSurface& r, std::uint64_t& products) {
  const auto& reps = h.reps;
  const auto& cat = h.catalog;
  Matrix<Integer> m = Matrix<Integer>::identity(reps.dimension);
  for (auto i : r.interior) {
    m = m * reps.interior[i];
    ++products;
  }
  if (spec.orientable) {
    Matrix<Integer> k(reps.dimension, reps.dimension);
    for (std::size_t i = 0; i < cat.interior.size(); ++i) {
      k.add_scaled(Integer(cat.interior[i].aut_order), reps.interior[i] * reps.interior[cat.interior[i].star]);
      ++products;
    }
    for (std::size_t g = 0; g < spec.twice_genus / 2; ++g) {
      m = m * k;
      ++products;
    }
  } else {
    Matrix<Integer> u(reps.dimension, reps.dimension);
    for (const auto& rho : reps.group) {
      u += rho * rho;
      ++products;
    }
    for (std::size_t g = 0; g < spec.twice_genus; ++g) {
      m = m * u;
      ++products;
    }
  }
  return m;
}

} // namespace detail

/// (1/|N|) tr of the whole evaluation word in End V_X: rho-images of the interior part, orbit
/// matrices V_beta for contour points, and sum_beta |Aut beta| V_beta (contour) V_beta* between contours.
inline OracleResult trace_oracle(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec) {
  const auto r = resolve(h.catalog, spec);
  if (r.boundary.empty()) throw InputError("trace oracle needs at least one boundary contour");
  const auto& reps = h.reps;
  const auto& cat = h.catalog;
  OracleResult out;
  Matrix<Integer> m = detail::interior_matrix(h, spec, r, out.tuples_examined);
  auto contour_matrix = [&](const std::vector<std::size_t>& contour) {
    Matrix<Integer> p = Matrix<Integer>::identity(reps.dimension);
    for (auto b : contour) {
      p = p * reps.boundary[b];
      ++out.tuples_examined;
    }
    return p;
  };
  m = m * contour_matrix(r.boundary.front());
  for (std::size_t c = 1; c < r.boundary.size(); ++c) {
    const Matrix<Integer> p = contour_matrix(r.boundary[c]);
    Matrix<Integer> wrapped(reps.dimension, reps.dimension);
    for (std::size_t b = 0; b < cat.boundary.size(); ++b) {
      wrapped.add_scaled(Integer(cat.boundary[b].aut_order), reps.boundary[b] * p * reps.boundary[cat.boundary[b].star]);
      out.tuples_examined += 2;
    }
    m = m * wrapped;
    ++out.tuples_examined;
  }
  out.value = Rational(m.trace(), Integer(cat.group().order()));
  return out;
}

/// Matching oracle for any spec: tuple counting when closed, traces otherwise.
inline OracleResult oracle_for(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec,
                               std::uint64_t bound = kDefaultTupleBound) {
  const auto r = resolve(h.catalog, spec);
  if (!r.boundary.empty()) return trace_oracle(h, spec);
  std::vector<const ConjugacyClass*> classes;
  for (auto i : r.interior) classes.push_back(&h.catalog.interior[i].cls);
  if (spec.orientable) return closed_orientable_oracle(h.catalog.group(), spec.twice_genus / 2, classes, bound);
  return closed_nonorientable_oracle(h.catalog.group(), spec.twice_genus, classes, bound);
}

/// (#{(x_1..x_n) in X^n : (x_i, x_{i+1}) in beta_i cyclically}) / |N|.
inline OracleResult t_tensor_oracle(const FieldCatalog& catalog, const std::vector<std::size_t>& betas) {
  if (betas.empty()) throw InputError("T-tensor needs at least one field");
  const std::size_t npts = catalog.nset.size();
  OracleResult out;
  std::uint64_t hits = 0;
  std::vector<Point> chain;
  auto walk = [&](auto&& self, std::size_t level) -> void {
    if (level == betas.size()) {
      ++out.tuples_examined;
      if (catalog.boundary_field(chain.back(), chain.front()) == betas.back()) ++hits;
      return;
    }
    for (Point y = 0; y < npts; ++y) {
      if (level > 0 && catalog.boundary_field(chain.back(), y) != betas[level - 1]) continue;
      chain.push_back(y);
      self(self, level + 1);
      chain.pop_back();
    }
  };
  walk(walk, 0);
  out.value = Rational(static_cast<long long>(hits), static_cast<long long>(catalog.group().order()));
  return out;
}

/// K_A against sum over (x, y) of the commutator xyx^-1y^-1, both in the class-sum basis.
inline bool casimir_is_commutator_sum(const CardyFrobeniusAlgebra& h) {
  const auto& n = h.catalog.group();
  std::vector<Integer> counts(n.order(), 0);
  for (Element x = 0; x < n.order(); ++x)
    for (Element y = 0; y < n.order(); ++y) ++counts[n.mul(n.mul(x, y), n.mul(n.inv(x), n.inv(y)))];
  AlgebraElement expected = h.a.zero();
  for (std::size_t i = 0; i < h.catalog.interior.size(); ++i) {
    const auto& cls = h.catalog.interior[i].cls;
    for (auto y : cls.members)
      if (counts[y] != counts[cls.representative]) return false;
    expected[i] = Rational(counts[cls.representative]);
  }
  return expected == h.a.casimir();
}

} // namespace cardyfrob
