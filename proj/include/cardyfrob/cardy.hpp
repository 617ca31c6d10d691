#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "action.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace cardyfrob {

/// Integer matrices on V_X: rho(n) for group elements, V_alpha = rho(E_alpha), V_beta = nu(beta).
struct MatrixRep {
  std::size_t dimension = 0;
  std::vector<Matrix<Integer>> group;
  std::vector<Matrix<Integer>> interior;
  std::vector<Matrix<Integer>> boundary;
};

/// H = A + B with phi: A -> B, the element U of A and the representations on V_X.
struct CardyFrobeniusAlgebra {
  FieldCatalog catalog;
  EquippedFrobeniusAlgebra a;
  EquippedFrobeniusAlgebra b;
  Matrix<Rational> phi;  // dim B x dim A; column alpha is phi(E_alpha)
  AlgebraElement u;
  MatrixRep reps;

  AlgebraElement apply_phi(const AlgebraElement& x) const {
    if (x.size() != a.dim()) throw InputError("element does not belong to A");
    AlgebraElement out = b.zero();
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < b.dim(); ++i)
        if (!phi(i, j).is_zero()) out[i] += phi(i, j) * x[j];
    }
    return out;
  }

  /// The adjoint phi*: B -> A, defined by (x, phi*(y))_A = (phi(x), y)_B.
  AlgebraElement apply_phi_dual(const AlgebraElement& y) const {
    std::vector<Rational> rhs(a.dim(), Rational(0));
    for (std::size_t alpha = 0; alpha < a.dim(); ++alpha) rhs[alpha] = b.bilinear(apply_phi(a.basis(alpha)), y);
    const auto& inv = a.inverse_form();
    AlgebraElement out = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (!inv(i, j).is_zero()) out[i] += inv(i, j) * rhs[j];
    return out;
  }
};

/// Centre of Q[N] in the class-sum basis, with l(x) = (coefficient of e in x) / |N|.
inline EquippedFrobeniusAlgebra build_A(const FieldCatalog& catalog) {
  const FiniteGroup& n = catalog.group();
  const std::size_t dim = catalog.interior.size();
  // counts[(alpha*dim + beta)*dim + gamma] = #{(x, y) in alpha x beta : xy in gamma}
  std::vector<std::size_t> counts(dim * dim * dim, 0);
  for (Element x = 0; x < n.order(); ++x)
    for (Element y = 0; y < n.order(); ++y)
      ++counts[(catalog.class_of[x] * dim + catalog.class_of[y]) * dim + catalog.class_of[n.mul(x, y)]];

  std::vector<std::string> labels;
  std::vector<Rational> form(dim, Rational(0));
  std::vector<std::size_t> involution;
  for (const auto& f : catalog.interior) {
    labels.push_back(f.label);
    involution.push_back(f.star);
  }
  const std::size_t identity_class = catalog.class_of[FiniteGroup::identity()];
  form[identity_class] = Rational(1, static_cast<long long>(n.order()));

  std::vector<SparseVector> products(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const auto c = counts[(i * dim + j) * dim + k];
        if (c == 0) continue;
        const auto size = catalog.interior[k].cls.size();
        if (c % size != 0) throw LogicError("class-sum structure constant is not an integer");
        products[i * dim + j].emplace_back(static_cast<std::uint32_t>(k), Rational(static_cast<long long>(c / size)));
      }
  return EquippedFrobeniusAlgebra(std::move(labels), std::move(products), basis_element(dim, identity_class),
                                  std::move(form), std::move(involution));
}

namespace detail {

// Raw counts of cyclic chains (x_1..x_n) with (x_i, x_{i+1}) in beta_i, for n = 2 and n = 3.
struct ChainCounts {
  std::vector<std::size_t> pairs;                         // index beta1 * dim + beta2
  std::unordered_map<std::uint64_t, std::size_t> triples;  // index (beta1 * dim + beta2) * dim + beta3
};

inline ChainCounts count_chains(const FieldCatalog& catalog) {
  const std::size_t dim = catalog.boundary.size();
  const std::size_t npts = catalog.nset.size();
  ChainCounts out;
  out.pairs.assign(dim * dim, 0);
  for (Point x = 0; x < npts; ++x)
    for (Point y = 0; y < npts; ++y) ++out.pairs[catalog.boundary_field(x, y) * dim + catalog.boundary_field(y, x)];
  for (Point x = 0; x < npts; ++x)
    for (Point y = 0; y < npts; ++y) {
      const std::uint64_t b1 = catalog.boundary_field(x, y);
      for (Point z = 0; z < npts; ++z)
        ++out.triples[(b1 * dim + catalog.boundary_field(y, z)) * dim + catalog.boundary_field(z, x)];
    }
  return out;
}

} // namespace detail

/// Orbit algebra of N on X x X. The form is T_{b1 b2}; products come from (b1 b2, b3) = T_{b1 b2 b3}
/// through the inverse form, where T counts compatible cyclic chains weighted 1/|N|.
inline EquippedFrobeniusAlgebra build_B(const FieldCatalog& catalog) {
  const std::size_t dim = catalog.boundary.size();
  const Rational inv_order(1, static_cast<long long>(catalog.group().order()));
  const auto chains = detail::count_chains(catalog);

  Matrix<Rational> t2(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t2(i, j) = Rational(static_cast<long long>(chains.pairs[i * dim + j])) * inv_order;
  const auto t2_inv = inverse(t2);
  if (!t2_inv) throw LogicError("boundary pairing T_{b1 b2} is degenerate");
  std::vector<std::vector<std::pair<std::size_t, Rational>>> inv_rows(dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t k = 0; k < dim; ++k)
      if (!(*t2_inv)(l, k).is_zero()) inv_rows[l].emplace_back(k, (*t2_inv)(l, k));

  std::vector<SparseVector> products(dim * dim);
  {
    // Group the triple counts by (b1, b2) so each product is assembled in one pass.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_pair(dim * dim);
    for (const auto& [key, count] : chains.triples) by_pair[key / dim].emplace_back(key % dim, count);
    detail::Scratch scratch(dim);
    for (std::size_t ij = 0; ij < dim * dim; ++ij) {
      for (const auto& [l, count] : by_pair[ij]) {
        const Rational t = Rational(static_cast<long long>(count)) * inv_order;
        for (const auto& [k, f] : inv_rows[l]) scratch.add(static_cast<std::uint32_t>(k), t * f);
      }
      products[ij] = scratch.take();
    }
  }

  std::vector<std::string> labels;
  std::vector<std::size_t> involution;
  AlgebraElement unit = zero_element(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    labels.push_back(catalog.boundary[i].label);
    involution.push_back(catalog.boundary[i].star);
    if (catalog.boundary[i].diagonal()) unit[i] = 1;
  }
  // l_B(b) = (b, 1_B)_B
  std::vector<Rational> form(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!unit[j].is_zero()) form[i] += t2(i, j);
  return EquippedFrobeniusAlgebra(std::move(labels), std::move(products), std::move(unit), std::move(form),
                                  std::move(involution));
}

inline MatrixRep build_reps(const FieldCatalog& catalog) {
  const NSet& ns = catalog.nset;
  const std::size_t npts = ns.size();
  MatrixRep r;
  r.dimension = npts;
  for (Element g = 0; g < ns.group.order(); ++g) {
    Matrix<Integer> m(npts, npts);
    for (Point x = 0; x < npts; ++x) m(ns.act(g, x), x) = 1;
    r.group.push_back(std::move(m));
  }
  for (const auto& f : catalog.interior) {
    Matrix<Integer> m(npts, npts);
    for (auto g : f.cls.members) m += r.group[g];
    r.interior.push_back(std::move(m));
  }
  for (const auto& f : catalog.boundary) {
    Matrix<Integer> m(npts, npts);
    for (const auto& [x, y] : f.orbit) m(x, y) = 1;
    r.boundary.push_back(std::move(m));
  }
  return r;
}

/// phi(E_alpha) is the B-element whose orbit matrix equals V_alpha; orbit supports are disjoint,
/// so each coefficient is the entry of V_alpha at the orbit's representative pair.
inline Matrix<Rational> build_phi(const FieldCatalog& catalog, const MatrixRep& reps) {
  const std::size_t da = catalog.interior.size();
  const std::size_t db = catalog.boundary.size();
  Matrix<Rational> phi(db, da);
  for (std::size_t alpha = 0; alpha < da; ++alpha) {
    const auto& v = reps.interior[alpha];
    Matrix<Integer> rebuilt(reps.dimension, reps.dimension);
    for (std::size_t beta = 0; beta < db; ++beta) {
      const auto [x, y] = catalog.boundary[beta].representative();
      phi(beta, alpha) = Rational(v(x, y));
      rebuilt.add_scaled(v(x, y), reps.boundary[beta]);
    }
    if (!(rebuilt == v)) throw LogicError("rho(E_" + catalog.interior[alpha].label + ") is not in the image of nu");
  }
  return phi;
}

/// U = sum over n of n^2, in the class-sum basis.
inline AlgebraElement build_U(const FieldCatalog& catalog) {
  const FiniteGroup& n = catalog.group();
  std::vector<std::size_t> squares(n.order(), 0);
  for (Element x = 0; x < n.order(); ++x) ++squares[n.mul(x, x)];
  AlgebraElement u = zero_element(catalog.interior.size());
  for (std::size_t alpha = 0; alpha < catalog.interior.size(); ++alpha) {
    const auto& cls = catalog.interior[alpha].cls;
    const auto c = squares[cls.representative];
    for (auto y : cls.members)
      if (squares[y] != c) throw LogicError("sum of squares is not constant on a conjugacy class");
    u[alpha] = Rational(static_cast<long long>(c));
  }
  return u;
}

inline CardyFrobeniusAlgebra build_cardy(const FieldCatalog& catalog) {
  CardyFrobeniusAlgebra h;
  h.catalog = catalog;
  h.a = build_A(catalog);
  h.b = build_B(catalog);
  h.reps = build_reps(catalog);
  h.phi = build_phi(catalog, h.reps);
  h.u = build_U(catalog);
  return h;
}

inline CardyFrobeniusAlgebra build_cardy(const NSet& nset) { return build_cardy(build_catalog(nset)); }

/// Field-catalog invariants: star involutions, orbit-stabilizer, Burnside, U-coefficients.
inline Report verify_catalog(const FieldCatalog& c) {
  Report report;
  const std::size_t order = c.group().order();
  {
    std::string w;
    for (const auto& f : c.interior)
      if (c.interior[c.interior[f.star].star].label != f.label) w = f.label;
      else if (c.interior[f.star].aut_order != f.aut_order) w = f.label + " aut differs from its star";
    for (const auto& f : c.boundary)
      if (c.boundary[c.boundary[f.star].star].label != f.label) w = f.label;
      else if (c.boundary[f.star].aut_order != f.aut_order) w = f.label + " aut differs from its star";
    report.add("star_involution", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& f : c.interior)
      if (f.aut_order * f.cls.size() != order) w = f.label;
    for (const auto& f : c.boundary)
      if (f.aut_order * f.orbit.size() != order) w = f.label;
    report.add("orbit_stabilizer", w.empty(), w);
  }
  {
    std::size_t covered = 0;
    for (const auto& f : c.boundary) covered += f.orbit.size();
    report.add("pair_partition", covered == c.nset.size() * c.nset.size(), "orbits do not cover X x X exactly once");
  }
  {
    const Rational burnside = burnside_pair_orbit_count(c.nset);
    report.add("burnside_dimension", burnside == Rational(static_cast<long long>(c.boundary.size())),
               "Burnside count " + to_string(burnside) + " vs " + std::to_string(c.boundary.size()) + " orbits");
  }
  {
    std::size_t total = 0;
    for (const auto& f : c.interior) total += c.interior[f.star].d_alpha * f.cls.size();
    report.add("square_count", total == order, "sum of d(alpha*)|alpha| = " + std::to_string(total));
  }
  return report;
}

/// Representation-level checks for rho and nu.
inline Report verify_reps(const CardyFrobeniusAlgebra& h) {
  Report report;
  const auto& c = h.catalog;
  const auto& n = c.group();
  const auto& r = h.reps;
  const std::size_t db = h.b.dim();
  const Rational inv_order(1, static_cast<long long>(n.order()));

  {
    std::string w;
    for (Element g = 0; g < n.order() && w.empty(); ++g)
      for (Element k = 0; k < n.order(); ++k)
        if (!(r.group[g] * r.group[k] == r.group[n.mul(g, k)])) {
          w = "rho(" + n.name(g) + ")rho(" + n.name(k) + ") != rho(product)";
          break;
        }
    report.add("rho_multiplicative", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < db && w.empty(); ++i)
      for (std::size_t j = 0; j < db; ++j) {
        Matrix<Rational> expected(r.dimension, r.dimension);
        for (const auto& [k, coef] : h.b.product(i, j)) expected.add_scaled(coef, matrix_cast<Rational>(r.boundary[k]));
        if (!(matrix_cast<Rational>(r.boundary[i] * r.boundary[j]) == expected)) {
          w = "nu(" + h.b.label(i) + "*" + h.b.label(j) + ") != nu(" + h.b.label(i) + ")nu(" + h.b.label(j) + ")";
          break;
        }
      }
    report.add("nu_multiplicative", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < db && w.empty(); ++i)
      for (Element g = 0; g < n.order(); ++g)
        if (!(r.boundary[i] * r.group[g] == r.group[g] * r.boundary[i])) {
          w = "nu(" + h.b.label(i) + ") does not commute with rho(" + n.name(g) + ")";
          break;
        }
    report.add("nu_commutes_with_rho", w.empty(), w);
  }
  {
    // Disjoint 0/1 supports make nu injective; the Burnside count gives the centraliser dimension.
    Matrix<Integer> total(r.dimension, r.dimension);
    bool disjoint = true;
    for (const auto& m : r.boundary) total += m;
    for (std::size_t x = 0; x < r.dimension; ++x)
      for (std::size_t y = 0; y < r.dimension; ++y) disjoint = disjoint && total(x, y) == 1;
    const bool dims = burnside_pair_orbit_count(c.nset) == Rational(static_cast<long long>(db));
    report.add("nu_faithful_onto_centralizer", disjoint && dims, disjoint ? "dimension mismatch" : "orbit supports overlap");
  }
  {
    std::string w;
    for (std::size_t i = 0; i < db; ++i)
      if (!(r.boundary[h.b.star(i)] == r.boundary[i].transpose())) {
        w = "nu(" + h.b.label(i) + "*) != transpose";
        break;
      }
    report.add("nu_star_transpose", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < db && w.empty(); ++i)
      for (std::size_t j = 0; j < db; ++j) {
        const Rational via_trace = Rational((r.boundary[i] * r.boundary[j]).trace()) * inv_order;
        if (via_trace != h.b.form()(i, j)) {
          w = "(" + h.b.label(i) + "," + h.b.label(j) + ")_B = " + to_string(h.b.form()(i, j)) + " but tr/|N| = " +
              to_string(via_trace);
          break;
        }
      }
    report.add("trace_form_identity", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < db; ++i)
      if (Rational(r.boundary[i].trace()) * inv_order != h.b.linear_form()[i]) {
        w = "l_B(" + h.b.label(i) + ") != tr(nu)/|N|";
        break;
      }
    report.add("l_B_trace", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t alpha = 0; alpha < h.a.dim(); ++alpha)
      if (!(r.interior[alpha].transpose() == r.interior[h.a.star(alpha)])) {
        w = "V_" + h.a.label(alpha) + " transposed != V_" + h.a.label(h.a.star(alpha));
        break;
      }
    report.add("rho_star_transpose", w.empty(), w);
  }
  return report;
}

/// The Cardy-Frobenius conditions: phi star-compatible homomorphism into the centre, U^2 = K_A*,
/// phi(U) = K_B*, and (phi*(x), phi*(y))_A = tr W_{x,y} with W_{x,y}(z) = xzy.
inline Report verify_cardy_frobenius(const CardyFrobeniusAlgebra& h) {
  Report report;
  const auto& a = h.a;
  const auto& b = h.b;
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();

  report.add("A_commutative", is_commutative(a), "A is not commutative");

  {
    std::string w;
    for (std::size_t i = 0; i < da && w.empty(); ++i)
      for (std::size_t j = 0; j < da; ++j) {
        const auto lhs = h.apply_phi(a.multiply(a.basis(i), a.basis(j)));
        const auto rhs = b.multiply(h.apply_phi(a.basis(i)), h.apply_phi(a.basis(j)));
        if (lhs != rhs) {
          w = "phi(" + a.label(i) + a.label(j) + ") != phi(" + a.label(i) + ")phi(" + a.label(j) + ")";
          break;
        }
      }
    report.add("phi_homomorphism", w.empty(), w);
  }
  report.add("phi_unit", h.apply_phi(a.unit()) == b.unit(), "phi(1_A) = " + element_to_string(b, h.apply_phi(a.unit())));
  {
    std::string w;
    for (std::size_t i = 0; i < da; ++i)
      if (!is_central(b, h.apply_phi(a.basis(i)))) {
        w = "phi(" + a.label(i) + ") is not central in B";
        break;
      }
    report.add("phi_central", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < da; ++i)
      if (h.apply_phi(a.star(a.basis(i))) != b.star(h.apply_phi(a.basis(i)))) {
        w = "phi(" + a.label(i) + "*) != phi(" + a.label(i) + ")*";
        break;
      }
    report.add("phi_star", w.empty(), w);
  }
  {
    const auto u2 = a.multiply(h.u, h.u);
    const auto kt = a.twisted_casimir();
    report.add("U_squared_twisted_casimir", u2 == kt,
               "U^2 = " + element_to_string(a, u2) + " but K_A* = " + element_to_string(a, kt));
  }
  {
    const auto pu = h.apply_phi(h.u);
    const auto kt = b.twisted_casimir();
    report.add("phi_U_twisted_casimir", pu == kt,
               "phi(U) = " + element_to_string(b, pu) + " but K_B* = " + element_to_string(b, kt));
  }
  {
    std::string w;
    for (std::size_t alpha = 0; alpha < da; ++alpha) {
      const auto expected = Rational(static_cast<long long>(h.catalog.interior[a.star(alpha)].d_alpha));
      if (h.u[alpha] != expected) {
        w = "coefficient of " + a.label(alpha) + " in U is " + to_string(h.u[alpha]);
        break;
      }
    }
    report.add("U_coefficients_d_alpha", w.empty(), w);
  }
  {
    std::vector<AlgebraElement> dual;
    for (std::size_t i = 0; i < db; ++i) dual.push_back(h.apply_phi_dual(b.basis(i)));
    std::string w;
    for (std::size_t x = 0; x < db && w.empty(); ++x)
      for (std::size_t y = 0; y < db; ++y) {
        const Rational lhs = a.bilinear(dual[x], dual[y]);
        // tr W_{x,y} = sum_k [e_k] (e_x e_k e_y)
        Rational rhs = 0;
        for (std::size_t k = 0; k < db; ++k)
          for (const auto& [m, c] : b.product(x, k)) {
            const auto& p = b.product(m, y);
            auto it = std::lower_bound(p.begin(), p.end(), k, [](const auto& e, std::size_t v) { return e.first < v; });
            if (it != p.end() && it->first == k) rhs += c * it->second;
          }
        if (lhs != rhs) {
          w = "(phi*(" + b.label(x) + "), phi*(" + b.label(y) + "))_A = " + to_string(lhs) + " but tr W = " + to_string(rhs);
          break;
        }
      }
    report.add("cardy", w.empty(), w);
  }
  return report;
}

/// Every check on H: equipped axioms of A and B, catalog invariants, representations, Cardy conditions.
inline Report verify_all(const CardyFrobeniusAlgebra& h) {
  Report report;
  report.append(verify_equipped(h.a), "A.");
  report.append(verify_equipped(h.b), "B.");
  report.append(verify_catalog(h.catalog), "catalog.");
  report.append(verify_reps(h), "reps.");
  report.append(verify_cardy_frobenius(h), "cardy.");
  return report;
}

struct HeckeResult {
  std::size_t double_cosets = 0;
  EquippedFrobeniusAlgebra b;
  Report report;
};

/// B for G acting on G/S against brute-force double-coset convolution: orbit (xS, yS) <-> S x^-1 y S,
/// and 1_{D1} * 1_{D2} evaluated at d3 equals |S| times the structure constant.
inline HeckeResult hecke_check(const FiniteGroup& g, const Subgroup& s) {
  HeckeResult out;
  const NSet ns = coset_nset(g, s);
  const FieldCatalog catalog = build_catalog(ns);
  out.b = build_B(catalog);
  const auto reps = coset_representatives(g, s);

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> double_coset(g.order(), unset);
  std::vector<Element> dc_min;
  for (Element x = 0; x < g.order(); ++x) {
    if (double_coset[x] != unset) continue;
    for (auto s1 : s.elements)
      for (auto s2 : s.elements) double_coset[g.mul(g.mul(s1, x), s2)] = dc_min.size();
    dc_min.push_back(x);
  }
  out.double_cosets = dc_min.size();

  const std::size_t dim = catalog.boundary.size();
  std::vector<std::size_t> orbit_to_dc(dim, unset);
  std::string w;
  for (std::size_t beta = 0; beta < dim && w.empty(); ++beta)
    for (const auto& [x, y] : catalog.boundary[beta].orbit) {
      const auto d = double_coset[g.mul(g.inv(reps[x]), reps[y])];
      if (orbit_to_dc[beta] == unset) orbit_to_dc[beta] = d;
      if (orbit_to_dc[beta] != d) {
        w = "orbit " + catalog.boundary[beta].label + " meets two double cosets";
        break;
      }
    }
  if (w.empty()) {
    std::vector<bool> hit(dc_min.size(), false);
    for (auto d : orbit_to_dc) {
      if (hit[d]) w = "two orbits share a double coset";
      hit[d] = true;
    }
    if (dim != dc_min.size()) w = std::to_string(dim) + " orbits but " + std::to_string(dc_min.size()) + " double cosets";
  }
  out.report.add("orbit_double_coset_bijection", w.empty(), w);

  w.clear();
  if (out.report.all_passed()) {
    const Rational s_order(static_cast<long long>(s.order()));
    for (std::size_t i = 0; i < dim && w.empty(); ++i)
      for (std::size_t j = 0; j < dim && w.empty(); ++j) {
        AlgebraElement expected = zero_element(dim);
        for (std::size_t k = 0; k < dim; ++k) {
          const Element d3 = dc_min[orbit_to_dc[k]];
          std::size_t conv = 0;
          for (Element hh = 0; hh < g.order(); ++hh)
            if (double_coset[hh] == orbit_to_dc[i] && double_coset[g.mul(g.inv(hh), d3)] == orbit_to_dc[j]) ++conv;
          expected[k] = Rational(static_cast<long long>(conv)) / s_order;
        }
        const auto actual = out.b.multiply(out.b.basis(i), out.b.basis(j));
        if (actual != expected)
          w = out.b.label(i) + "*" + out.b.label(j) + " = " + element_to_string(out.b, actual) +
              " but convolution gives " + element_to_string(out.b, expected);
      }
  } else {
    w = "skipped: no orbit/double-coset bijection";
  }
  out.report.add("hecke_structure_constants", w.empty(), w);
  return out;
}

} // namespace cardyfrob
