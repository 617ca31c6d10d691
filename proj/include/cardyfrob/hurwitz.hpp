#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cardy.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "rational.hpp"

namespace cardyfrob {

/// A connected surface with marked points. Genus is stored doubled: for non-orientable surfaces
/// twice_genus is the number of crosscaps (1 = projective plane, 2 = Klein bottle).
struct SurfaceSpec {
  bool orientable = true;
  std::size_t twice_genus = 0;
  std::vector<std::string> interior;
  std::vector<std::vector<std::string>> boundary;  // one cyclic label sequence per contour

  Rational genus() const { return Rational(static_cast<long long>(twice_genus), 2); }
};

struct HurwitzResult {
  Rational value;
  std::vector<std::string> trace;
};

/// Field indices of a validated spec.
struct ResolvedSurface {
  std::vector<std::size_t> interior;
  std::vector<std::vector<std::size_t>> boundary;
};

inline ResolvedSurface resolve(const FieldCatalog& catalog, const SurfaceSpec& spec) {
  if (spec.orientable && spec.twice_genus % 2 != 0)
    throw InputError("orientable surface needs an integer genus, got " + to_string(spec.genus()));
  if (!spec.orientable && spec.twice_genus == 0)
    throw InputError("non-orientable surface needs genus at least 1/2");
  ResolvedSurface r;
  for (const auto& label : spec.interior) {
    const auto i = catalog.interior_index(label);
    if (!i) throw InputError("unknown interior field '" + label + "'");
    r.interior.push_back(*i);
  }
  for (std::size_t c = 0; c < spec.boundary.size(); ++c) {
    if (spec.boundary[c].empty()) throw InputError("boundary contour " + std::to_string(c) + " has no marked point");
    std::vector<std::size_t> contour;
    for (const auto& label : spec.boundary[c]) {
      const auto i = catalog.boundary_index(label);
      if (!i) throw InputError("unknown boundary field '" + label + "' on contour " + std::to_string(c));
      contour.push_back(*i);
    }
    r.boundary.push_back(std::move(contour));
  }
  return r;
}

/// Interior part: E_{a_1} ... E_{a_m} K_A^g, or with U^{2g} for non-orientable surfaces.
inline AlgebraElement interior_product(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec, const ResolvedSurface& r) {
  AlgebraElement acc = h.a.unit();
  for (auto i : r.interior) acc = h.a.multiply(acc, h.a.basis(i));
  if (spec.orientable) {
    const auto k = h.a.casimir();
    for (std::size_t i = 0; i < spec.twice_genus / 2; ++i) acc = h.a.multiply(acc, k);
  } else {
    for (std::size_t i = 0; i < spec.twice_genus; ++i) acc = h.a.multiply(acc, h.u);
  }
  return acc;
}

inline AlgebraElement contour_product(const CardyFrobeniusAlgebra& h, const std::vector<std::size_t>& contour) {
  AlgebraElement acc = h.b.unit();
  for (auto i : contour) acc = h.b.multiply(acc, h.b.basis(i));
  return acc;
}

/// Hurwitz number of a connected surface.
///   s = 0:  l_A(a)
///   s >= 1: l_B(phi(a) P_1 K(P_2) ... K(P_s)),  K(P) = sum_beta |Aut beta| beta P beta*
/// where a is the interior product and P_i the ordered product of contour i. Each K_B between
/// consecutive contours enters as the Casimir tensor whose two legs enclose the next contour.
inline HurwitzResult evaluate(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec, bool keep_trace = false) {
  const auto r = resolve(h.catalog, spec);
  HurwitzResult out;
  const auto a = interior_product(h, spec, r);
  if (keep_trace) out.trace.push_back("A: " + element_to_string(h.a, a));
  if (r.boundary.empty()) {
    out.value = h.a.apply_form(a);
    return out;
  }
  AlgebraElement x = h.b.multiply(h.apply_phi(a), contour_product(h, r.boundary.front()));
  if (keep_trace) out.trace.push_back("B: " + element_to_string(h.b, x));
  for (std::size_t c = 1; c < r.boundary.size(); ++c) {
    x = h.b.multiply(x, h.b.casimir_sandwich(contour_product(h, r.boundary[c])));
    if (keep_trace) out.trace.push_back("B: " + element_to_string(h.b, x));
  }
  out.value = h.b.apply_form(x);
  return out;
}

/// Multiplicativity over disjoint unions.
inline Rational evaluate_disjoint(const CardyFrobeniusAlgebra& h, const std::vector<SurfaceSpec>& components) {
  Rational acc = 1;
  for (const auto& s : components) acc *= evaluate(h, s).value;
  return acc;
}

struct IdentityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;

  bool holds() const { return lhs == rhs; }
};

/// Cutting along a co-orientable contour: lowers the genus by one and adds a pair alpha, alpha*,
/// summed with weight |Aut alpha|.
inline IdentityCheck cut_check_handle(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec) {
  if (!spec.orientable || spec.twice_genus < 2) throw InputError("handle cut needs an orientable surface of genus >= 1");
  IdentityCheck c{"handle_cut", evaluate(h, spec).value, 0};
  for (const auto& f : h.catalog.interior) {
    SurfaceSpec cut = spec;
    cut.twice_genus -= 2;
    cut.interior.push_back(f.label);
    cut.interior.push_back(h.catalog.interior[f.star].label);
    c.rhs += Rational(static_cast<long long>(f.aut_order)) * evaluate(h, cut).value;
  }
  return c;
}

/// Cutting along a non-co-orientable contour: removes one crosscap and adds alpha with weight d^alpha.
/// Zero remaining crosscaps means an orientable sphere-type remainder.
inline IdentityCheck cut_check_crosscap(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec) {
  if (spec.orientable) throw InputError("crosscap cut needs a non-orientable surface");
  IdentityCheck c{"crosscap_cut", evaluate(h, spec).value, 0};
  for (const auto& f : h.catalog.interior) {
    if (f.d_alpha == 0) continue;
    SurfaceSpec cut = spec;
    cut.twice_genus -= 1;
    if (cut.twice_genus == 0) cut.orientable = true;
    cut.interior.push_back(f.label);
    c.rhs += Rational(static_cast<long long>(f.d_alpha)) * evaluate(h, cut).value;
  }
  return c;
}

/// Cutting along a segment joining the first two contours: they merge into one contour
/// P_1, beta, P_2, beta*, summed with weight |Aut beta|.
inline IdentityCheck cut_check_boundary(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec) {
  if (spec.boundary.size() < 2) throw InputError("segment cut needs at least two boundary contours");
  IdentityCheck c{"segment_cut", evaluate(h, spec).value, 0};
  for (const auto& f : h.catalog.boundary) {
    SurfaceSpec cut = spec;
    std::vector<std::string> merged = spec.boundary[0];
    merged.push_back(f.label);
    merged.insert(merged.end(), spec.boundary[1].begin(), spec.boundary[1].end());
    merged.push_back(h.catalog.boundary[f.star].label);
    cut.boundary.erase(cut.boundary.begin(), cut.boundary.begin() + 2);
    cut.boundary.insert(cut.boundary.begin(), std::move(merged));
    c.rhs += Rational(static_cast<long long>(f.aut_order)) * evaluate(h, cut).value;
  }
  return c;
}

/// Every local orientation flipped: interior fields starred, each contour reversed with starred labels.
inline SurfaceSpec orientation_reversed(const FieldCatalog& catalog, const SurfaceSpec& spec) {
  const auto r = resolve(catalog, spec);
  SurfaceSpec out = spec;
  for (std::size_t i = 0; i < r.interior.size(); ++i) out.interior[i] = catalog.interior[catalog.interior[r.interior[i]].star].label;
  for (std::size_t c = 0; c < r.boundary.size(); ++c) {
    auto& contour = out.boundary[c];
    for (std::size_t i = 0; i < contour.size(); ++i)
      contour[i] = catalog.boundary[catalog.boundary[r.boundary[c][i]].star].label;
    std::reverse(contour.begin(), contour.end());
  }
  return out;
}

inline SurfaceSpec rotate_contour(SurfaceSpec spec, std::size_t contour, std::size_t by) {
  auto& seq = spec.boundary.at(contour);
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(by % seq.size()), seq.end());
  return spec;
}

/// Inserting 1_B = sum of diagonal fields at `position` of a contour, as a sum of specs.
inline Rational evaluate_with_boundary_unit(const CardyFrobeniusAlgebra& h, const SurfaceSpec& spec, std::size_t contour,
                                            std::size_t position) {
  Rational acc = 0;
  for (const auto& f : h.catalog.boundary) {
    if (!f.diagonal()) continue;
    SurfaceSpec s = spec;
    auto& seq = s.boundary.at(contour);
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(std::min(position, seq.size())), f.label);
    acc += evaluate(h, s).value;
  }
  return acc;
}

} // namespace cardyfrob
