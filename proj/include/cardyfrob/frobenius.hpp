#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace cardyfrob {

/// Coefficients in the basis of the owning algebra.
using AlgebraElement = std::vector<Rational>;

/// Sorted (basis index, nonzero coefficient) pairs.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

inline AlgebraElement zero_element(std::size_t dim) { return AlgebraElement(dim, Rational(0)); }

inline AlgebraElement basis_element(std::size_t dim, std::size_t i) {
  auto x = zero_element(dim);
  x.at(i) = 1;
  return x;
}

inline bool is_zero(const AlgebraElement& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.is_zero(); });
}

inline AlgebraElement& add_scaled(AlgebraElement& acc, const Rational& s, const AlgebraElement& x) {
  if (s.is_zero()) return acc;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!x[i].is_zero()) acc[i] += s * x[i];
  return acc;
}

inline AlgebraElement scaled(const Rational& s, AlgebraElement x) {
  for (auto& c : x) c *= s;
  return x;
}

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return add_scaled(a, Rational(1), b); }
inline AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return add_scaled(a, Rational(-1), b); }

namespace detail {

// Dense accumulator that remembers which slots it touched, so it can be cleared in O(touched).
class Scratch {
public:
  explicit Scratch(std::size_t n) : values_(n, Rational(0)), mark_(n, false) {}

  void add(std::uint32_t k, const Rational& v) {
    if (!mark_[k]) {
      mark_[k] = true;
      touched_.push_back(k);
    }
    values_[k] += v;
  }

  SparseVector take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    for (auto k : touched_) {
      if (!values_[k].is_zero()) out.emplace_back(k, values_[k]);
      values_[k] = 0;
      mark_[k] = false;
    }
    touched_.clear();
    return out;
  }

private:
  std::vector<Rational> values_;
  std::vector<bool> mark_;
  std::vector<std::uint32_t> touched_;
};

inline std::string sparse_to_string(const SparseVector& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (out.empty()) out += to_string(c);
    else out += c < 0 ? " - " + to_string(Rational(-c)) : " + " + to_string(c);
    out += "*" + labels[k];
  }
  return out;
}

} // namespace detail

/// Finite-dimensional unital algebra over Q with structure constants, a linear form whose
/// bilinear form l(xy) is meant to be nondegenerate, and an involution permuting the basis.
class EquippedFrobeniusAlgebra {
public:
  EquippedFrobeniusAlgebra() = default;

  /// products[i * dim + j] holds e_i e_j; involution[i] is the index of e_i*.
  EquippedFrobeniusAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products, AlgebraElement unit,
                           std::vector<Rational> linear_form, std::vector<std::size_t> involution)
      : labels_(std::move(labels)),
        products_(std::move(products)),
        unit_(std::move(unit)),
        linear_form_(std::move(linear_form)),
        involution_(std::move(involution)) {
    const std::size_t n = labels_.size();
    if (products_.size() != n * n || unit_.size() != n || linear_form_.size() != n || involution_.size() != n)
      throw LogicError("algebra data has inconsistent dimensions");
    for (auto s : involution_)
      if (s >= n) throw LogicError("involution index out of range");
    for (auto& p : products_) {
      std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      p.erase(std::remove_if(p.begin(), p.end(), [](const auto& e) { return e.second.is_zero(); }), p.end());
    }
    form_ = Matrix<Rational>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) form_(i, j) = apply_form(products_[i * n + j]);
    inverse_form_ = inverse(form_);
    if (inverse_form_) {
      inverse_form_entries_.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!(*inverse_form_)(i, j).is_zero()) inverse_form_entries_[i].emplace_back(j, (*inverse_form_)(i, j));
    }
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  std::size_t require_index(const std::string& label) const {
    if (auto i = index(label)) return *i;
    throw InputError("label '" + label + "' is not in the basis");
  }

  AlgebraElement basis(std::size_t i) const { return basis_element(dim(), i); }
  AlgebraElement basis(const std::string& label) const { return basis(require_index(label)); }
  AlgebraElement zero() const { return zero_element(dim()); }

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const AlgebraElement& unit() const { return unit_; }
  const std::vector<Rational>& linear_form() const { return linear_form_; }
  const std::vector<std::size_t>& involution() const { return involution_; }
  std::size_t star(std::size_t i) const { return involution_[i]; }

  const Matrix<Rational>& form() const { return form_; }
  bool nondegenerate() const { return inverse_form_.has_value(); }

  const Matrix<Rational>& inverse_form() const {
    if (!inverse_form_) throw LogicError("bilinear form is degenerate");
    return *inverse_form_;
  }

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    check(x);
    check(y);
    const std::size_t n = dim();
    AlgebraElement out = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const auto& p = products_[i * n + j];
        if (p.empty()) continue;
        const Rational xy = x[i] * y[j];
        for (const auto& [k, c] : p) out[k] += xy * c;
      }
    }
    return out;
  }

  /// Left-to-right product of several elements; the empty product is the unit.
  AlgebraElement multiply_all(const std::vector<AlgebraElement>& factors) const {
    AlgebraElement acc = unit_;
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
  }

  AlgebraElement power(const AlgebraElement& x, std::size_t k) const {
    AlgebraElement acc = unit_;
    for (std::size_t i = 0; i < k; ++i) acc = multiply(acc, x);
    return acc;
  }

  Rational apply_form(const AlgebraElement& x) const {
    check(x);
    Rational acc = 0;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) acc += x[i] * linear_form_[i];
    return acc;
  }

  Rational apply_form(const SparseVector& x) const {
    Rational acc = 0;
    for (const auto& [k, c] : x) acc += c * linear_form_[k];
    return acc;
  }

  /// (x, y) = l(xy), evaluated through the cached form matrix.
  Rational bilinear(const AlgebraElement& x, const AlgebraElement& y) const {
    check(x);
    check(y);
    Rational acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (!y[j].is_zero() && !form_(i, j).is_zero()) acc += x[i] * y[j] * form_(i, j);
    }
    return acc;
  }

  AlgebraElement star(const AlgebraElement& x) const {
    check(x);
    AlgebraElement out = zero();
    for (std::size_t i = 0; i < dim(); ++i) out[involution_[i]] = x[i];
    return out;
  }

  /// K = sum F^{ij} e_i e_j with F^{ij} the inverse of the form matrix.
  AlgebraElement casimir() const { return contract(inverse_form()); }

  /// Same contraction with the inverse of the twisted form F*_{ij} = (e_i, e_j*).
  AlgebraElement twisted_casimir() const {
    Matrix<Rational> twisted(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) twisted(i, j) = form_(i, involution_[j]);
    auto inv = inverse(twisted);
    if (!inv) throw LogicError("twisted bilinear form is degenerate");
    return contract(*inv);
  }

  /// sum F^{ij} e_i x e_j: the Casimir tensor with its legs on either side of x.
  AlgebraElement casimir_sandwich(const AlgebraElement& x) const {
    inverse_form();
    AlgebraElement out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (inverse_form_entries_[i].empty()) continue;
      const AlgebraElement left = multiply(basis(i), x);
      if (is_zero(left)) continue;
      for (const auto& [j, f] : inverse_form_entries_[i]) add_scaled(out, f, multiply(left, basis(j)));
    }
    return out;
  }

  /// Coefficient of e_k in x, recovered as l(x e^k) with e^k = sum_j F^{jk} e_j.
  Rational coefficient_via_form(const AlgebraElement& x, std::size_t k) const {
    const auto& inv = inverse_form();
    AlgebraElement dual = zero();
    for (std::size_t j = 0; j < dim(); ++j) dual[j] = inv(j, k);
    return bilinear(x, dual);
  }

private:
  void check(const AlgebraElement& x) const {
    if (x.size() != dim()) throw InputError("element does not belong to this algebra");
  }

  AlgebraElement contract(const Matrix<Rational>& coeffs) const {
    const std::size_t n = dim();
    AlgebraElement out = zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& f = coeffs(i, j);
        if (f.is_zero()) continue;
        for (const auto& [k, c] : products_[i * n + j]) out[k] += f * c;
      }
    return out;
  }

  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  AlgebraElement unit_;
  std::vector<Rational> linear_form_;
  std::vector<std::size_t> involution_;
  Matrix<Rational> form_;
  std::optional<Matrix<Rational>> inverse_form_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> inverse_form_entries_;
};

inline std::string element_to_string(const EquippedFrobeniusAlgebra& alg, const AlgebraElement& x) {
  SparseVector v;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) v.emplace_back(static_cast<std::uint32_t>(i), x[i]);
  return detail::sparse_to_string(v, alg.labels());
}

inline bool is_commutative(const EquippedFrobeniusAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j)
      if (alg.product(i, j) != alg.product(j, i)) return false;
  return true;
}

/// Checks every equipped-Frobenius axiom on basis elements; each entry carries a witness on failure.
inline Report verify_equipped(const EquippedFrobeniusAlgebra& alg) {
  Report report;
  const std::size_t n = alg.dim();
  const auto& labels = alg.labels();
  const auto name = [&](std::size_t i) { return labels[i]; };

  {
    detail::Scratch left(n), right(n);
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j) {
        const auto& ij = alg.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& [l, c] : ij)
            for (const auto& [m, d] : alg.product(l, k)) left.add(m, c * d);
          for (const auto& [l, c] : alg.product(j, k))
            for (const auto& [m, d] : alg.product(i, l)) right.add(m, c * d);
          auto lhs = left.take();
          auto rhs = right.take();
          if (lhs != rhs) {
            witness = "(" + name(i) + "*" + name(j) + ")*" + name(k) + " = " + detail::sparse_to_string(lhs, labels) +
                      " but " + name(i) + "*(" + name(j) + "*" + name(k) + ") = " + detail::sparse_to_string(rhs, labels);
            break;
          }
        }
      }
    report.add("associativity", witness.empty(), witness);
  }

  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      const auto e = alg.basis(i);
      if (alg.multiply(alg.unit(), e) != e) witness = "1*" + name(i) + " != " + name(i);
      else if (alg.multiply(e, alg.unit()) != e) witness = name(i) + "*1 != " + name(i);
    }
    report.add("unit", witness.empty(), witness);
  }

  {
    std::string witness;
    const auto& f = alg.form();
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (f(i, j) != f(j, i)) {
          witness = "(" + name(i) + "," + name(j) + ") = " + to_string(f(i, j)) + " but (" + name(j) + "," + name(i) +
                    ") = " + to_string(f(j, i));
          break;
        }
    report.add("form_symmetric", witness.empty(), witness);
  }

  report.add("form_nondegenerate", alg.nondegenerate(), "form matrix is singular");

  {
    // (e_i e_j, e_k) = (e_i, e_j e_k)
    std::string witness;
    const auto& f = alg.form();
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Rational lhs = 0, rhs = 0;
          for (const auto& [l, c] : alg.product(i, j)) lhs += c * f(l, k);
          for (const auto& [l, c] : alg.product(j, k)) rhs += c * f(i, l);
          if (lhs != rhs) {
            witness = "(" + name(i) + name(j) + "," + name(k) + ") = " + to_string(lhs) + " but (" + name(i) + "," +
                      name(j) + name(k) + ") = " + to_string(rhs);
            break;
          }
        }
    report.add("form_invariant", witness.empty(), witness);
  }

  {
    std::string witness;
    for (std::size_t i = 0; i < n; ++i)
      if (alg.star(alg.star(i)) != i) {
        witness = "(" + name(i) + "*)* = " + name(alg.star(alg.star(i)));
        break;
      }
    report.add("involution_involutive", witness.empty(), witness);
  }

  {
    // (e_i e_j)* = e_j* e_i*
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        SparseVector starred;
        for (const auto& [k, c] : alg.product(i, j)) starred.emplace_back(static_cast<std::uint32_t>(alg.star(k)), c);
        std::sort(starred.begin(), starred.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        const auto& expected = alg.product(alg.star(j), alg.star(i));
        if (starred != expected) {
          witness = "(" + name(i) + "*" + name(j) + ")* = " + detail::sparse_to_string(starred, labels) + " but " +
                    name(alg.star(j)) + "*" + name(alg.star(i)) + " = " + detail::sparse_to_string(expected, labels);
          break;
        }
      }
    report.add("involution_anti_automorphism", witness.empty(), witness);
  }

  {
    std::string witness;
    for (std::size_t i = 0; i < n; ++i)
      if (alg.linear_form()[i] != alg.linear_form()[alg.star(i)]) {
        witness = "l(" + name(i) + ") = " + to_string(alg.linear_form()[i]) + " but l(" + name(i) +
                  "*) = " + to_string(alg.linear_form()[alg.star(i)]);
        break;
      }
    report.add("linear_form_star_invariant", witness.empty(), witness);
  }
  return report;
}

/// Gram matrix tr(L_{e_i} L_{e_j}) of the regular representation.
inline Matrix<Rational> trace_form(const EquippedFrobeniusAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Rational> tr(n, Rational(0));  // tr(L_{e_l}) = sum_k c_{lk}^k
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [m, c] : alg.product(l, k))
        if (m == k) tr[l] += c;
  Matrix<Rational> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [l, c] : alg.product(i, j)) g(i, j) += c * tr[l];
  return g;
}

/// Over a field of characteristic zero, a nondegenerate trace form means semisimple.
inline bool is_semisimple(const EquippedFrobeniusAlgebra& alg) { return rank(trace_form(alg)) == alg.dim(); }

/// dim of {z : z e_i = e_i z for all i}, from the rank of the commutator system.
inline std::size_t center_dimension(const EquippedFrobeniusAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix<Rational> system(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [m, c] : alg.product(k, i)) system(i * n + m, k) += c;
      for (const auto& [m, c] : alg.product(i, k)) system(i * n + m, k) -= c;
    }
  return n - rank(system);
}

inline bool is_central(const EquippedFrobeniusAlgebra& alg, const AlgebraElement& z) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const auto e = alg.basis(i);
    if (alg.multiply(z, e) != alg.multiply(e, z)) return false;
  }
  return true;
}

/// The same algebra in the basis f_i = e_{order[i]}.
inline EquippedFrobeniusAlgebra permute_basis(const EquippedFrobeniusAlgebra& alg, const std::vector<std::size_t>& order) {
  const std::size_t n = alg.dim();
  if (order.size() != n) throw InputError("basis permutation has wrong length");
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) throw InputError("not a permutation of the basis");
    position[order[i]] = i;
  }
  std::vector<std::string> labels(n);
  std::vector<SparseVector> products(n * n);
  AlgebraElement unit(n);
  std::vector<Rational> form(n);
  std::vector<std::size_t> involution(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = alg.label(order[i]);
    unit[i] = alg.unit()[order[i]];
    form[i] = alg.linear_form()[order[i]];
    involution[i] = position[alg.star(order[i])];
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : alg.product(order[i], order[j]))
        products[i * n + j].emplace_back(static_cast<std::uint32_t>(position[k]), c);
  }
  return EquippedFrobeniusAlgebra(std::move(labels), std::move(products), std::move(unit), std::move(form),
                                  std::move(involution));
}

} // namespace cardyfrob
