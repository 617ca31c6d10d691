#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cardyfrob;
using fixtures::q;

namespace {

// Q[Z_n] with l(g) = [g = e] / n.
EquippedFrobeniusAlgebra cyclic_group_algebra(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<SparseVector> products(n * n);
  std::vector<Rational> form(n, 0);
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("g" + std::to_string(i));
    inv[i] = (n - i) % n;
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = {{static_cast<std::uint32_t>((i + j) % n), Rational(1)}};
  }
  form[0] = Rational(1, static_cast<long long>(n));
  return {labels, products, basis_element(n, 0), form, inv};
}

// 2x2 matrix units E_ij, basis order 11, 12, 21, 22; l = trace, involution = transpose.
EquippedFrobeniusAlgebra matrix_units() {
  const std::vector<std::string> labels{"e11", "e12", "e21", "e22"};
  auto idx = [](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(2 * i + j); };
  std::vector<SparseVector> products(16);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k) products[idx(i, j) * 4 + idx(k, l)] = {{idx(i, l), Rational(1)}};
  AlgebraElement unit = zero_element(4);
  unit[0] = unit[3] = 1;
  return {labels, products, unit, {q(1), q(0), q(0), q(1)}, {0, 2, 1, 3}};
}

} // namespace

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(q(4, 6)), "2/3");
  EXPECT_EQ(to_string(q(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(q(6, 3)), "2");
  EXPECT_EQ(to_string(q(0, 5)), "0");
  EXPECT_EQ(parse_rational("3/6"), q(1, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_rational("1/"), InputError);
}

TEST(Matrix, RankAndInverse) {
  Matrix<Rational> m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = 1;
  EXPECT_EQ(rank(m), 2u);
  EXPECT_FALSE(inverse(m).has_value());
  EXPECT_EQ(rank(Matrix<Rational>(2, 3)), 0u);
}

TEST(Matrix, RandomInversesAreExact) {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(entry(rng), 1 + (entry(rng) + 9) % 4);
    const auto inv = inverse(m);
    if (rank(m) < n) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, Matrix<Rational>::identity(n));
    EXPECT_EQ(*inv * m, Matrix<Rational>::identity(n));
  }
}

TEST(Frobenius, GroupAlgebraPassesEveryAxiom) {
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const auto alg = cyclic_group_algebra(n);
    const auto report = verify_equipped(alg);
    for (const auto& r : report.results()) EXPECT_TRUE(r.passed) << n << " " << r.axiom << " " << r.witness;
    EXPECT_TRUE(is_commutative(alg));
    EXPECT_TRUE(is_semisimple(alg));
    EXPECT_EQ(center_dimension(alg), n);
  }
}

TEST(Frobenius, CasimirOfGroupAlgebra) {
  // F(g_i, g_j) = [i + j = 0] / 3, so the Casimir is 3 sum_g g g^-1 = 9 e
  const auto alg = cyclic_group_algebra(3);
  EXPECT_EQ(alg.casimir(), scaled(q(9), alg.basis(0)));
  // twisted: 3 sum_g g g = 3 (e + g2 + g1)
  AlgebraElement expected{q(3), q(3), q(3)};
  EXPECT_EQ(alg.twisted_casimir(), expected);
  EXPECT_EQ(alg.casimir_sandwich(alg.unit()), alg.casimir());
}

TEST(Frobenius, MatrixUnits) {
  const auto m = matrix_units();
  const auto report = verify_equipped(m);
  EXPECT_TRUE(report.all_passed());
  EXPECT_FALSE(is_commutative(m));
  EXPECT_EQ(center_dimension(m), 1u);
  EXPECT_TRUE(is_semisimple(m));
  EXPECT_TRUE(is_central(m, m.unit()));
  EXPECT_FALSE(is_central(m, m.basis(0)));
  // the Casimir of (M_2, tr) is 2 * identity; the sandwich of x is tr(x) * identity
  EXPECT_EQ(m.casimir(), scaled(q(2), m.unit()));
  EXPECT_EQ(m.casimir_sandwich(m.basis("e11")), m.unit());
  EXPECT_EQ(m.casimir_sandwich(m.basis("e12")), m.zero());
}

TEST(Frobenius, CorruptedStructureConstantsAreCaught) {
  const auto good = cyclic_group_algebra(3);
  std::vector<SparseVector> products;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) products.push_back(good.product(i, j));
  products[1 * 3 + 1] = {{2, q(2)}};  // g1 g1 = 2 g2
  const EquippedFrobeniusAlgebra bad(good.labels(), products, good.unit(), good.linear_form(), good.involution());
  const auto report = verify_equipped(bad);
  EXPECT_FALSE(report.all_passed());
  EXPECT_FALSE(report.passed("associativity"));
  EXPECT_FALSE(report.find("associativity")->witness.empty());
}

TEST(Frobenius, DegenerateFormIsReported) {
  const auto good = cyclic_group_algebra(2);
  const EquippedFrobeniusAlgebra bad(good.labels(), {good.product(0, 0), good.product(0, 1), good.product(1, 0), good.product(1, 1)},
                                     good.unit(), {q(0), q(0)}, good.involution());
  EXPECT_FALSE(bad.nondegenerate());
  EXPECT_FALSE(verify_equipped(bad).passed("form_nondegenerate"));
  EXPECT_THROW(bad.casimir(), LogicError);
}

TEST(Frobenius, CasimirsDoNotDependOnBasisOrder) {
  const auto h = fixtures::load_cardy("s3_trivial");
  const std::size_t n = h.b.dim();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = (7 * i + 3) % n;  // 7 is a unit mod 17
  const auto p = permute_basis(h.b, order);
  const auto k = h.b.casimir();
  const auto kp = p.casimir();
  const auto tk = h.b.twisted_casimir();
  const auto tkp = p.twisted_casimir();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(kp[i], k[order[i]]);
    EXPECT_EQ(tkp[i], tk[order[i]]);
  }
  EXPECT_TRUE(verify_equipped(p).all_passed());
}

TEST(Frobenius, ElementFormatting) {
  const auto alg = cyclic_group_algebra(3);
  AlgebraElement x{q(1, 2), q(0), q(-3)};
  EXPECT_EQ(element_to_string(alg, x), "1/2*g0 - 3*g2");
  EXPECT_EQ(element_to_string(alg, alg.zero()), "0");
}
