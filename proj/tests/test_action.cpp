#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cardyfrob;
using fixtures::alternating5;
using fixtures::generated;
using fixtures::symmetric;

namespace {

const std::vector<std::string> kSuite = {"z2_trivial", "z3_trivial", "s3_trivial", "s3_transposition",
                                         "s4_trivial", "s4_double_transposition", "a5_z2"};

std::size_t classes_of_size(const FieldCatalog& c, std::size_t size) {
  std::size_t n = 0;
  for (const auto& f : c.interior) n += f.cls.size() == size;
  return n;
}

} // namespace

TEST(Action, ConjugationTablesAreActions) {
  for (const auto& name : kSuite) {
    const auto p = fixtures::load_pair(name);
    EXPECT_TRUE(is_action(p.nset)) << name;
    EXPECT_EQ(p.nset.size(), p.overgroups.size()) << name;
    EXPECT_EQ(p.nset.group.order() * p.k.order(), p.normalizer.order()) << name;
  }
}

TEST(Action, Z2TrivialActsTriviallyOnTwoPoints) {
  const auto p = fixtures::load_pair("z2_trivial");
  ASSERT_EQ(p.nset.size(), 2u);
  ASSERT_EQ(p.nset.group.order(), 2u);
  for (Element n = 0; n < 2; ++n) EXPECT_EQ(p.nset.fixed_points(n), 2u);
}

TEST(Action, S3TranspositionSubgroupsFormOneOrbit) {
  const auto p = fixtures::load_pair("s3_trivial");
  ASSERT_EQ(p.nset.size(), 6u);
  std::set<Point> orbit;
  Point first = 0;
  for (Point x = 0; x < p.nset.size(); ++x)
    if (p.overgroups[x].order() == 2) first = x;
  for (Element n = 0; n < p.nset.group.order(); ++n) orbit.insert(p.nset.act(n, first));
  EXPECT_EQ(orbit.size(), 3u);
  for (auto x : orbit) EXPECT_EQ(p.overgroups[x].order(), 2u);
}

// The nontrivial element of N swaps the two dihedral subgroups of order 10 and also the two
// copies of S3 through K; the remaining four overgroups are fixed.
TEST(Action, A5DoubleTranspositionAction) {
  const auto p = fixtures::load_pair("a5_z2");
  ASSERT_EQ(p.nset.group.order(), 2u);
  ASSERT_EQ(p.nset.size(), 8u);
  EXPECT_EQ(p.nset.fixed_points(1), 4u);
  std::multiset<std::size_t> moved;
  for (Point x = 0; x < p.nset.size(); ++x) {
    const Point y = p.nset.act(1, x);
    if (y != x) {
      EXPECT_EQ(p.overgroups[x].order(), p.overgroups[y].order());
      moved.insert(p.overgroups[x].order());
    }
  }
  EXPECT_EQ(moved, (std::multiset<std::size_t>{6, 6, 10, 10}));
}

TEST(Action, NotCoreFreeIsReported) {
  const auto p = fixtures::load_pair("z2_z2");
  EXPECT_FALSE(p.core_free);
  EXPECT_EQ(p.nset.group.order(), 1u);
  EXPECT_EQ(p.nset.size(), 1u);
}

TEST(Action, CosetActionIsTransitive) {
  const auto g = symmetric(4);
  const auto s = generated(g, {{1, 0, 2, 3}});
  const auto ns = coset_nset(g, s);
  EXPECT_TRUE(is_action(ns));
  EXPECT_EQ(ns.size(), 12u);
  std::set<Point> orbit;
  for (Element h = 0; h < g.order(); ++h) orbit.insert(ns.act(h, 0));
  EXPECT_EQ(orbit.size(), 12u);
}

TEST(Catalog, Z2Trivial) {
  const auto c = build_catalog(fixtures::load_pair("z2_trivial").nset);
  ASSERT_EQ(c.interior.size(), 2u);
  ASSERT_EQ(c.boundary.size(), 4u);
  for (const auto& f : c.interior) EXPECT_EQ(f.aut_order, 2u);
  for (const auto& f : c.boundary) EXPECT_EQ(f.aut_order, 2u);
  EXPECT_EQ(c.interior[0].d_alpha, 2u);
  EXPECT_EQ(c.interior[1].d_alpha, 0u);
  // b0 = (0,0), b1 = (0,1), b2 = (1,0), b3 = (1,1)
  EXPECT_EQ(c.boundary[1].representative(), PointPair(0, 1));
  EXPECT_EQ(c.boundary[2].representative(), PointPair(1, 0));
  EXPECT_EQ(c.boundary[1].star, 2u);
  EXPECT_EQ(c.boundary[0].star, 0u);
}

TEST(Catalog, Z3StarsAndSquareRoots) {
  const auto c = build_catalog(fixtures::load_pair("z3_trivial").nset);
  ASSERT_EQ(c.interior.size(), 3u);
  EXPECT_EQ(c.interior[0].star, 0u);
  EXPECT_NE(c.interior[1].star, 1u);
  EXPECT_EQ(c.interior[c.interior[1].star].star, 1u);
  for (const auto& f : c.interior) EXPECT_EQ(f.d_alpha, 1u);
}

TEST(Catalog, A5Dimensions) {
  const auto c = build_catalog(fixtures::load_pair("a5_z2").nset);
  EXPECT_EQ(c.interior.size(), 2u);
  EXPECT_EQ(c.boundary.size(), 40u);
  EXPECT_EQ(burnside_pair_orbit_count(c.nset), Rational(40));
}

TEST(Catalog, StructuralInvariantsOnSuite) {
  for (const auto& name : kSuite) {
    const auto c = build_catalog(fixtures::load_pair(name).nset);
    const auto& n = c.group();
    const auto npts = c.nset.size();
    EXPECT_EQ(Rational(static_cast<long long>(c.boundary.size())), burnside_pair_orbit_count(c.nset)) << name;

    std::size_t covered = 0;
    for (std::size_t b = 0; b < c.boundary.size(); ++b) {
      const auto& f = c.boundary[b];
      covered += f.orbit.size();
      EXPECT_EQ(f.aut_order * f.orbit.size(), n.order()) << name;
      EXPECT_EQ(c.boundary[f.star].star, b) << name;
      EXPECT_EQ(c.boundary[f.star].aut_order, f.aut_order) << name;
      EXPECT_EQ(f.label, "b" + std::to_string(b));
      for (const auto& [x, y] : f.orbit) {
        EXPECT_EQ(c.boundary_field(x, y), b);
        EXPECT_EQ(c.boundary_field(y, x), f.star);
      }
      // the representative is the lexicographically least pair of its orbit
      EXPECT_TRUE(std::is_sorted(f.orbit.begin(), f.orbit.end()));
      if (b) {
        EXPECT_LT(c.boundary[b - 1].representative(), f.representative());
      }
    }
    EXPECT_EQ(covered, npts * npts) << name;

    std::size_t weighted = 0;
    for (std::size_t i = 0; i < c.interior.size(); ++i) {
      const auto& f = c.interior[i];
      EXPECT_EQ(c.interior[f.star].star, i) << name;
      EXPECT_EQ(c.interior[f.star].aut_order, f.aut_order) << name;
      // d^alpha is the same for every member of the class, and for alpha*
      for (auto a : f.cls.members) EXPECT_EQ(count_square_roots_of_inverse(n, a), f.d_alpha) << name;
      EXPECT_EQ(c.interior[f.star].d_alpha, f.d_alpha) << name;
      weighted += c.interior[f.star].d_alpha * f.cls.size();
    }
    EXPECT_EQ(weighted, n.order()) << name;
  }
}

TEST(Catalog, S3TrivialBoundaryCount) {
  const auto c = build_catalog(fixtures::load_pair("s3_trivial").nset);
  EXPECT_EQ(c.boundary.size(), 17u);
  EXPECT_EQ(classes_of_size(c, 2), 1u);
  EXPECT_EQ(classes_of_size(c, 3), 1u);
  EXPECT_EQ(c.interior.size(), 3u);
}
