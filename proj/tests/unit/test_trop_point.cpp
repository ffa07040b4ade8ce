#include <gtest/gtest.h>

#include <set>

#include "support/generators.hpp"
#include "tropcvx/errors.hpp"
#include "tropcvx/trop_point.hpp"

namespace tropcvx {
namespace {

TropPoint P(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return TropPoint::canonicalize(v);
}

ElementSet S(std::initializer_list<int> labels) { return ElementSet::from_labels(labels); }

Vec raw(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

// z = max(a + x, b + y) for some a, b iff the largest admissible choices
// a = min(z - x), b = min(z - y) reproduce every coordinate.
bool in_two_point_hull(const TropPoint& x, const TropPoint& y, const TropPoint& z) {
  Rational a = z[0] - x[0];
  Rational b = z[0] - y[0];
  for (std::size_t i = 1; i < z.size(); ++i) {
    a = std::min(a, Rational(z[i] - x[i]));
    b = std::min(b, Rational(z[i] - y[i]));
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::max(Rational(a + x[i]), Rational(b + y[i])) != z[i]) return false;
  }
  return true;
}

std::size_t distinct_values(const TropPoint& x) {
  std::set<Rational> s(x.coords().begin(), x.coords().end());
  return s.size();
}

TEST(Canonicalize, SubtractsFirstCoordinate) {
  EXPECT_EQ(TropPoint::canonicalize(raw({1, 0, 0})).coords(), raw({0, -1, -1}));
  EXPECT_EQ(TropPoint::canonicalize(raw({0, 2, 1})).coords(), raw({0, 2, 1}));
  EXPECT_EQ(TropPoint::canonicalize(raw({5, 5, 5})).coords(), raw({0, 0, 0}));
}

TEST(Canonicalize, RejectsEmpty) { EXPECT_THROW(TropPoint::canonicalize({}), InvalidInput); }

TEST(TropCombine, WorkedExample) {
  std::vector<TropTerm> terms{{0, P({0, -1, -1})}, {-1, P({0, 2, 1})}};
  EXPECT_EQ(trop_combine(terms), P({0, 1, 0}));
}

TEST(TropCombine, SingleAndRepeatedTerms) {
  const TropPoint x = P({0, 4, -2});
  std::vector<TropTerm> one{{0, x}};
  std::vector<TropTerm> two{{0, x}, {0, x}};
  EXPECT_EQ(trop_combine(one), x);
  EXPECT_EQ(trop_combine(two), x);
}

TEST(TropCombine, RejectsMismatchedSizes) {
  std::vector<TropTerm> terms{{0, P({0, 1})}, {0, P({0, 1, 2})}};
  EXPECT_THROW(trop_combine(terms), InvalidInput);
  EXPECT_THROW(trop_combine({}), InvalidInput);
}

TEST(Heterogeneity, Examples) {
  EXPECT_EQ(heterogeneity(P({0, -1, -1})), 2u);
  EXPECT_EQ(heterogeneity(P({0, 0, 0})), 1u);
  const Partition part = partition(P({0, 3, 2}));
  ASSERT_EQ(part.blocks.size(), 3u);
  EXPECT_EQ(part.blocks[0], S({2}));
  EXPECT_EQ(part.blocks[1], S({3}));
  EXPECT_EQ(part.blocks[2], S({1}));
  EXPECT_EQ(part.values, raw({3, 2, 0}));
}

TEST(Segment, WorkedExample) {
  const auto pts = segment(P({0, -1, -1}), P({0, 2, 1}));
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0], P({0, -1, -1}));
  EXPECT_EQ(pts[1], P({0, 0, -1}));
  EXPECT_EQ(pts[2], P({0, 2, 1}));
}

TEST(Segment, DegenerateAndStaircase) {
  const TropPoint x = P({0, 3, 1});
  EXPECT_EQ(segment(x, x), std::vector<TropPoint>{x});
  const auto pts = segment(P({0, 0, 0}), P({0, 1, 2}));
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], P({0, 0, 1}));
  EXPECT_EQ(pts[2], P({0, 1, 2}));
  for (const auto& p : pts) EXPECT_TRUE(in_two_point_hull(P({0, 0, 0}), P({0, 1, 2}), p));
}

TEST(TconvContains, Examples) {
  const std::vector<TropPoint> gens{P({0, -1, -1}), P({0, 2, 1})};
  EXPECT_TRUE(tconv_contains(std::vector<TropPoint>{gens[0]}, gens[0]));
  EXPECT_TRUE(tconv_contains(gens, P({0, 0, -1})));
  EXPECT_FALSE(tconv_contains(gens, P({0, -1, 1})));
  EXPECT_FALSE(in_two_point_hull(gens[0], gens[1], P({0, -1, 1})));
  EXPECT_THROW(tconv_contains(gens, P({0, 1})), InvalidInput);
}

TEST(Norm, Examples) {
  EXPECT_EQ(trop_norm(P({0, 3, 2})), 3);
  EXPECT_EQ(trop_norm(P({0, 0, 0})), 0);
  EXPECT_EQ(trop_norm(P({0, 1, 0})) + trop_norm(P({0, 2, 2})), trop_norm(P({0, 3, 2})));
}

TEST(Imax, Examples) {
  EXPECT_EQ(imax(P({0, 3, 2})), S({2}));
  EXPECT_EQ(imin(P({0, 3, 2})), S({1}));
  EXPECT_EQ(imax(P({0, 0, 0})), S({1, 2, 3}));
}

TEST(Ball, Vertices) {
  const Polytrope zero = trop_ball(P({0, 1, 2}), 0);
  EXPECT_EQ(zero.vertices, std::vector<TropPoint>{P({0, 1, 2})});
  const Polytrope unit = trop_ball(TropPoint::origin(3), 1);
  EXPECT_EQ(unit.vertices.size(), 6u);
  for (const auto& v : unit.vertices) EXPECT_EQ(trop_norm(v), 1);
  EXPECT_THROW(trop_ball(TropPoint::origin(3), -1), InvalidInput);
}

TEST(Ball, MembershipMatchesNorm) {
  testing::Gen g(11);
  for (int i = 0; i < 100; ++i) {
    const TropPoint x = g.point(4);
    const Rational r = g.nonnegative(3);
    const Polytrope b = trop_ball(x, r);
    const TropPoint y = g.point(4);
    const Vec& xc = x.coords();
    const Vec& yc = y.coords();
    Rational hi = yc[0] - xc[0];
    Rational lo = hi;
    for (std::size_t k = 1; k < 4; ++k) {
      hi = std::max(hi, Rational(yc[k] - xc[k]));
      lo = std::min(lo, Rational(yc[k] - xc[k]));
    }
    EXPECT_EQ(b.contains(y), hi - lo <= r);
    for (const auto& v : b.vertices) EXPECT_TRUE(b.contains(v));
  }
}

TEST(SegmentProperty, BreakpointCountSymmetryAndHull) {
  testing::Gen g(7);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    const TropPoint x = i % 2 ? g.point(n) : g.tied_point(n);
    const TropPoint y = i % 3 ? g.point(n) : g.tied_point(n);
    const auto fwd = segment(x, y);
    auto back = segment(y, x);
    std::reverse(back.begin(), back.end());
    EXPECT_EQ(fwd.size(), distinct_values(y - x));
    EXPECT_EQ(fwd, back);
    EXPECT_EQ(fwd.front(), x);
    EXPECT_EQ(fwd.back(), y);
    const std::vector<TropPoint> gens{x, y};
    for (const auto& p : fwd) {
      EXPECT_TRUE(in_two_point_hull(x, y, p));
      EXPECT_TRUE(tconv_contains(gens, p));
    }
    // Consecutive differences are positive multiples of nested 0/1 vectors.
    ElementSet prev;
    for (std::size_t k = 1; k < fwd.size(); ++k) {
      const TropPoint d = fwd[k] - fwd[k - 1];
      const ElementSet top = imax(d);
      EXPECT_EQ(distinct_values(d), 2u);
      EXPECT_TRUE(prev.is_proper_subset_of(top) || k == 1);
      prev = top;
    }
  }
}

TEST(NormProperty, Axioms) {
  testing::Gen g(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const TropPoint x = g.point(n);
    const TropPoint y = g.point(n);
    const TropPoint z = g.point(n);
    const Rational lambda = g.rational();
    EXPECT_EQ(trop_norm(x) == 0, x == TropPoint::origin(n));
    EXPECT_EQ(trop_norm(lambda * x), abs(lambda) * trop_norm(x));
    EXPECT_LE(trop_norm(x - z), trop_norm(x - y) + trop_norm(y - z));
    const auto pts = segment(x, y);
    Rational total = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) total += trop_norm(pts[k] - pts[k - 1]);
    EXPECT_EQ(total, trop_norm(y - x));
    for (const auto& p : pts) {
      EXPECT_TRUE(imax(p - z).is_subset_of(imax(x - z) | imax(y - z)));
    }
  }
}

TEST(TropCombineProperty, ShiftInvariance) {
  testing::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    std::vector<TropTerm> terms;
    std::vector<TropTerm> shifted;
    const Rational c = g.rational();
    const int k = static_cast<int>(g.integer(1, 4));
    for (int j = 0; j < k; ++j) {
      TropTerm t{g.rational(), g.point(n)};
      terms.push_back(t);
      shifted.push_back({t.scalar + c, t.point});
    }
    EXPECT_EQ(trop_combine(terms), trop_combine(shifted));
  }
}

}  // namespace
}  // namespace tropcvx
