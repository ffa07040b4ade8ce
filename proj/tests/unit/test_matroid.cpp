#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "tropcvx/errors.hpp"
#include "tropcvx/matroid.hpp"

namespace tropcvx {
namespace {

ElementSet S(std::initializer_list<int> labels) { return ElementSet::from_labels(labels); }

// Oracle: rank straight from the basis list.
std::size_t oracle_rank(const std::vector<ElementSet>& bases, ElementSet s) {
  std::size_t r = 0;
  for (auto b : bases) r = std::max(r, (b & s).size());
  return r;
}

std::vector<ElementSet> oracle_circuits(std::size_t n, const std::vector<ElementSet>& bases) {
  std::vector<ElementSet> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    const ElementSet s(m);
    if (oracle_rank(bases, s) == s.size()) continue;
    bool minimal = true;
    for (auto e : s.elements()) {
      const ElementSet t = s.without(e);
      if (oracle_rank(bases, t) != t.size()) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> oracle_flats(std::size_t n, const std::vector<ElementSet>& bases) {
  std::vector<ElementSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const ElementSet s(m);
    const std::size_t r = oracle_rank(bases, s);
    bool closed = true;
    for (std::size_t e = 0; e < n; ++e) {
      if (!s.contains(e) && oracle_rank(bases, s.with(e)) == r) closed = false;
    }
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Matroid, UniformTwoThree) {
  const Matroid m = Matroid::from_bases(3, {S({1, 2}), S({1, 3}), S({2, 3})});
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_EQ(m.circuits(), std::vector<ElementSet>{S({1, 2, 3})});
  const std::vector<ElementSet> expected{ElementSet(), S({1}), S({2}), S({3}), S({1, 2, 3})};
  EXPECT_EQ(m.flats(), expected);
  EXPECT_EQ(rank(m, S({1})), 1u);
  EXPECT_EQ(m, uniform_matroid(2, 3));
}

TEST(Matroid, FreeMatroid) {
  const Matroid m = Matroid::from_bases(3, {S({1, 2, 3})});
  EXPECT_TRUE(m.circuits().empty());
  EXPECT_EQ(m.flats().size(), 8u);
}

TEST(Matroid, ExchangeViolation) {
  try {
    Matroid::from_bases(4, {S({1, 2}), S({3, 4})});
    FAIL() << "expected NotAMatroid";
  } catch (const NotAMatroid& e) {
    EXPECT_EQ(e.witness.b1, S({1, 2}));
    EXPECT_EQ(e.witness.b2, S({3, 4}));
    EXPECT_EQ(e.witness.u, 0u);
  }
}

TEST(Matroid, LoopRejected) {
  EXPECT_THROW(Matroid::from_bases(3, {S({1, 2})}), LoopyMatroid);
  EXPECT_THROW(Matroid::from_bases(3, {S({1, 2}), S({1})}), InvalidInput);
  EXPECT_THROW(Matroid::from_bases(3, {}), InvalidInput);
}

TEST(FlatFamily, Examples) {
  EXPECT_FALSE(verify_flat_family(ChainFamily(3, {S({1}), S({2}), S({3}), S({1, 2, 3})})));
  const auto bad = verify_flat_family(ChainFamily(3, {S({1}), S({2}), S({1, 2, 3})}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->axiom, 3);
  EXPECT_FALSE(verify_flat_family(ChainFamily(4, {S({1, 2, 3, 4})})));
  const auto not_closed = verify_flat_family(ChainFamily(3, {S({1, 2}), S({1, 3}), S({2, 3}), S({1, 2, 3})}));
  ASSERT_TRUE(not_closed);
  EXPECT_EQ(not_closed->axiom, 2);
  EXPECT_THROW(ChainFamily(3, {S({1})}), InvalidInput);
}

TEST(FlatFamily, Reconstruction) {
  EXPECT_EQ(matroid_from_flats(ChainFamily(3, {S({1}), S({2}), S({3}), S({1, 2, 3})})), uniform_matroid(2, 3));
  std::vector<ElementSet> all;
  for (std::uint32_t m = 1; m < 8; ++m) all.push_back(ElementSet(m));
  EXPECT_EQ(matroid_from_flats(ChainFamily(3, all)), uniform_matroid(3, 3));
  EXPECT_EQ(matroid_from_flats(ChainFamily(4, {ElementSet::full(4)})), uniform_matroid(1, 4));
  EXPECT_THROW(matroid_from_flats(ChainFamily(3, {S({1}), S({2}), S({1, 2, 3})})), PreconditionViolation);
}

TEST(ChainFamily, Chains) {
  const ChainFamily f(3, {S({1}), S({2}), S({3}), S({1, 2, 3})});
  EXPECT_EQ(f.chains().size(), 4u);
  EXPECT_EQ(f.maximal_chains().size(), 3u);
  const ChainFamily e(3, {S({1, 2, 3})});
  ASSERT_EQ(e.chains().size(), 1u);
  EXPECT_EQ(e.chains().front(), Chain{S({1, 2, 3})});
}

TEST(Enumerate, SmallCases) {
  const auto one = enumerate_matroids(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), uniform_matroid(1, 1));
  const auto two = enumerate_matroids(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], uniform_matroid(1, 2));
  EXPECT_EQ(two[1], uniform_matroid(2, 2));
  EXPECT_THROW(enumerate_matroids(0), InvalidInput);
  EXPECT_THROW(enumerate_matroids(6), ResourceLimit);
}

// Labelled matroid counts 1, 2, 5, 16, 68, 406 (n = 0..5) minus those with
// loops, by inclusion-exclusion over the loop set.
TEST(Enumerate, LoopfreeCountsFrozen) {
  const std::vector<std::size_t> expected{1, 2, 6, 27, 185};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_matroids(n).size(), expected[n - 1]) << n;
}

TEST(EnumerateProperty, DerivedDataMatchesOracles) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_matroids(n)) {
      const auto& bases = m.bases();
      EXPECT_EQ(m.circuits(), oracle_circuits(n, bases));
      EXPECT_EQ(m.flats(), oracle_flats(n, bases));
      for (auto c : m.circuits()) {
        EXPECT_FALSE(m.is_independent(c));
        for (auto e : c.elements()) EXPECT_TRUE(m.is_independent(c.without(e)));
      }
      EXPECT_FALSE(verify_flat_family(n, m.flats()));
      EXPECT_EQ(matroid_from_flats(ChainFamily(n, m.flats())).bases(), bases);
    }
  }
}

TEST(EnumerateProperty, RankIsSubmodularAndMonotone) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_matroids(n)) {
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
          const ElementSet x(a), y(b);
          EXPECT_LE(m.rank_of(x | y) + m.rank_of(x & y), m.rank_of(x) + m.rank_of(y));
          if (x.is_subset_of(y)) EXPECT_LE(m.rank_of(x), m.rank_of(y));
        }
      }
    }
  }
}

}  // namespace
}  // namespace tropcvx
