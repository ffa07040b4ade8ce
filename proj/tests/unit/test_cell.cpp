#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "tropcvx/cell.hpp"
#include "tropcvx/double_description.hpp"
#include "tropcvx/errors.hpp"
#include "tropcvx/lattice.hpp"

namespace tropcvx {
namespace {

using linalg::Matrix;

Vec V(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

Matrix cube_vertices(std::size_t d) {
  Matrix out;
  for (std::uint32_t m = 0; m < (1u << d); ++m) {
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (m >> i) & 1u;
    out.push_back(v);
  }
  return out;
}

TEST(DoubleDescription, CubeFromFacets) {
  // 0 <= x_i <= 1 homogenized: (0, e_i) and (1, -e_i).
  const std::size_t d = 3;
  Matrix ineq{V({1, 0, 0, 0})};
  for (std::size_t i = 0; i < d; ++i) {
    ineq.push_back(linalg::unit(d + 1, i + 1));
    Vec h = linalg::scale(linalg::unit(d + 1, i + 1), -1);
    h[0] = 1;
    ineq.push_back(h);
  }
  const auto g = dd::generators_from_constraints(d + 1, ineq, {});
  EXPECT_EQ(g.rays.size(), 8u);
  EXPECT_TRUE(g.lineality.empty());
}

TEST(Cell, CubeFacesAndMembership) {
  const Cell c = Cell::from_generators(3, cube_vertices(3));
  EXPECT_EQ(c.dim(), 3u);
  EXPECT_EQ(c.inequalities().size(), 6u);
  EXPECT_EQ(c.facets().size(), 6u);
  EXPECT_TRUE(c.is_bounded());
  EXPECT_TRUE(c.contains(V({1, 0, 1})));
  EXPECT_FALSE(c.contains(V({2, 0, 0})));
  EXPECT_TRUE(c.relint_contains(c.interior_point()));
}

TEST(Cell, RedundantGeneratorsAreDropped) {
  Matrix vs = cube_vertices(2);
  vs.push_back({Rational(1, 2), Rational(1, 2)});
  const Cell a = Cell::from_generators(2, vs);
  const Cell b = Cell::from_generators(2, cube_vertices(2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.vertices().size(), 4u);
}

TEST(Cell, ConesRaysAndLineality) {
  const Cell quadrant = Cell::cone(2, {V({3, 0}), V({0, 2})});
  EXPECT_EQ(quadrant.rays(), (Matrix{V({0, 1}), V({1, 0})}));
  EXPECT_TRUE(quadrant.is_cone());
  EXPECT_EQ(quadrant.facets().size(), 2u);

  const Cell halfplane = Cell::cone(2, {V({1, 0})}, {V({0, 5})});
  EXPECT_EQ(halfplane.dim(), 2u);
  EXPECT_EQ(halfplane.lineality().size(), 1u);
  EXPECT_EQ(halfplane.facets().size(), 1u);
  EXPECT_EQ(halfplane.facets().front().dim(), 1u);
  EXPECT_TRUE(halfplane.contains(V({2, -7})));
  EXPECT_FALSE(halfplane.contains(V({-1, 0})));

  const Cell line = Cell::cone(2, {V({1, 1}), V({-1, -1})});
  EXPECT_EQ(line.dim(), 1u);
  EXPECT_TRUE(line.rays().empty());
  EXPECT_EQ(line.lineality().size(), 1u);
  EXPECT_TRUE(line.facets().empty());

  const Cell space = Cell::whole_space(2);
  EXPECT_EQ(space.dim(), 2u);
  EXPECT_TRUE(space.contains(V({9, -9})));
}

TEST(Cell, FromConstraints) {
  // Triangle x >= 0, y >= 0, x + y <= 1.
  const auto t = Cell::from_constraints(2, {V({0, 1, 0}), V({0, 0, 1}), V({1, -1, -1})}, {});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->vertices().size(), 3u);
  EXPECT_FALSE(Cell::from_constraints(2, {V({-1, 1, 0}), V({0, -1, 0})}, {}));
  const auto seg = Cell::from_constraints(2, {V({0, 1, 0}), V({1, -1, 0})}, {V({0, 0, 1})});
  ASSERT_TRUE(seg);
  EXPECT_EQ(seg->dim(), 1u);
  EXPECT_EQ(seg->vertices(), (Matrix{V({0, 0}), V({1, 0})}));
}

TEST(Cell, RefineAndSigns) {
  const Cell square = Cell::from_generators(2, cube_vertices(2));
  EXPECT_EQ(square.sign_on(V({-1, 1, 1})), 2);
  EXPECT_EQ(square.sign_on(V({-2, 1, 1})), -1);
  EXPECT_EQ(square.sign_on(V({0, 1, 0})), 1);
  EXPECT_EQ(square.sign_on(V({-1, 1, 0})), -1);
  const auto pieces = square.refine({V({-1, 1, 1}), V({0, 1, -1})}, 100);
  EXPECT_EQ(pieces.size(), 4u);
  EXPECT_THROW(square.refine({V({-1, 1, 1}), V({0, 1, -1})}, 2), ResourceLimit);
  const Cell plane = Cell::whole_space(2);
  EXPECT_EQ(plane.refine({V({0, 1, 0}), V({0, 0, 1}), V({0, 1, -1})}, 100).size(), 6u);
}

TEST(Cell, GenericPointAvoidsHyperplanes) {
  const Cell square = Cell::from_generators(2, cube_vertices(2));
  const Matrix hs{V({-1, 2, 0}), V({-1, 0, 2}), V({0, 1, -1}), V({-1, 1, 1})};
  const Vec p = square.generic_point(hs);
  EXPECT_TRUE(square.relint_contains(p));
  for (const auto& h : hs) EXPECT_NE(evaluate_affine(h, p), 0);
}

TEST(CellProperty, HAndVMembershipAgree) {
  testing::Gen g(17);
  for (int round = 0; round < 40; ++round) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 3));
    Matrix vs, rs, ls;
    const int nv = static_cast<int>(g.integer(1, 4));
    for (int i = 0; i < nv; ++i) vs.push_back(g.vec(d, 3, 2));
    const int nr = static_cast<int>(g.integer(0, 2));
    for (int i = 0; i < nr; ++i) rs.push_back(g.vec(d, 2, 1));
    if (round % 5 == 0) ls.push_back(g.vec(d, 2, 1));
    const Cell c = Cell::from_generators(d, vs, rs, ls);
    for (const auto& v : vs) EXPECT_TRUE(c.contains(v));
    for (int k = 0; k < 100; ++k) {
      const Vec x = k % 2 ? g.vec(d, 4, 3) : linalg::add(c.interior_point(), g.vec(d, 1, 4));
      EXPECT_EQ(c.contains(x), c.contains_by_generators(x));
    }
  }
}

TEST(Lattice, SaturatedBasis) {
  // Line spanned by (2, 4): saturated lattice generated by (1, 2).
  const Matrix b = lattice::saturated_basis({V({2, 4})}, 2);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_TRUE(b[0] == V({1, 2}) || b[0] == V({-1, -2}));
  // Plane x + y + z = 0 in R^3: index-one lattice of rank 2.
  const Matrix p = lattice::saturated_basis({V({1, -1, 0}), V({0, 1, -1})}, 3);
  ASSERT_EQ(p.size(), 2u);
  const Vec cross{p[0][1] * p[1][2] - p[0][2] * p[1][1], p[0][2] * p[1][0] - p[0][0] * p[1][2],
                  p[0][0] * p[1][1] - p[0][1] * p[1][0]};
  EXPECT_TRUE(cross == V({1, 1, 1}) || cross == V({-1, -1, -1}));
  EXPECT_EQ(lattice::saturated_basis({}, 2).size(), 0u);
  EXPECT_EQ(lattice::saturated_basis({V({1, 0}), V({0, 1})}, 2).size(), 2u);
}

TEST(Lattice, Bezout) {
  const std::vector<Integer> a{6, 10, 15};
  const auto m = lattice::bezout(a);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += m[i] * a[i];
  EXPECT_EQ(s, 1);
}

}  // namespace
}  // namespace tropcvx
