#pragma once

// Points of the tropical projective torus R^n / R(1,...,1) and the max-plus
// operations on them: tropical combinations, two-point segments, hull
// membership, heterogeneity, the tropical norm and its balls.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "tropcvx/element_set.hpp"
#include "tropcvx/rational.hpp"

namespace tropcvx {

/// A class in R^n / R1, stored by its representative with first coordinate 0.
/// Equality is equality of canonical representatives.
class TropPoint {
 public:
  /// Subtracts the first coordinate from every entry. Throws InvalidInput on
  /// an empty sequence.
  static TropPoint canonicalize(Vec raw);
  /// Inverse of reduced(): prepends the zero first coordinate.
  static TropPoint from_reduced(const Vec& reduced);
  static TropPoint origin(std::size_t n);
  /// The class of v_F = -e_F.
  static TropPoint indicator(std::size_t n, ElementSet f);

  std::size_t size() const { return coords_.size(); }
  const Vec& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Coordinates 2..n of the canonical representative. This is the lattice
  /// isomorphism Z^n/1 -> Z^(n-1) used by all polyhedral code.
  Vec reduced() const { return Vec(coords_.begin() + 1, coords_.end()); }

  friend bool operator==(const TropPoint& a, const TropPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const TropPoint& a, const TropPoint& b) { return a.coords_ < b.coords_; }

  /// Differences and sums of classes are well defined in the torus.
  friend TropPoint operator-(const TropPoint& a, const TropPoint& b);
  friend TropPoint operator+(const TropPoint& a, const TropPoint& b);
  /// Scalar multiple in the vector space R^n / R1.
  friend TropPoint operator*(const Rational& s, const TropPoint& a);

 private:
  explicit TropPoint(Vec canonical) : coords_(std::move(canonical)) {}
  Vec coords_;
};

TropPoint canonicalize(Vec raw);

/// Prints the canonical representative as (a,b,...).
std::ostream& operator<<(std::ostream& os, const TropPoint& x);

/// Ordered set partition of the coordinate indices by decreasing value.
struct Partition {
  std::vector<ElementSet> blocks;
  std::vector<Rational> values;  // strictly decreasing, one per block

  std::size_t size() const { return blocks.size(); }
};

struct TropTerm {
  Rational scalar;
  TropPoint point;
};

/// Canonical class of the componentwise max over i of (x_i + lambda_i).
TropPoint trop_combine(std::span<const TropTerm> terms);

std::size_t heterogeneity(const TropPoint& x);
/// Blocks in strictly decreasing value order; indices ascending inside a block.
Partition partition(const TropPoint& x);

/// Breakpoints p_1 = x, ..., p_s = y of the tropical segment from x to y.
/// Consecutive differences are positive multiples of e_F for a strictly
/// increasing chain of sets F. Returns {x} when x == y.
std::vector<TropPoint> segment(const TropPoint& x, const TropPoint& y);

/// True iff z is a tropical linear combination of the generators.
bool tconv_contains(std::span<const TropPoint> generators, const TropPoint& z);

/// max_i x_i - min_i x_i.
Rational trop_norm(const TropPoint& x);

ElementSet imax(const TropPoint& x);
ElementSet imin(const TropPoint& x);

/// Closed tropical ball B_r(x) = {y : |y - x| <= r}. It is the image of the
/// cube with vertices r e_F; `vertices` lists the extreme points (the images of
/// proper nonempty F, or just the center when r = 0 or n = 1).
struct Polytrope {
  TropPoint center;
  Rational radius;
  std::vector<TropPoint> vertices;

  bool contains(const TropPoint& y) const;
};

Polytrope trop_ball(const TropPoint& x, const Rational& r);

}  // namespace tropcvx
