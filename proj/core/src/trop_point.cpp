#include "tropcvx/trop_point.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "tropcvx/errors.hpp"

namespace tropcvx {

namespace {

void require_same_size(const TropPoint& a, const TropPoint& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("ambient size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

Rational max_coord(const Vec& v) { return *std::max_element(v.begin(), v.end()); }
Rational min_coord(const Vec& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

TropPoint TropPoint::canonicalize(Vec raw) {
  if (raw.empty()) throw InvalidInput("a tropical point needs at least one coordinate");
  const Rational shift = raw[0];
  for (auto& x : raw) x -= shift;
  return TropPoint(std::move(raw));
}

TropPoint TropPoint::from_reduced(const Vec& reduced) {
  Vec c;
  c.reserve(reduced.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), reduced.begin(), reduced.end());
  return TropPoint(std::move(c));
}

TropPoint TropPoint::origin(std::size_t n) {
  if (n == 0) throw InvalidInput("a tropical point needs at least one coordinate");
  return TropPoint(Vec(n, Rational(0)));
}

TropPoint TropPoint::indicator(std::size_t n, ElementSet f) {
  Vec v(n, Rational(0));
  for (auto i : f.elements()) {
    if (i >= n) throw InvalidInput("set " + f.to_string() + " exceeds ground set size");
    v[i] = -1;
  }
  return canonicalize(std::move(v));
}

TropPoint operator-(const TropPoint& a, const TropPoint& b) {
  require_same_size(a, b);
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a.coords_[i] - b.coords_[i];
  return TropPoint(std::move(d));
}

TropPoint operator+(const TropPoint& a, const TropPoint& b) {
  require_same_size(a, b);
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a.coords_[i] + b.coords_[i];
  return TropPoint(std::move(d));
}

TropPoint operator*(const Rational& s, const TropPoint& a) {
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = s * a.coords_[i];
  return TropPoint(std::move(d));
}

TropPoint canonicalize(Vec raw) { return TropPoint::canonicalize(std::move(raw)); }

TropPoint trop_combine(std::span<const TropTerm> terms) {
  if (terms.empty()) throw InvalidInput("tropical combination of no terms");
  const std::size_t n = terms.front().point.size();
  Vec acc(n);
  for (std::size_t i = 0; i < n; ++i) acc[i] = terms.front().point[i] + terms.front().scalar;
  for (const auto& t : terms.subspan(1)) {
    if (t.point.size() != n) throw InvalidInput("tropical combination of points of different sizes");
    for (std::size_t i = 0; i < n; ++i) {
      Rational c = t.point[i] + t.scalar;
      if (c > acc[i]) acc[i] = std::move(c);
    }
  }
  return canonicalize(std::move(acc));
}

Partition partition(const TropPoint& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  Partition p;
  for (auto i : idx) {
    if (p.values.empty() || p.values.back() != x[i]) {
      p.values.push_back(x[i]);
      p.blocks.emplace_back();
    }
    p.blocks.back().insert(i);
  }
  return p;
}

std::size_t heterogeneity(const TropPoint& x) { return partition(x).size(); }

std::vector<TropPoint> segment(const TropPoint& x, const TropPoint& y) {
  require_same_size(x, y);
  const Partition part = partition(y - x);
  std::vector<TropPoint> points{x};
  Vec current = x.coords();
  ElementSet prefix;
  for (std::size_t j = 1; j < part.size(); ++j) {
    prefix = prefix | part.blocks[j - 1];
    const Rational step = part.values[j - 1] - part.values[j];
    for (auto i : prefix.elements()) current[i] += step;
    points.push_back(canonicalize(current));
  }
  return points;
}

bool tconv_contains(std::span<const TropPoint> generators, const TropPoint& z) {
  if (generators.empty()) throw InvalidInput("hull of no generators");
  std::vector<TropTerm> terms;
  terms.reserve(generators.size());
  for (const auto& g : generators) {
    require_same_size(g, z);
    terms.push_back({min_coord((z - g).coords()), g});
  }
  return trop_combine(terms) == z;
}

Rational trop_norm(const TropPoint& x) { return max_coord(x.coords()) - min_coord(x.coords()); }

ElementSet imax(const TropPoint& x) {
  const Rational m = max_coord(x.coords());
  ElementSet s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == m) s.insert(i);
  }
  return s;
}

ElementSet imin(const TropPoint& x) {
  const Rational m = min_coord(x.coords());
  ElementSet s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == m) s.insert(i);
  }
  return s;
}

bool Polytrope::contains(const TropPoint& y) const { return trop_norm(y - center) <= radius; }

Polytrope trop_ball(const TropPoint& x, const Rational& r) {
  if (r < 0) throw InvalidInput("negative radius");
  const std::size_t n = x.size();
  if (n > ElementSet::kMaxElements) throw ResourceLimit("ball vertex enumeration limited to 30 coordinates");
  Polytrope ball{x, r, {}};
  if (sgn(r) == 0 || n == 1) {
    ball.vertices.push_back(x);
    return ball;
  }
  const ElementSet all = ElementSet::full(n);
  for (std::uint32_t bits = 1; bits < all.bits(); ++bits) {
    Vec v = x.coords();
    for (auto i : ElementSet(bits).elements()) v[i] += r;
    ball.vertices.push_back(canonicalize(std::move(v)));
  }
  std::sort(ball.vertices.begin(), ball.vertices.end());
  ball.vertices.erase(std::unique(ball.vertices.begin(), ball.vertices.end()), ball.vertices.end());
  return ball;
}

std::ostream& operator<<(std::ostream& os, const TropPoint& x) { return os << to_string(x.coords()); }

}  // namespace tropcvx
