#include "tropcvx/double_description.hpp"

#include <cstdint>
#include <vector>

#include "tropcvx/errors.hpp"

namespace tropcvx::dd {

namespace {

// Set of constraint indices tight at a ray.
class ZeroSet {
 public:
  explicit ZeroSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool is_subset_of(const ZeroSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }
  friend ZeroSet operator&(const ZeroSet& a, const ZeroSet& b) {
    ZeroSet r = a;
    for (std::size_t k = 0; k < r.words_.size(); ++k) r.words_[k] &= b.words_[k];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vec v;
  ZeroSet zeros;
};

}  // namespace

ConeGenerators generators_from_constraints(std::size_t dim, const linalg::Matrix& inequalities,
                                           const linalg::Matrix& equalities) {
  struct Row {
    const Vec* a;
    bool equality;
  };
  std::vector<Row> order;
  for (const auto& e : equalities) order.push_back({&e, true});
  for (const auto& a : inequalities) order.push_back({&a, false});
  for (const auto& r : order) {
    if (r.a->size() != dim) throw InvalidInput("constraint has wrong dimension");
  }
  const std::size_t total = order.size();

  linalg::Matrix lin;
  for (std::size_t i = 0; i < dim; ++i) lin.push_back(linalg::unit(dim, i));
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < total; ++k) {
    const Vec& a = *order[k].a;
    const bool eq = order[k].equality;

    std::size_t pick = lin.size();
    Rational pick_val;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      pick_val = linalg::dot(a, lin[i]);
      if (sgn(pick_val) != 0) {
        pick = i;
        break;
      }
    }
    if (pick < lin.size()) {
      Vec l = lin[pick];
      if (pick_val < 0) {
        l = linalg::scale(l, -1);
        pick_val = -pick_val;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& other : lin) {
        const Rational c = linalg::dot(a, other);
        if (sgn(c) != 0) other = linalg::axpy(other, -c / pick_val, l);
      }
      for (auto& r : rays) {
        const Rational c = linalg::dot(a, r.v);
        if (sgn(c) != 0) r.v = primitive_integer(linalg::axpy(r.v, -c / pick_val, l));
        r.zeros.set(k);
      }
      if (!eq) {
        ZeroSet z(total);
        for (std::size_t j = 0; j < k; ++j) z.set(j);
        rays.push_back({primitive_integer(l), std::move(z)});
      }
      continue;
    }

    std::vector<int> sign(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) sign[i] = sgn(linalg::dot(a, rays[i].v));

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sign[i] == 0) {
        Ray r = rays[i];
        r.zeros.set(k);
        next.push_back(std::move(r));
      } else if (sign[i] > 0 && !eq) {
        next.push_back(rays[i]);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sign[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (sign[q] >= 0) continue;
        const ZeroSet common = rays[p].zeros & rays[q].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        const Rational ap = linalg::dot(a, rays[p].v);
        const Rational aq = linalg::dot(a, rays[q].v);
        Vec v = linalg::sub(linalg::scale(rays[q].v, ap), linalg::scale(rays[p].v, aq));
        ZeroSet z = common;
        z.set(k);
        next.push_back({primitive_integer(v), std::move(z)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

ConeConstraints constraints_from_generators(std::size_t dim, const linalg::Matrix& rays,
                                            const linalg::Matrix& lineality) {
  ConeGenerators dual = generators_from_constraints(dim, rays, lineality);
  return ConeConstraints{std::move(dual.rays), std::move(dual.lineality)};
}

}  // namespace tropcvx::dd
