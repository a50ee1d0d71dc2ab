#include "vawrt/dd.hpp"

#include <utility>

namespace vawrt {

namespace {

class DoubleDescription {
 public:
  explicit DoubleDescription(std::size_t dim) : dim_(dim) {
    for (std::size_t i = 0; i < dim; ++i) lin_.push_back(unit(dim, i));
  }

  void add_inequality(const RVec& a) {
    if (is_zero(a)) return;
    // A lineality direction not orthogonal to a becomes a ray.
    for (std::size_t k = 0; k < lin_.size(); ++k) {
      const Rat ak = dot(a, lin_[k]);
      if (sgn(ak) == 0) continue;
      RVec l0 = sgn(ak) < 0 ? lin_[k] : negate(lin_[k]);
      const Rat al0 = dot(a, l0);
      lin_.erase(lin_.begin() + static_cast<std::ptrdiff_t>(k));
      for (RVec& l : lin_) l = primitive(sub(l, scale(l0, dot(a, l) / al0)));
      for (RVec& r : rays_) r = primitive(sub(r, scale(l0, dot(a, r) / al0)));
      rays_.push_back(primitive(l0));
      processed_.push_back(a);
      return;
    }
    std::vector<RVec> pos, zero, neg;
    std::vector<Rat> pos_v, neg_v;
    for (RVec& r : rays_) {
      const Rat v = dot(a, r);
      if (sgn(v) > 0) {
        pos.push_back(std::move(r));
        pos_v.push_back(v);
      } else if (sgn(v) < 0) {
        neg.push_back(std::move(r));
        neg_v.push_back(v);
      } else {
        zero.push_back(std::move(r));
      }
    }
    std::vector<RVec> next = zero;
    next.insert(next.end(), neg.begin(), neg.end());
    const std::size_t target = dim_ - lin_.size();
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        if (!adjacent(pos[i], neg[j], target)) continue;
        RVec r = sub(scale(neg[j], pos_v[i]), scale(pos[i], neg_v[j]));
        next.push_back(primitive(r));
      }
    }
    rays_ = std::move(next);
    processed_.push_back(a);
  }

  void add_equality(const RVec& e) {
    add_inequality(e);
    add_inequality(negate(e));
  }

  Generators result() const {
    Generators g{rays_, row_space_basis(lin_, dim_)};
    sort_unique(g.rays);
    return g;
  }

 private:
  // Two extreme rays are adjacent iff the processed constraints tight at
  // both have rank (dim - lineality - 2).
  bool adjacent(const RVec& p, const RVec& q, std::size_t target) const {
    if (target < 2) return false;
    RMat tight;
    for (const RVec& a : processed_) {
      if (sgn(dot(a, p)) == 0 && sgn(dot(a, q)) == 0) tight.push_back(a);
    }
    if (tight.size() < target - 2) return false;
    return rank(tight, dim_) == target - 2;
  }

  std::size_t dim_;
  RMat lin_;
  RMat rays_;
  RMat processed_;
};

}  // namespace

Generators dd_generators(std::size_t dim, const RMat& ineqs, const RMat& eqs) {
  DoubleDescription dd(dim);
  for (const RVec& e : eqs) {
    if (e.size() != dim) throw DimensionError("dd: equality has wrong length");
    dd.add_equality(e);
  }
  for (const RVec& a : ineqs) {
    if (a.size() != dim) throw DimensionError("dd: inequality has wrong length");
    dd.add_inequality(a);
  }
  return dd.result();
}

}  // namespace vawrt
