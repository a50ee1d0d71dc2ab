#include "vawrt/cone_union.hpp"

#include <algorithm>

#include "vawrt/arrangement.hpp"

namespace vawrt {

namespace {

std::vector<Cone> reduce(std::vector<Cone> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<Cone> kept;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < parts.size() && !covered; ++j) {
      covered = j != i && parts[i].subset_of(parts[j]);
    }
    if (!covered) kept.push_back(parts[i]);
  }
  return kept;
}

lp::System cone_system(const Cone& c) {
  lp::System sys;
  sys.dim = c.dim();
  for (const RVec& a : c.ineqs()) sys.le.push_back({a, 0});
  for (const RVec& e : c.eqs()) sys.eq.push_back({e, 0});
  return sys;
}

}  // namespace

RMat defining_hyperplanes(const std::vector<Cone>& cones) {
  RMat hs;
  for (const Cone& c : cones) {
    for (const RMat* rows : {&c.ineqs(), &c.eqs()}) {
      for (RVec h : *rows) {
        if (primitive_unsigned(h) != 0) hs.push_back(std::move(h));
      }
    }
  }
  sort_unique(hs);
  return hs;
}

std::optional<RVec> cone_minus_union(const Cone& a, const std::vector<Cone>& b) {
  if (b.empty()) return a.relint_point();
  for (const Cone& part : b) {
    if (a.subset_of(part)) return std::nullopt;
  }
  // Only hyperplanes that actually cut `a` refine the split.
  RMat hs;
  for (const RVec& h : defining_hyperplanes(b)) {
    bool all_zero = true;
    for (const RVec& g : a.generators()) all_zero = all_zero && sgn(dot(h, g)) == 0;
    if (!all_zero) hs.push_back(h);
  }
  for (const SignCell& cell : enumerate_sign_cells(cone_system(a), hs)) {
    const bool covered =
        std::any_of(b.begin(), b.end(), [&](const Cone& part) { return part.contains(cell.witness); });
    if (!covered) return cell.witness;
  }
  return std::nullopt;
}

ConeUnion::ConeUnion(const Cone& c) : dim_(c.dim()), parts_{c} {}

ConeUnion::ConeUnion(std::size_t dim, std::vector<Cone> parts) : dim_(dim) {
  for (const Cone& c : parts) {
    if (c.dim() != dim) throw DimensionError("cone union: part dimension mismatch");
  }
  parts_ = reduce(std::move(parts));
}

bool ConeUnion::is_zero() const {
  return !parts_.empty() &&
         std::all_of(parts_.begin(), parts_.end(), [](const Cone& c) { return c.is_zero(); });
}

bool ConeUnion::contains(const RVec& v) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Cone& c) { return c.contains(v); });
}

SubsetResult ConeUnion::subset_of(const ConeUnion& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone union subset: dimension mismatch");
  for (const Cone& part : parts_) {
    if (auto w = cone_minus_union(part, other.parts_)) return SubsetResult{false, std::move(w)};
  }
  return SubsetResult{true, std::nullopt};
}

bool ConeUnion::same_set(const ConeUnion& other) const {
  if (*this == other) return true;
  return subset_of(other).holds && other.subset_of(*this).holds;
}

ConeUnion ConeUnion::intersect(const ConeUnion& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone union intersect: dimension mismatch");
  std::vector<Cone> out;
  for (const Cone& a : parts_) {
    for (const Cone& b : other.parts_) out.push_back(a.intersect(b));
  }
  return ConeUnion(dim_, std::move(out));
}

ConeUnion ConeUnion::minkowski_sum(const ConeUnion& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone union sum: dimension mismatch");
  std::vector<Cone> out;
  for (const Cone& a : parts_) {
    for (const Cone& b : other.parts_) out.push_back(a.sum(b));
  }
  return ConeUnion(dim_, std::move(out));
}

ConeUnion ConeUnion::unite(const ConeUnion& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone union unite: dimension mismatch");
  std::vector<Cone> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  return ConeUnion(dim_, std::move(out));
}

ConeUnion ConeUnion::negated() const {
  std::vector<Cone> out;
  for (const Cone& c : parts_) out.push_back(c.negated());
  return ConeUnion(dim_, std::move(out));
}

ConeUnion ConeUnion::image(const RMat& m) const {
  std::vector<Cone> out;
  for (const Cone& c : parts_) out.push_back(c.image(m));
  return ConeUnion(m.size(), std::move(out));
}

ConeUnion ConeUnion::preimage(const RMat& m, std::size_t in_dim) const {
  std::vector<Cone> out;
  for (const Cone& c : parts_) out.push_back(c.preimage(m, in_dim));
  return ConeUnion(in_dim, std::move(out));
}

ConeUnion ConeUnion::project(std::size_t begin, std::size_t count) const {
  std::vector<Cone> out;
  for (const Cone& c : parts_) out.push_back(c.project(begin, count));
  return ConeUnion(count, std::move(out));
}

ConeUnion ConeUnion::product(const ConeUnion& a, const ConeUnion& b) {
  std::vector<Cone> out;
  for (const Cone& x : a.parts_) {
    for (const Cone& y : b.parts_) out.push_back(Cone::product(x, y));
  }
  return ConeUnion(a.dim_ + b.dim_, std::move(out));
}

}  // namespace vawrt
