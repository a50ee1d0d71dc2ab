#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vawrt/cone.hpp"

namespace vawrt {

struct SubsetResult {
  bool holds = true;
  std::optional<RVec> witness;  // point of a outside b when !holds
};

/// Finite union of closed convex cones. Canonical: parts sorted, no part
/// contained in another. Zero parts means the empty set.
class ConeUnion {
 public:
  explicit ConeUnion(std::size_t dim) : dim_(dim) {}
  explicit ConeUnion(const Cone& c);
  ConeUnion(std::size_t dim, std::vector<Cone> parts);
  static ConeUnion empty(std::size_t dim) { return ConeUnion(dim); }

  std::size_t dim() const { return dim_; }
  const std::vector<Cone>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  /// True iff the union is exactly {0}.
  bool is_zero() const;
  bool is_convex_part() const { return parts_.size() == 1; }
  bool contains(const RVec& v) const;

  SubsetResult subset_of(const ConeUnion& other) const;
  bool same_set(const ConeUnion& other) const;

  ConeUnion intersect(const ConeUnion& other) const;
  ConeUnion minkowski_sum(const ConeUnion& other) const;
  ConeUnion unite(const ConeUnion& other) const;
  ConeUnion negated() const;
  ConeUnion image(const RMat& m) const;
  ConeUnion preimage(const RMat& m, std::size_t in_dim) const;
  ConeUnion project(std::size_t begin, std::size_t count) const;
  static ConeUnion product(const ConeUnion& a, const ConeUnion& b);

  bool operator==(const ConeUnion& other) const {
    return dim_ == other.dim_ && parts_ == other.parts_;
  }

 private:
  std::size_t dim_;
  std::vector<Cone> parts_;
};

/// Exact region subtraction: a point of `a` outside the union `b`, or none.
std::optional<RVec> cone_minus_union(const Cone& a, const std::vector<Cone>& b);

/// Distinct hyperplanes (primitive, first nonzero entry positive) among the
/// facet and equality rows of the given cones.
RMat defining_hyperplanes(const std::vector<Cone>& cones);

}  // namespace vawrt
