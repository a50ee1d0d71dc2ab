#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "vawrt/dd.hpp"

namespace vawrt {

/// Closed convex polyhedral cone {x : a·x ≤ 0, e·x = 0} kept in canonical
/// form with both representations populated:
///   ineqs      facet normals, primitive, projected onto span(K), sorted
///   eqs        RREF primitive basis of span(K)^⊥
///   rays       extreme rays, primitive, projected onto lin(K)^⊥, sorted
///   lineality  RREF primitive basis of lin(K)
/// Two cones are equal iff their canonical forms are identical.
class Cone {
 public:
  static Cone from_h(std::size_t dim, const RMat& ineqs, const RMat& eqs);
  static Cone from_v(std::size_t dim, const RMat& rays, const RMat& lineality);
  static Cone whole(std::size_t dim);
  static Cone origin(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const RMat& ineqs() const { return ineqs_; }
  const RMat& eqs() const { return eqs_; }
  const RMat& rays() const { return rays_; }
  const RMat& lineality() const { return lineality_; }

  bool contains(const RVec& v) const;
  /// Strict on every facet inequality.
  bool contains_relint(const RVec& v) const;
  bool subset_of(const Cone& other) const;
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_whole() const { return ineqs_.empty() && eqs_.empty(); }
  std::size_t span_dim() const { return dim_ - eqs_.size(); }

  /// A point in the relative interior (sum of rays).
  RVec relint_point() const;
  /// rays followed by ±lineality vectors.
  RMat generators() const;

  Cone polar() const;
  Cone negated() const;
  Cone intersect(const Cone& other) const;
  Cone sum(const Cone& other) const;
  /// Image under x ↦ M x, M given by rows.
  Cone image(const RMat& m) const;
  /// {x ∈ Q^in_dim : M x ∈ K}, M given by dim() rows of length in_dim.
  Cone preimage(const RMat& m, std::size_t in_dim) const;
  /// Coordinates [begin, begin+count).
  Cone project(std::size_t begin, std::size_t count) const;
  static Cone product(const Cone& a, const Cone& b);

  std::strong_ordering operator<=>(const Cone& other) const;
  bool operator==(const Cone& other) const { return (*this <=> other) == 0; }

 private:
  Cone() = default;
  static Cone finish(std::size_t dim, const Generators& g);

  std::size_t dim_ = 0;
  RMat ineqs_;
  RMat eqs_;
  RMat rays_;
  RMat lineality_;
};

}  // namespace vawrt
