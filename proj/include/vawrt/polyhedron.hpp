#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vawrt/cone.hpp"
#include "vawrt/cone_union.hpp"
#include "vawrt/lp.hpp"

namespace vawrt {

using AffineRow = lp::Row;

/// Convex polyhedron {x : a·x ≤ b (ineqs), e·x = c (eqs)}. Possibly empty or
/// unbounded; redundant rows allowed.
class ConvexPoly {
 public:
  ConvexPoly(std::size_t dim, std::vector<AffineRow> ineqs, std::vector<AffineRow> eqs = {});
  static ConvexPoly whole(std::size_t dim);
  static ConvexPoly point(const RVec& x);
  /// {x : (x,1) ∈ K}, K a cone in dimension dim+1.
  static ConvexPoly from_homogenization(const Cone& k);
  static ConvexPoly product(const ConvexPoly& a, const ConvexPoly& b);

  std::size_t dim() const { return dim_; }
  const std::vector<AffineRow>& ineqs() const { return ineqs_; }
  const std::vector<AffineRow>& eqs() const { return eqs_; }
  lp::System system() const;

  bool contains(const RVec& x) const;
  bool is_empty() const;
  std::optional<RVec> some_point() const;
  bool is_whole_space() const;
  /// True iff the polyhedron has nonempty interior.
  bool is_full_dim() const;
  /// Rows (inequalities and equalities) with a·x = b at x.
  std::vector<AffineRow> active_ineqs(const RVec& x) const;

  /// Closed cone {(x,t) : a·x ≤ b t, e·x = c t, t ≥ 0}. Requires nonempty.
  Cone homogenization() const;
  /// Canonical H-description (through the homogenization). Requires nonempty.
  ConvexPoly canonical() const;
  bool same_set(const ConvexPoly& other) const;
  bool subset_of(const ConvexPoly& other) const;

  ConvexPoly intersect(const ConvexPoly& other) const;
  /// Points of Q^total whose coordinates [offset, offset+dim) lie in *this.
  ConvexPoly embed(std::size_t total, std::size_t offset) const;
  /// {x ∈ Q^in_dim : M x + s ∈ P}.
  ConvexPoly preimage(const RMat& m, const RVec& s, std::size_t in_dim) const;
  /// {M x : x ∈ P}. Requires nonempty.
  ConvexPoly image(const RMat& m) const;
  /// Coordinates [begin, begin+count). Requires nonempty.
  ConvexPoly project(std::size_t begin, std::size_t count) const;
  /// Minkowski sum. Both nonempty.
  ConvexPoly sum(const ConvexPoly& other) const;

 private:
  std::size_t dim_;
  std::vector<AffineRow> ineqs_;
  std::vector<AffineRow> eqs_;
};

/// Finite union of nonempty convex polyhedra. Empty pieces are dropped on
/// construction.
class PolySet {
 public:
  PolySet(std::size_t dim, std::vector<ConvexPoly> pieces);
  explicit PolySet(const ConvexPoly& piece);
  static PolySet empty(std::size_t dim) { return PolySet(dim, {}); }

  std::size_t dim() const { return dim_; }
  const std::vector<ConvexPoly>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool contains(const RVec& x) const;

  PolySet intersect(const PolySet& other) const;
  PolySet intersect(const ConvexPoly& c) const;
  PolySet unite(const PolySet& other) const;
  static PolySet product(const PolySet& a, const PolySet& b);
  PolySet embed(std::size_t total, std::size_t offset) const;
  PolySet preimage(const RMat& m, const RVec& s, std::size_t in_dim) const;
  PolySet image(const RMat& m) const;
  PolySet project(std::size_t begin, std::size_t count) const;
  PolySet sum(const PolySet& other) const;

  /// Exact, through homogenized cone unions.
  bool subset_of(const PolySet& other) const;
  bool same_set(const PolySet& other) const;
  /// Some point of *this outside `other`, if any.
  std::optional<RVec> point_outside(const PolySet& other) const;

 private:
  std::size_t dim_;
  std::vector<ConvexPoly> pieces_;
};

/// Indices of pieces containing x; empty iff x ∉ s.
std::vector<std::size_t> active_pieces(const PolySet& s, const RVec& x);

RMat identity(std::size_t n);

/// Linear map Q^total -> Q^k picking the listed coordinates in order.
RMat coordinate_map(std::size_t total, const std::vector<std::size_t>& coords);

/// begin, begin+1, ..., end-1.
std::vector<std::size_t> index_range(std::size_t begin, std::size_t end);

/// {x ∈ Q^head : (x, tail) ∈ K}.
ConvexPoly slice(const Cone& k, std::size_t head, const RVec& tail);
PolySet slice(const ConeUnion& k, std::size_t head, const RVec& tail);

/// The same point set as a union of polyhedra.
PolySet as_polyset(const ConeUnion& u);

/// Union of the homogenizations of the pieces.
ConeUnion homogenization(const PolySet& s);

}  // namespace vawrt
