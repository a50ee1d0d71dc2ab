#pragma once

#include <cstddef>

#include "vawrt/cones.hpp"
#include "vawrt/verdict.hpp"

namespace vawrt {

/// Set-valued map Q^n ⇉ Q^m given by its graph in Q^(n+m).
struct PolyMultimap {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  PolySet graph = PolySet::empty(0);

  PolyMultimap(std::size_t n, std::size_t m, PolySet g);

  bool in_graph(const RVec& x, const RVec& y) const;
  /// F(x) as a subset of Q^m.
  PolySet value(const RVec& x) const;
  PolySet domain() const;
};

/// Single-valued linear map x ↦ A x.
PolyMultimap linear_map(const RMat& a, std::size_t in_dim);

/// {x : F(x) ∩ Θ ≠ ∅}.
PolySet preimage_set(const PolyMultimap& f, const PolySet& theta);

/// (x,y) ↦ F2(F1(x)) composed through the fiber product.
PolyMultimap compose(const PolyMultimap& inner, const PolyMultimap& outer);

/// x ↦ F1(x) + F2(x). Throws std::length_error beyond `max_pieces`.
PolyMultimap multimap_sum(const PolyMultimap& f1, const PolyMultimap& f2, std::size_t max_pieces = 4096);

/// N_{C×R^m}((x,y), gph F) in Q^(n+m).
ConeUnion coderivative_cone(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y);

struct CoderivativeSlice {
  RVec x, y, ystar;
  PolySet value = PolySet::empty(0);
};

/// D*_C F(x,y)(y*) = {x* : (x*, -y*) ∈ N_{C×R^m}((x,y), gph F)}.
CoderivativeSlice coderivative_wrt(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                                   const RVec& ystar);

/// D*_C F(x,y)(0) as a cone union in Q^n.
ConeUnion coderivative_at_zero(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y);

/// ker D*_C F(x,y) = {y* : 0 ∈ D*_C F(x,y)(y*)} as a cone union in Q^m.
ConeUnion coderivative_kernel(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y);

/// Holds iff D*_C F(x,y)(0) = {0}; a nonzero x* certifies failure.
TriVerdict aubin_wrt_check(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y);

enum class InnerMode { kSemicompact, kSemicontinuous, kClosedGraph };

/// Side conditions on F wrt C at x (and y for the semicontinuous mode).
TriVerdict inner_regularity_check(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                                  InnerMode mode);

struct SumRuleInput {
  PolyMultimap f1, f2;
  ConvexPoly c1, c2;
  RVec x, y1, y2, ystar;
};

/// D*_C(F1+F2)(x,y)(y*) ⊂ D*_{C1}F1(x,y1)(y*) + D*_{C2}F2(x,y2)(y*), C = C1∩C2.
/// With `semicompact` the rhs is the union over cell representatives of
/// S(x, y1+y2).
RuleReport sum_rule(const SumRuleInput& in, bool semicompact = false);

struct ChainRuleInput {
  PolyMultimap g;  // Q^n ⇉ Q^m
  PolyMultimap f;  // Q^m ⇉ Q^s
  ConvexPoly c;    // in Q^n
  RVec x, y, z, zstar;
};

/// D*_C(F∘G)(x,z)(z*) ⊂ D*_C G(x,y) ∘ D*F(y,z)(z*).
/// With `semicompact` the rhs is the union over cell representatives of
/// G(x) ∩ F^{-1}(z).
RuleReport chain_rule(const ChainRuleInput& in, bool semicompact = false);

}  // namespace vawrt
