#pragma once

#include "vawrt/multimaps.hpp"

namespace vawrt {

struct SetPair {
  PolySet omega1, omega2;
  ConvexPoly c1, c2;
};

/// N_{C1}(x,Ω1) ∩ (-N_{C2}(x,Ω2)) = {0}.
TriVerdict lqc_wrt_check(const SetPair& s, const RVec& x);

struct DensedLimits {
  int max_coefficient_total = 8;
};

/// Finite cell test of normal-densedness. On failure the certificate is a
/// sum x1*+x2* with no representation in N_{C1}(x,Ω1)+N_{C2}(x,Ω2), or, for
/// the nonzero-representation clause, x1* with certificate2 = x2* = -x1*.
TriVerdict normal_densed_check(const SetPair& s, const RVec& x, const DensedLimits& lim = {});

/// N_C(x,Ω1∩Ω2) ⊂ N_{C1}(x,Ω1) + N_{C2}(x,Ω2), C = C1∩C2. When C2 is a
/// neighborhood of x the identity N_C(x,Ω) = N_{C1}(x,Ω) is added to `extra`.
RuleReport intersection_rule(const SetPair& s, const RVec& x);

/// N_{C1×C2}((x1,x2), Ω1×Ω2) = N_{C1}(x1,Ω1) × N_{C2}(x2,Ω2); the limiting
/// identity is the main comparison, the Fréchet one goes to `extra`.
RuleReport product_rule(const PolySet& omega1, const ConvexPoly& c1, const RVec& x1, const PolySet& omega2,
                        const ConvexPoly& c2, const RVec& x2);

enum class MixedReading {
  kProof,      // (x*,z*) ∈ N_{C1}((x,z),Ω1)
  kStatement,  // (x*,y*) ∈ N_{C1}((x,z),Ω1); needs m = s, z* free
};

struct MixedInput {
  PolySet omega1;  // in Q^(n+s), coordinates (x,z)
  ConvexPoly c1;
  PolySet omega2;  // in Q^m
  ConvexPoly c2;
  RVec x, y, z;
};

/// Sets Ω = {(x,y,z) : (x,z) ∈ Ω1, y ∈ Ω2} and likewise C.
PolySet mixed_set(const PolySet& omega1, const PolySet& omega2, std::size_t n);

RuleReport mixed_product_rule(const MixedInput& in, MixedReading reading = MixedReading::kProof);

/// N_C(x, F^{-1}(Θ)) ⊂ ⋃{D*_C F(x,y)(y*) : y* ∈ N(y,Θ), y ∈ F(x)∩Θ}.
RuleReport preimage_rule(const PolyMultimap& f, const PolySet& theta, const ConvexPoly& c, const RVec& x);

}  // namespace vawrt
