#pragma once

#include <optional>

#include "vawrt/stratify.hpp"

namespace vawrt {

enum class ConeKind { kProximal, kFrechet, kLimiting };

struct ConeRequest {
  PolySet omega;
  ConvexPoly wrt;  // ConvexPoly::whole(n) for the whole space
  RVec point;
  ConeKind kind = ConeKind::kLimiting;
};

class PointOutsideError : public std::invalid_argument {
 public:
  explicit PointOutsideError(const std::string& what) : std::invalid_argument(what) {}
};

/// True iff some ball around x lies in c.
bool is_interior(const ConvexPoly& c, const RVec& x);

/// {d : a·d ≤ 0 for inequalities active at x, e·d = 0 for equalities}.
Cone radial_cone(const ConvexPoly& c, const RVec& x);

/// Classical Fréchet normal cone of a polyhedral union.
Cone frechet_normal(const PolySet& omega, const RVec& x);

/// N̂(x, Ω∩C) ∩ R(x, C); nullopt when x ∉ Ω∩C.
std::optional<Cone> frechet_normal_wrt(const PolySet& omega, const ConvexPoly& wrt, const RVec& x);

/// Same object as the Fréchet cone for polyhedral data; kept separate.
std::optional<Cone> proximal_normal_wrt(const PolySet& omega, const ConvexPoly& wrt, const RVec& x);

/// Union of Fréchet-wrt cones over the local cells of Ω∩C at x; empty
/// union when x ∉ Ω∩C.
ConeUnion limiting_normal_wrt(const PolySet& omega, const ConvexPoly& wrt, const RVec& x);

/// Limiting cone assembled from proximal cell cones instead.
ConeUnion limiting_normal_wrt_from_proximal(const PolySet& omega, const ConvexPoly& wrt, const RVec& x);

/// Dispatch on r.kind; single-cone kinds come back as a one-part union.
ConeUnion normal_cone(const ConeRequest& r);

/// Exact check of the proximal inequality ⟨x*, x−x̄⟩ ≤ 0 for every generator
/// x* of `cone` over the given sample points near x̄.
bool proximal_inequality_holds(const Cone& cone, const RVec& base, const std::vector<RVec>& samples);

}  // namespace vawrt
