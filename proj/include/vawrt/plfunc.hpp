#pragma once

#include <optional>

#include "vawrt/multimaps.hpp"

namespace vawrt {

/// Piecewise-linear extended-real function given by its epigraph in
/// Q^(n+1). Every piece must recede along (0, 1).
class PLFunc {
 public:
  PLFunc(std::size_t n, PolySet epi);
  /// Pointwise maximum of affine functions a·x + b over a polyhedral domain.
  static PLFunc max_affine(const std::vector<AffineRow>& pieces, const ConvexPoly& dom);

  std::size_t dim() const { return dim_; }
  const PolySet& epi() const { return epi_; }
  PolySet domain() const { return epi_.project(0, dim_); }

  /// f(x), or nullopt outside dom f. Throws if f(x) = -∞.
  std::optional<Rat> value(const RVec& x) const;
  /// Epigraphical multimap E^f with gph E^f = epi f.
  PolyMultimap epigraphical() const { return PolyMultimap(dim_, 1, epi_); }

 private:
  std::size_t dim_;
  PolySet epi_;
};

enum class SubdiffKind { kFrechet, kLimiting, kHorizon };

struct SubdiffResult {
  SubdiffKind kind;
  PolySet value = PolySet::empty(0);
};

/// Slices of N_{C×R}((x, f(x)), epi f) at last coordinate -1 or 0; empty
/// outside dom f ∩ C.
SubdiffResult subdiff_wrt(const PLFunc& f, const ConvexPoly& c, const RVec& x, SubdiffKind kind);

/// D*_C E^f(x, f(x))(1), or (0) for the horizon kind.
SubdiffResult subdiff_via_coderivative(const PLFunc& f, const ConvexPoly& c, const RVec& x, SubdiffKind kind);

/// ∂^∞_C f(x) as a cone union.
ConeUnion horizon_cone(const PLFunc& f, const ConvexPoly& c, const RVec& x);

/// Holds iff ∂^∞_C f(x) = {0}.
TriVerdict lipschitz_wrt_check(const PLFunc& f, const ConvexPoly& c, const RVec& x);

struct FermatReport {
  bool is_stationary_frechet = false;
  bool is_stationary_limiting = false;
  /// 0 ∉ Fréchet subdifferential: x is not a local minimizer of f on C.
  bool certified_non_minimizer = false;
};

FermatReport fermat_check(const PLFunc& f, const ConvexPoly& c, const RVec& x);

}  // namespace vawrt
