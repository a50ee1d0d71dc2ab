#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "vawrt/mpec.hpp"

namespace vawrt::test {

inline RVec v(std::initializer_list<const char*> entries) {
  RVec out;
  for (const char* e : entries) out.push_back(parse_rat(e));
  return out;
}

inline AffineRow row(std::initializer_list<const char*> a, const char* b) { return {v(a), parse_rat(b)}; }

inline ConvexPoly poly(std::size_t dim, std::vector<AffineRow> in, std::vector<AffineRow> eq = {}) {
  return ConvexPoly(dim, std::move(in), std::move(eq));
}

inline Cone cone_h(std::size_t dim, const RMat& in, const RMat& eq = {}) { return Cone::from_h(dim, in, eq); }
inline Cone cone_v(std::size_t dim, const RMat& rays, const RMat& lin = {}) {
  return Cone::from_v(dim, rays, lin);
}

/// Omega1 = {x <= z}, Omega2 = {x >= 0, y >= 0}, C = {x >= 0}, C1 = R^3; coordinates (x, y, z).
struct WedgePair {
  PolySet omega1 = PolySet(poly(3, {row({"1", "0", "-1"}, "0")}));
  PolySet omega2 = PolySet(poly(3, {row({"-1", "0", "0"}, "0"), row({"0", "-1", "0"}, "0")}));
  ConvexPoly c = poly(3, {row({"-1", "0", "0"}, "0")});
  ConvexPoly c1 = ConvexPoly::whole(3);
  RVec origin = v({"0", "0", "0"});
};

/// Constraint map G(x) = R_+ for x ≥ 0 (empty otherwise), f(x) = x.
struct ConstraintMap {
  PolyMultimap g = PolyMultimap(1, 1, PolySet(poly(2, {row({"-1", "0"}, "0"), row({"0", "-1"}, "0")})));
  PLFunc f = PLFunc::max_affine({row({"1"}, "0")}, ConvexPoly::whole(1));
  ConvexPoly half = poly(1, {row({"-1"}, "0")});
  ConvexPoly line = ConvexPoly::whole(1);
  RVec zero = v({"0"});

  MPECProblem first() const { return MPECProblem{f, g, half, half}; }
  MPECProblem second() const { return MPECProblem{f, g, line, half}; }
};

}  // namespace vawrt::test
