#include "vawrt/cones.hpp"

namespace vawrt {

namespace {

Cone piece_normal(const ConvexPoly& p, const ConvexPoly& c, const RVec& x) {
  RMat rays, lin;
  for (const ConvexPoly* q : {&p, &c}) {
    for (const AffineRow& r : q->ineqs()) {
      if (dot(r.a, x) == r.b) rays.push_back(r.a);
    }
    for (const AffineRow& r : q->eqs()) lin.push_back(r.a);
  }
  return Cone::from_v(x.size(), rays, lin);
}

std::optional<Cone> intersection_normal(const PolySet& omega, const ConvexPoly& wrt, const RVec& x) {
  if (!wrt.contains(x)) return std::nullopt;
  std::optional<Cone> acc;
  for (const ConvexPoly& p : omega.pieces()) {
    if (!p.contains(x)) continue;
    Cone n = piece_normal(p, wrt, x);
    acc = acc ? acc->intersect(n) : n;
  }
  return acc;
}

void check_dims(const PolySet& omega, const ConvexPoly& wrt, const RVec& x) {
  if (omega.dim() != x.size() || wrt.dim() != x.size()) {
    throw DimensionError("normal cone: dimension mismatch");
  }
}

template <typename CellCone>
ConeUnion limiting_from(const PolySet& omega, const ConvexPoly& wrt, const RVec& x, CellCone cell_cone) {
  check_dims(omega, wrt, x);
  if (!omega.contains(x) || !wrt.contains(x)) return ConeUnion::empty(x.size());
  const PolySet c(wrt);
  std::vector<Cone> parts;
  for (const Cell& cell : local_cells({SetRef{&omega}, SetRef{&c}}, x)) {
    if (auto k = cell_cone(omega, wrt, cell.witness)) parts.push_back(*k);
  }
  return ConeUnion(x.size(), std::move(parts));
}

}  // namespace

bool is_interior(const ConvexPoly& c, const RVec& x) {
  for (const AffineRow& r : c.ineqs()) {
    if (is_zero(r.a) ? sgn(r.b) < 0 : dot(r.a, x) >= r.b) return false;
  }
  for (const AffineRow& r : c.eqs()) {
    if (!is_zero(r.a) || sgn(r.b) != 0) return false;
  }
  return true;
}

Cone radial_cone(const ConvexPoly& c, const RVec& x) {
  if (c.dim() != x.size()) throw DimensionError("radial cone: dimension mismatch");
  if (!c.contains(x)) throw PointOutsideError("radial cone: point outside the convex set");
  RMat in, eq;
  for (const AffineRow& r : c.ineqs()) {
    if (dot(r.a, x) == r.b) in.push_back(r.a);
  }
  for (const AffineRow& r : c.eqs()) eq.push_back(r.a);
  return Cone::from_h(x.size(), in, eq);
}

Cone frechet_normal(const PolySet& omega, const RVec& x) {
  const ConvexPoly whole = ConvexPoly::whole(x.size());
  check_dims(omega, whole, x);
  auto n = intersection_normal(omega, whole, x);
  if (!n) throw PointOutsideError("frechet normal: point outside the set");
  return *n;
}

std::optional<Cone> frechet_normal_wrt(const PolySet& omega, const ConvexPoly& wrt, const RVec& x) {
  check_dims(omega, wrt, x);
  auto n = intersection_normal(omega, wrt, x);
  if (!n) return std::nullopt;
  return n->intersect(radial_cone(wrt, x));
}

std::optional<Cone> proximal_normal_wrt(const PolySet& omega, const ConvexPoly& wrt, const RVec& x) {
  return frechet_normal_wrt(omega, wrt, x);
}

ConeUnion limiting_normal_wrt(const PolySet& omega, const ConvexPoly& wrt, const RVec& x) {
  return limiting_from(omega, wrt, x, frechet_normal_wrt);
}

ConeUnion limiting_normal_wrt_from_proximal(const PolySet& omega, const ConvexPoly& wrt, const RVec& x) {
  return limiting_from(omega, wrt, x, proximal_normal_wrt);
}

ConeUnion normal_cone(const ConeRequest& r) {
  switch (r.kind) {
    case ConeKind::kLimiting: return limiting_normal_wrt(r.omega, r.wrt, r.point);
    case ConeKind::kFrechet:
    case ConeKind::kProximal: {
      auto c = r.kind == ConeKind::kFrechet ? frechet_normal_wrt(r.omega, r.wrt, r.point)
                                            : proximal_normal_wrt(r.omega, r.wrt, r.point);
      return c ? ConeUnion(*c) : ConeUnion::empty(r.point.size());
    }
  }
  return ConeUnion::empty(r.point.size());
}

bool proximal_inequality_holds(const Cone& cone, const RVec& base, const std::vector<RVec>& samples) {
  const RMat gens = cone.generators();
  for (const RVec& s : samples) {
    const RVec d = sub(s, base);
    for (const RVec& g : gens) {
      if (sgn(dot(g, d)) > 0) return false;
    }
  }
  return true;
}

}  // namespace vawrt
