#include "vawrt/plfunc.hpp"

#include <stdexcept>

namespace vawrt {

namespace {

/// {x* : (x*, t) ∈ K} read off the H-representation of K.
ConvexPoly last_slice(const Cone& k, std::size_t n, const Rat& t) {
  std::vector<AffineRow> in, eq;
  for (const RVec& a : k.ineqs()) in.push_back({slice(a, 0, n), -a[n] * t});
  for (const RVec& e : k.eqs()) eq.push_back({slice(e, 0, n), -e[n] * t});
  return ConvexPoly(n, std::move(in), std::move(eq));
}

struct Base {
  RVec point;
  ConvexPoly lifted;
};

std::optional<Base> base_point(const PLFunc& f, const ConvexPoly& c, const RVec& x) {
  if (c.dim() != f.dim() || x.size() != f.dim()) throw DimensionError("subdifferential: dimension mismatch");
  if (!c.contains(x)) return std::nullopt;
  auto fx = f.value(x);
  if (!fx) return std::nullopt;
  RVec p = x;
  p.push_back(*fx);
  return Base{std::move(p), ConvexPoly::product(c, ConvexPoly::whole(1))};
}

Rat slice_level(SubdiffKind kind) { return kind == SubdiffKind::kHorizon ? Rat(0) : Rat(-1); }

}  // namespace

PLFunc::PLFunc(std::size_t n, PolySet epi) : dim_(n), epi_(std::move(epi)) {
  if (epi_.dim() != n + 1) throw DimensionError("epigraph must live in dimension n + 1");
  for (const ConvexPoly& p : epi_.pieces()) {
    for (const AffineRow& r : p.ineqs()) {
      if (sgn(r.a[n]) > 0) throw std::invalid_argument("epigraph piece does not recede along (0, 1)");
    }
    for (const AffineRow& r : p.eqs()) {
      if (sgn(r.a[n]) != 0) throw std::invalid_argument("epigraph piece does not recede along (0, 1)");
    }
  }
}

PLFunc PLFunc::max_affine(const std::vector<AffineRow>& pieces, const ConvexPoly& dom) {
  const std::size_t n = dom.dim();
  std::vector<AffineRow> in, eq;
  for (const AffineRow& p : pieces) {
    if (p.a.size() != n) throw DimensionError("affine piece has wrong length");
    RVec a = p.a;
    a.push_back(-1);
    in.push_back({std::move(a), -p.b});
  }
  for (const AffineRow& r : dom.ineqs()) in.push_back({concat(r.a, zeros(1)), r.b});
  for (const AffineRow& r : dom.eqs()) eq.push_back({concat(r.a, zeros(1)), r.b});
  return PLFunc(n, PolySet(ConvexPoly(n + 1, std::move(in), std::move(eq))));
}

std::optional<Rat> PLFunc::value(const RVec& x) const {
  if (x.size() != dim_) throw DimensionError("function argument has wrong length");
  std::optional<Rat> best;
  RMat last(dim_, zeros(1));
  last.push_back(unit(1, 0));
  const RVec shift = concat(x, zeros(1));
  for (const ConvexPoly& p : epi_.pieces()) {
    const ConvexPoly fib = p.preimage(last, shift, 1);
    const lp::Result r = lp::maximize(fib.system(), RVec{Rat(-1)});
    if (r.status == lp::Status::kInfeasible) continue;
    if (r.status == lp::Status::kUnbounded) throw std::domain_error("function is -infinity at the point");
    const Rat v = -r.value;
    if (!best || v < *best) best = v;
  }
  return best;
}

SubdiffResult subdiff_wrt(const PLFunc& f, const ConvexPoly& c, const RVec& x, SubdiffKind kind) {
  const std::size_t n = f.dim();
  SubdiffResult out{kind, PolySet::empty(n)};
  auto b = base_point(f, c, x);
  if (!b) return out;
  const Rat t = slice_level(kind);
  std::vector<ConvexPoly> pieces;
  if (kind == SubdiffKind::kFrechet) {
    pieces.push_back(last_slice(*frechet_normal_wrt(f.epi(), b->lifted, b->point), n, t));
  } else {
    const ConeUnion lim = limiting_normal_wrt(f.epi(), b->lifted, b->point);
    for (const Cone& k : lim.parts()) {
      pieces.push_back(last_slice(k, n, t));
    }
  }
  out.value = PolySet(n, std::move(pieces));
  return out;
}

SubdiffResult subdiff_via_coderivative(const PLFunc& f, const ConvexPoly& c, const RVec& x, SubdiffKind kind) {
  const std::size_t n = f.dim();
  SubdiffResult out{kind, PolySet::empty(n)};
  if (kind == SubdiffKind::kFrechet) throw std::invalid_argument("coderivative route covers limiting and horizon");
  auto b = base_point(f, c, x);
  if (!b) return out;
  const RVec ystar{kind == SubdiffKind::kHorizon ? Rat(0) : Rat(1)};
  out.value = coderivative_wrt(f.epigraphical(), c, x, slice(b->point, n, 1), ystar).value;
  return out;
}

ConeUnion horizon_cone(const PLFunc& f, const ConvexPoly& c, const RVec& x) {
  const std::size_t n = f.dim();
  auto b = base_point(f, c, x);
  if (!b) return ConeUnion::empty(n);
  RMat drop = identity(n);
  for (RVec& r : drop) r.resize(n, Rat(0));
  drop.push_back(zeros(n));
  return limiting_normal_wrt(f.epi(), b->lifted, b->point).preimage(drop, n);
}

TriVerdict lipschitz_wrt_check(const PLFunc& f, const ConvexPoly& c, const RVec& x) {
  if (!c.contains(x) || !f.value(x)) throw std::invalid_argument("lipschitz check: x must lie in dom f ∩ C");
  return zero_meet(horizon_cone(f, c, x), ConeUnion(Cone::whole(f.dim())), "horizon subdifferential");
}

FermatReport fermat_check(const PLFunc& f, const ConvexPoly& c, const RVec& x) {
  if (!c.contains(x) || !f.value(x)) throw std::invalid_argument("fermat check: x must lie in dom f ∩ C");
  const RVec zero = zeros(f.dim());
  FermatReport r;
  r.is_stationary_frechet = subdiff_wrt(f, c, x, SubdiffKind::kFrechet).value.contains(zero);
  r.is_stationary_limiting = subdiff_wrt(f, c, x, SubdiffKind::kLimiting).value.contains(zero);
  r.certified_non_minimizer = !r.is_stationary_frechet;
  return r;
}

}  // namespace vawrt
