#include "vawrt/polyhedron.hpp"

#include <algorithm>

namespace vawrt {

namespace {

void check_rows(std::size_t dim, const std::vector<AffineRow>& rows) {
  for (const AffineRow& r : rows) {
    if (r.a.size() != dim) throw DimensionError("polyhedron row has wrong length");
  }
}

bool zero_row_ok(const AffineRow& r, bool equality) {
  return equality ? sgn(r.b) == 0 : sgn(r.b) >= 0;
}

RMat selector(std::size_t dim, std::size_t begin, std::size_t count) {
  RMat m;
  for (std::size_t i = 0; i < count; ++i) m.push_back(unit(dim, begin + i));
  return m;
}

}  // namespace

RMat identity(std::size_t n) { return selector(n, 0, n); }

RMat coordinate_map(std::size_t total, const std::vector<std::size_t>& coords) {
  RMat m;
  for (std::size_t i : coords) m.push_back(unit(total, i));
  return m;
}

std::vector<std::size_t> index_range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

ConvexPoly::ConvexPoly(std::size_t dim, std::vector<AffineRow> ineqs, std::vector<AffineRow> eqs)
    : dim_(dim), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
  check_rows(dim_, ineqs_);
  check_rows(dim_, eqs_);
}

ConvexPoly ConvexPoly::whole(std::size_t dim) { return ConvexPoly(dim, {}, {}); }

ConvexPoly ConvexPoly::point(const RVec& x) {
  std::vector<AffineRow> eqs;
  for (std::size_t i = 0; i < x.size(); ++i) eqs.push_back({unit(x.size(), i), x[i]});
  return ConvexPoly(x.size(), {}, std::move(eqs));
}

ConvexPoly ConvexPoly::from_homogenization(const Cone& k) {
  const std::size_t n = k.dim() - 1;
  std::vector<AffineRow> in, eq;
  for (const RVec& a : k.ineqs()) {
    AffineRow r{slice(a, 0, n), -a[n]};
    if (is_zero(r.a) && zero_row_ok(r, false)) continue;
    in.push_back(std::move(r));
  }
  for (const RVec& e : k.eqs()) {
    AffineRow r{slice(e, 0, n), -e[n]};
    if (is_zero(r.a) && zero_row_ok(r, true)) continue;
    eq.push_back(std::move(r));
  }
  return ConvexPoly(n, std::move(in), std::move(eq));
}

ConvexPoly ConvexPoly::product(const ConvexPoly& a, const ConvexPoly& b) {
  const std::size_t n = a.dim_ + b.dim_;
  ConvexPoly ea = a.embed(n, 0);
  ConvexPoly eb = b.embed(n, a.dim_);
  return ea.intersect(eb);
}

lp::System ConvexPoly::system() const { return lp::System{dim_, ineqs_, eqs_}; }

bool ConvexPoly::contains(const RVec& x) const {
  if (x.size() != dim_) throw DimensionError("polyhedron membership: wrong length");
  for (const AffineRow& r : ineqs_) {
    if (dot(r.a, x) > r.b) return false;
  }
  for (const AffineRow& r : eqs_) {
    if (dot(r.a, x) != r.b) return false;
  }
  return true;
}

bool ConvexPoly::is_empty() const { return !some_point().has_value(); }

std::optional<RVec> ConvexPoly::some_point() const { return lp::feasible_point(system()); }

bool ConvexPoly::is_whole_space() const {
  return std::all_of(ineqs_.begin(), ineqs_.end(),
                     [](const AffineRow& r) { return is_zero(r.a) && zero_row_ok(r, false); }) &&
         std::all_of(eqs_.begin(), eqs_.end(),
                     [](const AffineRow& r) { return is_zero(r.a) && zero_row_ok(r, true); });
}

bool ConvexPoly::is_full_dim() const {
  lp::System sys;
  sys.dim = dim_;
  std::vector<AffineRow> strict;
  for (const AffineRow& r : eqs_) {
    if (!is_zero(r.a) || !zero_row_ok(r, true)) return false;
  }
  for (const AffineRow& r : ineqs_) {
    if (is_zero(r.a)) {
      if (!zero_row_ok(r, false)) return false;
      continue;
    }
    strict.push_back(r);
  }
  return lp::strictly_feasible_point(sys, strict).has_value();
}

std::vector<AffineRow> ConvexPoly::active_ineqs(const RVec& x) const {
  std::vector<AffineRow> out;
  for (const AffineRow& r : ineqs_) {
    if (dot(r.a, x) == r.b) out.push_back(r);
  }
  return out;
}

Cone ConvexPoly::homogenization() const {
  RMat in, eq;
  for (const AffineRow& r : ineqs_) {
    RVec a = r.a;
    a.push_back(-r.b);
    in.push_back(std::move(a));
  }
  for (const AffineRow& r : eqs_) {
    RVec e = r.a;
    e.push_back(-r.b);
    eq.push_back(std::move(e));
  }
  RVec t = zeros(dim_ + 1);
  t[dim_] = -1;
  in.push_back(std::move(t));
  return Cone::from_h(dim_ + 1, in, eq);
}

ConvexPoly ConvexPoly::canonical() const { return from_homogenization(homogenization()); }

bool ConvexPoly::same_set(const ConvexPoly& other) const {
  const bool e1 = is_empty(), e2 = other.is_empty();
  if (e1 || e2) return e1 == e2;
  return homogenization() == other.homogenization();
}

bool ConvexPoly::subset_of(const ConvexPoly& other) const {
  if (is_empty()) return true;
  if (other.is_empty()) return false;
  return homogenization().subset_of(other.homogenization());
}

ConvexPoly ConvexPoly::intersect(const ConvexPoly& other) const {
  if (dim_ != other.dim_) throw DimensionError("polyhedron intersect: dimension mismatch");
  std::vector<AffineRow> in = ineqs_, eq = eqs_;
  in.insert(in.end(), other.ineqs_.begin(), other.ineqs_.end());
  eq.insert(eq.end(), other.eqs_.begin(), other.eqs_.end());
  return ConvexPoly(dim_, std::move(in), std::move(eq));
}

ConvexPoly ConvexPoly::embed(std::size_t total, std::size_t offset) const {
  if (offset + dim_ > total) throw DimensionError("polyhedron embed out of range");
  auto lift = [&](const AffineRow& r) {
    RVec a = zeros(total);
    std::copy(r.a.begin(), r.a.end(), a.begin() + static_cast<std::ptrdiff_t>(offset));
    return AffineRow{std::move(a), r.b};
  };
  std::vector<AffineRow> in, eq;
  for (const AffineRow& r : ineqs_) in.push_back(lift(r));
  for (const AffineRow& r : eqs_) eq.push_back(lift(r));
  return ConvexPoly(total, std::move(in), std::move(eq));
}

ConvexPoly ConvexPoly::preimage(const RMat& m, const RVec& s, std::size_t in_dim) const {
  if (m.size() != dim_ || s.size() != dim_) throw DimensionError("polyhedron preimage: shape mismatch");
  auto pull = [&](const AffineRow& r) {
    RVec a = zeros(in_dim);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(r.a[i]) == 0) continue;
      for (std::size_t j = 0; j < in_dim; ++j) a[j] += r.a[i] * m[i][j];
    }
    return AffineRow{std::move(a), r.b - dot(r.a, s)};
  };
  std::vector<AffineRow> in, eq;
  for (const AffineRow& r : ineqs_) in.push_back(pull(r));
  for (const AffineRow& r : eqs_) eq.push_back(pull(r));
  return ConvexPoly(in_dim, std::move(in), std::move(eq));
}

ConvexPoly ConvexPoly::image(const RMat& m) const {
  RMat lifted;
  for (const RVec& row : m) {
    if (row.size() != dim_) throw DimensionError("polyhedron image: matrix width mismatch");
    RVec r = row;
    r.push_back(0);
    lifted.push_back(std::move(r));
  }
  lifted.push_back(unit(dim_ + 1, dim_));
  return from_homogenization(homogenization().image(lifted));
}

ConvexPoly ConvexPoly::project(std::size_t begin, std::size_t count) const {
  return image(selector(dim_, begin, count));
}

ConvexPoly ConvexPoly::sum(const ConvexPoly& other) const {
  if (dim_ != other.dim_) throw DimensionError("polyhedron sum: dimension mismatch");
  RMat m;
  for (std::size_t i = 0; i < dim_; ++i) {
    RVec r = zeros(2 * dim_);
    r[i] = 1;
    r[dim_ + i] = 1;
    m.push_back(std::move(r));
  }
  return product(*this, other).image(m);
}

PolySet::PolySet(std::size_t dim, std::vector<ConvexPoly> pieces) : dim_(dim) {
  for (ConvexPoly& p : pieces) {
    if (p.dim() != dim) throw DimensionError("polyset: piece dimension mismatch");
    if (!p.is_empty()) pieces_.push_back(std::move(p));
  }
}

PolySet::PolySet(const ConvexPoly& piece) : PolySet(piece.dim(), {piece}) {}

bool PolySet::contains(const RVec& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const ConvexPoly& p) { return p.contains(x); });
}

PolySet PolySet::intersect(const PolySet& other) const {
  if (dim_ != other.dim_) throw DimensionError("polyset intersect: dimension mismatch");
  std::vector<ConvexPoly> out;
  for (const ConvexPoly& a : pieces_) {
    for (const ConvexPoly& b : other.pieces_) out.push_back(a.intersect(b));
  }
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::intersect(const ConvexPoly& c) const { return intersect(PolySet(c)); }

PolySet PolySet::unite(const PolySet& other) const {
  if (dim_ != other.dim_) throw DimensionError("polyset unite: dimension mismatch");
  std::vector<ConvexPoly> out = pieces_;
  out.insert(out.end(), other.pieces_.begin(), other.pieces_.end());
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::product(const PolySet& a, const PolySet& b) {
  std::vector<ConvexPoly> out;
  for (const ConvexPoly& x : a.pieces_) {
    for (const ConvexPoly& y : b.pieces_) out.push_back(ConvexPoly::product(x, y));
  }
  return PolySet(a.dim_ + b.dim_, std::move(out));
}

PolySet PolySet::embed(std::size_t total, std::size_t offset) const {
  std::vector<ConvexPoly> out;
  for (const ConvexPoly& p : pieces_) out.push_back(p.embed(total, offset));
  return PolySet(total, std::move(out));
}

PolySet PolySet::preimage(const RMat& m, const RVec& s, std::size_t in_dim) const {
  std::vector<ConvexPoly> out;
  for (const ConvexPoly& p : pieces_) out.push_back(p.preimage(m, s, in_dim));
  return PolySet(in_dim, std::move(out));
}

PolySet PolySet::image(const RMat& m) const {
  std::vector<ConvexPoly> out;
  for (const ConvexPoly& p : pieces_) out.push_back(p.image(m));
  return PolySet(m.size(), std::move(out));
}

PolySet PolySet::project(std::size_t begin, std::size_t count) const {
  return image(selector(dim_, begin, count));
}

PolySet PolySet::sum(const PolySet& other) const {
  if (dim_ != other.dim_) throw DimensionError("polyset sum: dimension mismatch");
  std::vector<ConvexPoly> out;
  for (const ConvexPoly& a : pieces_) {
    for (const ConvexPoly& b : other.pieces_) out.push_back(a.sum(b));
  }
  return PolySet(dim_, std::move(out));
}

PolySet as_polyset(const ConeUnion& u) {
  std::vector<ConvexPoly> pieces;
  for (const Cone& c : u.parts()) {
    std::vector<AffineRow> in, eq;
    for (const RVec& a : c.ineqs()) in.push_back({a, 0});
    for (const RVec& e : c.eqs()) eq.push_back({e, 0});
    pieces.emplace_back(u.dim(), std::move(in), std::move(eq));
  }
  return PolySet(u.dim(), std::move(pieces));
}

ConeUnion homogenization(const PolySet& s) {
  std::vector<Cone> parts;
  for (const ConvexPoly& p : s.pieces()) parts.push_back(p.homogenization());
  return ConeUnion(s.dim() + 1, std::move(parts));
}

std::optional<RVec> PolySet::point_outside(const PolySet& other) const {
  if (dim_ != other.dim_) throw DimensionError("polyset subset: dimension mismatch");
  if (pieces_.empty()) return std::nullopt;
  if (other.pieces_.empty()) return pieces_.front().some_point();
  const ConeUnion hb = homogenization(other);
  for (const ConvexPoly& p : pieces_) {
    const Cone hp = p.homogenization();
    auto w = cone_minus_union(hp, hb.parts());
    if (!w) continue;
    // Push an uncovered point off t = 0 while staying outside the closed union.
    RVec lifted = *p.some_point();
    lifted.push_back(1);
    RVec v = *w;
    Rat eps = 1;
    while (sgn(v[dim_]) == 0 || hb.contains(v)) {
      v = add(*w, scale(lifted, eps));
      eps /= 2;
    }
    RVec x = slice(v, 0, dim_);
    return scale(x, 1 / v[dim_]);
  }
  return std::nullopt;
}

bool PolySet::subset_of(const PolySet& other) const { return !point_outside(other).has_value(); }

bool PolySet::same_set(const PolySet& other) const { return subset_of(other) && other.subset_of(*this); }

std::vector<std::size_t> active_pieces(const PolySet& s, const RVec& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    if (s.pieces()[i].contains(x)) out.push_back(i);
  }
  return out;
}

ConvexPoly slice(const Cone& k, std::size_t head, const RVec& tail) {
  if (head + tail.size() != k.dim()) throw DimensionError("cone slice: shape mismatch");
  std::vector<AffineRow> in, eq;
  for (const RVec& a : k.ineqs()) {
    in.push_back({vawrt::slice(a, 0, head), -dot(vawrt::slice(a, head, tail.size()), tail)});
  }
  for (const RVec& e : k.eqs()) {
    eq.push_back({vawrt::slice(e, 0, head), -dot(vawrt::slice(e, head, tail.size()), tail)});
  }
  return ConvexPoly(head, std::move(in), std::move(eq));
}

PolySet slice(const ConeUnion& k, std::size_t head, const RVec& tail) {
  std::vector<ConvexPoly> out;
  for (const Cone& c : k.parts()) out.push_back(slice(c, head, tail));
  return PolySet(head, std::move(out));
}

}  // namespace vawrt
