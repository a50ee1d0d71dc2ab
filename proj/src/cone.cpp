#include "vawrt/cone.hpp"

#include <algorithm>

namespace vawrt {

namespace {

RMat canonical_rays(const RMat& rays, const RMat& lineality) {
  RMat out;
  for (const RVec& r : rays) {
    RVec p = primitive(project_out(r, lineality));
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  sort_unique(out);
  return out;
}

void check(std::size_t dim, const RMat& rows) {
  for (const RVec& r : rows) {
    if (r.size() != dim) throw DimensionError("cone row has wrong length");
  }
}

RMat transpose_apply(const RMat& rows, const RMat& m, std::size_t in_dim) {
  // rows a over the output space; returns a·M over the input space.
  RMat out;
  for (const RVec& a : rows) {
    RVec r = zeros(in_dim);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < in_dim; ++j) r[j] += a[i] * m[i][j];
    }
    out.push_back(std::move(r));
  }
  return out;
}

RVec apply(const RMat& m, const RVec& v) {
  RVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

}  // namespace

Cone Cone::finish(std::size_t dim, const Generators& g) {
  Cone c;
  c.dim_ = dim;
  c.lineality_ = row_space_basis(g.lineality, dim);
  c.rays_ = canonical_rays(g.rays, c.lineality_);
  const Generators polar = dd_generators(dim, c.rays_, c.lineality_);
  c.eqs_ = row_space_basis(polar.lineality, dim);
  c.ineqs_ = canonical_rays(polar.rays, c.eqs_);
  return c;
}

Cone Cone::from_h(std::size_t dim, const RMat& ineqs, const RMat& eqs) {
  check(dim, ineqs);
  check(dim, eqs);
  return finish(dim, dd_generators(dim, ineqs, eqs));
}

Cone Cone::from_v(std::size_t dim, const RMat& rays, const RMat& lineality) {
  check(dim, rays);
  check(dim, lineality);
  // H of the cone = generators of its polar; V recomputed from that H so
  // redundant input generators disappear.
  const Generators polar = dd_generators(dim, rays, lineality);
  return finish(dim, dd_generators(dim, polar.rays, polar.lineality));
}

Cone Cone::whole(std::size_t dim) { return from_h(dim, {}, {}); }

Cone Cone::origin(std::size_t dim) {
  RMat id;
  for (std::size_t i = 0; i < dim; ++i) id.push_back(unit(dim, i));
  return from_h(dim, {}, id);
}

bool Cone::contains(const RVec& v) const {
  if (v.size() != dim_) throw DimensionError("cone membership: wrong length");
  for (const RVec& e : eqs_) {
    if (sgn(dot(e, v)) != 0) return false;
  }
  for (const RVec& a : ineqs_) {
    if (sgn(dot(a, v)) > 0) return false;
  }
  return true;
}

bool Cone::contains_relint(const RVec& v) const {
  if (!contains(v)) return false;
  return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const RVec& a) { return sgn(dot(a, v)) < 0; });
}

bool Cone::subset_of(const Cone& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone subset: dimension mismatch");
  for (const RVec& r : rays_) {
    if (!other.contains(r)) return false;
  }
  for (const RVec& l : lineality_) {
    if (!other.contains(l) || !other.contains(negate(l))) return false;
  }
  return true;
}

RVec Cone::relint_point() const {
  RVec p = zeros(dim_);
  for (const RVec& r : rays_) p = add(p, r);
  return p;
}

RMat Cone::generators() const {
  RMat g = rays_;
  for (const RVec& l : lineality_) {
    g.push_back(l);
    g.push_back(negate(l));
  }
  return g;
}

Cone Cone::polar() const {
  Cone p;
  p.dim_ = dim_;
  p.ineqs_ = rays_;
  p.eqs_ = lineality_;
  p.rays_ = ineqs_;
  p.lineality_ = eqs_;
  return p;
}

Cone Cone::negated() const {
  Cone n;
  n.dim_ = dim_;
  n.eqs_ = eqs_;
  n.lineality_ = lineality_;
  for (const RVec& a : ineqs_) n.ineqs_.push_back(negate(a));
  for (const RVec& r : rays_) n.rays_.push_back(negate(r));
  sort_unique(n.ineqs_);
  sort_unique(n.rays_);
  return n;
}

Cone Cone::intersect(const Cone& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone intersect: dimension mismatch");
  if (subset_of(other)) return *this;
  if (other.subset_of(*this)) return other;
  RMat in = ineqs_;
  in.insert(in.end(), other.ineqs_.begin(), other.ineqs_.end());
  RMat eq = eqs_;
  eq.insert(eq.end(), other.eqs_.begin(), other.eqs_.end());
  return from_h(dim_, in, eq);
}

Cone Cone::sum(const Cone& other) const {
  if (dim_ != other.dim_) throw DimensionError("cone sum: dimension mismatch");
  if (subset_of(other)) return other;
  if (other.subset_of(*this)) return *this;
  RMat r = rays_;
  r.insert(r.end(), other.rays_.begin(), other.rays_.end());
  RMat l = lineality_;
  l.insert(l.end(), other.lineality_.begin(), other.lineality_.end());
  return from_v(dim_, r, l);
}

Cone Cone::image(const RMat& m) const {
  for (const RVec& row : m) {
    if (row.size() != dim_) throw DimensionError("cone image: matrix width mismatch");
  }
  RMat r, l;
  for (const RVec& v : rays_) r.push_back(apply(m, v));
  for (const RVec& v : lineality_) l.push_back(apply(m, v));
  return from_v(m.size(), r, l);
}

Cone Cone::preimage(const RMat& m, std::size_t in_dim) const {
  if (m.size() != dim_) throw DimensionError("cone preimage: matrix height mismatch");
  return from_h(in_dim, transpose_apply(ineqs_, m, in_dim), transpose_apply(eqs_, m, in_dim));
}

Cone Cone::project(std::size_t begin, std::size_t count) const {
  RMat r, l;
  for (const RVec& v : rays_) r.push_back(slice(v, begin, count));
  for (const RVec& v : lineality_) l.push_back(slice(v, begin, count));
  return from_v(count, r, l);
}

Cone Cone::product(const Cone& a, const Cone& b) {
  const std::size_t n = a.dim_ + b.dim_;
  RMat r, l;
  for (const RVec& v : a.rays_) r.push_back(concat(v, zeros(b.dim_)));
  for (const RVec& v : b.rays_) r.push_back(concat(zeros(a.dim_), v));
  for (const RVec& v : a.lineality_) l.push_back(concat(v, zeros(b.dim_)));
  for (const RVec& v : b.lineality_) l.push_back(concat(zeros(a.dim_), v));
  return from_v(n, r, l);
}

std::strong_ordering Cone::operator<=>(const Cone& other) const {
  if (auto c = dim_ <=> other.dim_; c != 0) return c;
  auto cmp_mat = [](const RMat& x, const RMat& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = lex_compare(x[i], y[i]); c != 0) return c;
    }
    return x.size() <=> y.size();
  };
  if (auto c = cmp_mat(eqs_, other.eqs_); c != 0) return c;
  if (auto c = cmp_mat(ineqs_, other.ineqs_); c != 0) return c;
  if (auto c = cmp_mat(lineality_, other.lineality_); c != 0) return c;
  return cmp_mat(rays_, other.rays_);
}

}  // namespace vawrt
