#include "vawrt/multimaps.hpp"

#include <stdexcept>

#include "vawrt/calculus.hpp"

namespace vawrt {

namespace {

PolySet fiber(const PolySet& graph, std::size_t n, std::size_t m, const RVec& x) {
  RMat tail(n, zeros(m));
  for (std::size_t i = 0; i < m; ++i) tail.push_back(unit(m, i));
  return graph.preimage(tail, concat(x, zeros(m)), m);
}

}  // namespace

PolyMultimap::PolyMultimap(std::size_t n, std::size_t m, PolySet g) : in_dim(n), out_dim(m), graph(std::move(g)) {
  if (graph.dim() != n + m) throw DimensionError("multimap graph dimension must be in_dim + out_dim");
}

bool PolyMultimap::in_graph(const RVec& x, const RVec& y) const {
  if (x.size() != in_dim || y.size() != out_dim) throw DimensionError("multimap point has wrong shape");
  return graph.contains(concat(x, y));
}

PolySet PolyMultimap::value(const RVec& x) const {
  if (x.size() != in_dim) throw DimensionError("multimap argument has wrong length");
  return fiber(graph, in_dim, out_dim, x);
}

PolySet PolyMultimap::domain() const { return graph.project(0, in_dim); }

PolyMultimap linear_map(const RMat& a, std::size_t in_dim) {
  std::vector<AffineRow> eqs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != in_dim) throw DimensionError("linear map: row length mismatch");
    eqs.push_back({concat(negate(a[i]), unit(a.size(), i)), 0});
  }
  return PolyMultimap(in_dim, a.size(), PolySet(ConvexPoly(in_dim + a.size(), {}, std::move(eqs))));
}

PolySet preimage_set(const PolyMultimap& f, const PolySet& theta) {
  if (theta.dim() != f.out_dim) throw DimensionError("preimage: target set dimension mismatch");
  const std::size_t total = f.in_dim + f.out_dim;
  return f.graph.intersect(theta.embed(total, f.in_dim)).project(0, f.in_dim);
}

PolyMultimap compose(const PolyMultimap& inner, const PolyMultimap& outer) {
  if (inner.out_dim != outer.in_dim) throw DimensionError("compose: inner output must match outer input");
  const std::size_t n = inner.in_dim, m = inner.out_dim, s = outer.out_dim;
  const std::size_t total = n + m + s;
  const PolySet fp = inner.graph.embed(total, 0).intersect(outer.graph.embed(total, n));
  std::vector<std::size_t> keep = index_range(0, n);
  for (std::size_t i = n + m; i < total; ++i) keep.push_back(i);
  return PolyMultimap(n, s, fp.image(coordinate_map(total, keep)));
}

PolyMultimap multimap_sum(const PolyMultimap& f1, const PolyMultimap& f2, std::size_t max_pieces) {
  if (f1.in_dim != f2.in_dim || f1.out_dim != f2.out_dim) throw DimensionError("sum: shape mismatch");
  const std::size_t n = f1.in_dim, m = f1.out_dim, total = n + 2 * m;
  if (f1.graph.pieces().size() * f2.graph.pieces().size() > max_pieces) {
    throw std::length_error("sum: piece count exceeds the configured limit");
  }
  std::vector<std::size_t> x2 = index_range(0, n);
  for (std::size_t i = n + m; i < total; ++i) x2.push_back(i);
  const RMat pick2 = coordinate_map(total, x2);
  RMat add_map = coordinate_map(total, index_range(0, n));
  for (std::size_t i = 0; i < m; ++i) {
    RVec r = zeros(total);
    r[n + i] = 1;
    r[n + m + i] = 1;
    add_map.push_back(std::move(r));
  }
  std::vector<ConvexPoly> pieces;
  for (const ConvexPoly& p1 : f1.graph.pieces()) {
    const ConvexPoly a = p1.embed(total, 0);
    for (const ConvexPoly& p2 : f2.graph.pieces()) {
      const ConvexPoly joint = a.intersect(p2.preimage(pick2, zeros(n + m), total));
      if (joint.is_empty()) continue;
      pieces.push_back(joint.image(add_map));
    }
  }
  return PolyMultimap(n, m, PolySet(n + m, std::move(pieces)));
}

ConeUnion coderivative_cone(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y) {
  if (c.dim() != f.in_dim) throw DimensionError("coderivative: wrt set dimension mismatch");
  const ConvexPoly lifted = ConvexPoly::product(c, ConvexPoly::whole(f.out_dim));
  return limiting_normal_wrt(f.graph, lifted, concat(x, y));
}

CoderivativeSlice coderivative_wrt(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                                   const RVec& ystar) {
  if (!f.in_graph(x, y)) throw std::invalid_argument("coderivative: base point off the graph");
  if (ystar.size() != f.out_dim) throw DimensionError("coderivative: y* has wrong length");
  const ConeUnion n = coderivative_cone(f, c, x, y);
  return CoderivativeSlice{x, y, ystar, slice(n, f.in_dim, negate(ystar))};
}

ConeUnion coderivative_at_zero(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y) {
  const std::size_t n = f.in_dim, m = f.out_dim;
  RMat map = identity(n);
  for (std::size_t i = 0; i < m; ++i) map.push_back(zeros(n));
  return coderivative_cone(f, c, x, y).preimage(map, n);
}

ConeUnion coderivative_kernel(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y) {
  const std::size_t n = f.in_dim, m = f.out_dim;
  RMat map(n, zeros(m));
  for (std::size_t i = 0; i < m; ++i) map.push_back(scale(unit(m, i), -1));
  return coderivative_cone(f, c, x, y).preimage(map, m);
}

TriVerdict aubin_wrt_check(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y) {
  if (!f.in_graph(x, y)) throw std::invalid_argument("aubin check: base point off the graph");
  if (!c.contains(x)) throw std::invalid_argument("aubin check: base point outside the wrt set");
  const ConeUnion d0 = coderivative_at_zero(f, c, x, y);
  if (d0.is_zero()) return TriVerdict::holding("D*F(x,y)(0) = {0}");
  return TriVerdict::failing(*nonzero_member(d0), "D*F(x,y)(0) contains a nonzero x*");
}

TriVerdict inner_regularity_check(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                                  InnerMode mode) {
  switch (mode) {
    case InnerMode::kClosedGraph:
      return TriVerdict::holding("finite union of closed polyhedra has a closed graph");
    case InnerMode::kSemicompact:
      return TriVerdict::holding("each graph piece has Lipschitz fibers on its closed domain");
    case InnerMode::kSemicontinuous: break;
  }
  if (c.dim() != f.in_dim || x.size() != f.in_dim || y.size() != f.out_dim) {
    throw DimensionError("inner semicontinuity: shape mismatch");
  }
  // Locally dom F ∩ C is x + ⋃ T(x, dom P ∩ C); a selection tending to y
  // exists along a direction iff it lies in some T(x, dom P) with (x,y) ∈ P.
  const RVec xy = concat(x, y);
  std::vector<Cone> all, good;
  for (const ConvexPoly& p : f.graph.pieces()) {
    const ConvexPoly dom = p.project(0, f.in_dim);
    const ConvexPoly dc = dom.intersect(c);
    if (dc.contains(x)) all.push_back(radial_cone(dc, x));
    if (p.contains(xy)) good.push_back(radial_cone(dom, x));
  }
  const ConeUnion lhs(f.in_dim, std::move(all));
  const ConeUnion rhs(f.in_dim, std::move(good));
  const SubsetResult r = lhs.subset_of(rhs);
  if (r.holds) return TriVerdict::holding("every domain direction admits a selection through the base");
  return TriVerdict::failing(*r.witness, "domain direction with no selection converging to y");
}

namespace {

/// Lifted sets Ω_i = {(x,y1,y2) : (x,y_i) ∈ gph F_i}.
PolySet lift_sum(const PolyMultimap& f, std::size_t which) {
  const std::size_t n = f.in_dim, m = f.out_dim, total = n + 2 * m;
  std::vector<std::size_t> coords = index_range(0, n);
  const std::size_t off = n + which * m;
  for (std::size_t i = 0; i < m; ++i) coords.push_back(off + i);
  return f.graph.preimage(coordinate_map(total, coords), zeros(n + m), total);
}

}  // namespace

RuleReport sum_rule(const SumRuleInput& in, bool semicompact) {
  const PolyMultimap& f1 = in.f1;
  const PolyMultimap& f2 = in.f2;
  const std::size_t n = f1.in_dim, m = f1.out_dim;
  if (f2.in_dim != n || f2.out_dim != m) throw DimensionError("sum rule: shape mismatch");
  if (!f1.in_graph(in.x, in.y1) || !f2.in_graph(in.x, in.y2)) {
    throw std::invalid_argument("sum rule: (x, y_i) must lie in gph F_i");
  }
  if (!in.c1.contains(in.x) || !in.c2.contains(in.x)) {
    throw std::invalid_argument("sum rule: x must lie in C1 and C2");
  }
  const ConvexPoly c = in.c1.intersect(in.c2);
  const RVec y = add(in.y1, in.y2);
  const PolyMultimap fs = multimap_sum(f1, f2);
  const PolySet lhs = coderivative_wrt(fs, c, in.x, y, in.ystar).value;

  const PolySet om1 = lift_sum(f1, 0), om2 = lift_sum(f2, 1);
  std::vector<RVec> reps;
  if (semicompact) {
    const RMat tail = [&] {
      RMat t(n, zeros(2 * m));
      for (std::size_t i = 0; i < 2 * m; ++i) t.push_back(unit(2 * m, i));
      return t;
    }();
    const RVec shift = concat(in.x, zeros(2 * m));
    const PolySet s1 = om1.preimage(tail, shift, 2 * m);
    const PolySet s2 = om2.preimage(tail, shift, 2 * m);
    std::vector<AffineRow> eqs;
    for (std::size_t i = 0; i < m; ++i) {
      RVec a = zeros(2 * m);
      a[i] = 1;
      a[m + i] = 1;
      eqs.push_back({a, y[i]});
    }
    const PolySet split(ConvexPoly(2 * m, {}, eqs));
    reps = cell_representatives({SetRef{&s1}, SetRef{&s2}, SetRef{&split}});
  } else {
    reps.push_back(concat(in.y1, in.y2));
  }

  const ConvexPoly lift1 = ConvexPoly::product(in.c1, ConvexPoly::whole(2 * m));
  const ConvexPoly lift2 = ConvexPoly::product(in.c2, ConvexPoly::whole(2 * m));
  std::vector<std::pair<RVec, TriVerdict>> q1s, q2s;
  PolySet rhs = PolySet::empty(n);
  for (const RVec& rep : reps) {
    const RVec y1 = slice(rep, 0, m), y2 = slice(rep, m, m);
    q1s.push_back({rep, zero_meet(coderivative_at_zero(f1, in.c1, in.x, y1),
                                          coderivative_at_zero(f2, in.c2, in.x, y2).negated(),
                                          "D*F1(0) ∩ -D*F2(0)")});
    q2s.push_back({rep, normal_densed_check(SetPair{om1, om2, lift1, lift2}, concat(in.x, rep))});
    const PolySet d1 = coderivative_wrt(f1, in.c1, in.x, y1, in.ystar).value;
    const PolySet d2 = coderivative_wrt(f2, in.c2, in.x, y2, in.ystar).value;
    rhs = rhs.unite(d1.sum(d2));
  }

  // S(x,y) = {(y1,y2) : y1 ∈ F1(x), y2 ∈ F2(x), y1 + y2 = y}.
  const std::size_t total = n + 3 * m;
  std::vector<std::size_t> c1 = index_range(0, n), c2 = index_range(0, n);
  for (std::size_t i = 0; i < m; ++i) {
    c1.push_back(n + m + i);
    c2.push_back(n + 2 * m + i);
  }
  std::vector<AffineRow> eqs;
  for (std::size_t i = 0; i < m; ++i) {
    RVec a = zeros(total);
    a[n + i] = -1;
    a[n + m + i] = 1;
    a[n + 2 * m + i] = 1;
    eqs.push_back({a, 0});
  }
  const PolySet sgraph = f1.graph.preimage(coordinate_map(total, c1), zeros(n + m), total)
                             .intersect(f2.graph.preimage(coordinate_map(total, c2), zeros(n + m), total))
                             .intersect(ConvexPoly(total, {}, eqs));
  const PolyMultimap s(n + m, 2 * m, sgraph);
  const ConvexPoly cs = ConvexPoly::product(c, ConvexPoly::whole(m));
  TriVerdict side = semicompact
                        ? inner_regularity_check(s, cs, concat(in.x, y), {}, InnerMode::kSemicompact)
                        : inner_regularity_check(s, cs, concat(in.x, y), concat(in.y1, in.y2),
                                                 InnerMode::kSemicontinuous);
  std::vector<Qualification> quals{
      {"q1", worst_of(q1s, "(y1,y2)")},
      {"q2", worst_of(q2s, "(y1,y2)")},
      {semicompact ? "S inner semicompact" : "S inner semicontinuous", side},
  };
  return make_report(semicompact ? "sum-semicompact" : "sum", compare("coderivative sum", lhs, rhs, false),
                     std::move(quals));
}

namespace {

/// ⋃ over parts of {x* : (x*,-y*) ∈ A, (y*,-z*) ∈ B}, the composed
/// coderivative D*_C G(x,y) ∘ D*F(y,z)(z*).
PolySet compose_coderivatives(const ConeUnion& ng, const ConeUnion& nf, std::size_t n, std::size_t m,
                              const RVec& zstar) {
  const std::size_t s = zstar.size();
  std::vector<ConvexPoly> pieces;
  for (const Cone& a : ng.parts()) {
    for (const Cone& b : nf.parts()) {
      std::vector<AffineRow> in, eq;
      auto from_a = [&](const RVec& r) {
        RVec row = slice(r, 0, n);
        for (std::size_t i = 0; i < m; ++i) row.push_back(-r[n + i]);
        return AffineRow{row, 0};
      };
      auto from_b = [&](const RVec& r) {
        RVec row = zeros(n);
        for (std::size_t i = 0; i < m; ++i) row.push_back(r[i]);
        return AffineRow{row, dot(slice(r, m, s), zstar)};
      };
      for (const RVec& r : a.ineqs()) in.push_back(from_a(r));
      for (const RVec& r : a.eqs()) eq.push_back(from_a(r));
      for (const RVec& r : b.ineqs()) in.push_back(from_b(r));
      for (const RVec& r : b.eqs()) eq.push_back(from_b(r));
      const ConvexPoly joint(n + m, std::move(in), std::move(eq));
      if (joint.is_empty()) continue;
      pieces.push_back(joint.project(0, n));
    }
  }
  return PolySet(n, std::move(pieces));
}

}  // namespace

RuleReport chain_rule(const ChainRuleInput& in, bool semicompact) {
  const PolyMultimap& g = in.g;
  const PolyMultimap& f = in.f;
  const std::size_t n = g.in_dim, m = g.out_dim, s = f.out_dim;
  if (f.in_dim != m) throw DimensionError("chain rule: G output must match F input");
  if (!g.in_graph(in.x, in.y) || !f.in_graph(in.y, in.z)) {
    throw std::invalid_argument("chain rule: need (x,y) ∈ gph G and (y,z) ∈ gph F");
  }
  if (!in.c.contains(in.x)) throw std::invalid_argument("chain rule: x must lie in C");
  const PolyMultimap fg = compose(g, f);
  const PolySet lhs = coderivative_wrt(fg, in.c, in.x, in.z, in.zstar).value;

  std::vector<RVec> reps;
  if (semicompact) {
    const PolySet gx = g.value(in.x);
    RMat head;
    for (std::size_t i = 0; i < m; ++i) head.push_back(unit(m, i));
    for (std::size_t i = 0; i < s; ++i) head.push_back(zeros(m));
    const PolySet finv = f.graph.preimage(head, concat(zeros(m), in.z), m);
    reps = cell_representatives({SetRef{&gx}, SetRef{&finv}});
  } else {
    reps.push_back(in.y);
  }

  const std::size_t total = n + m + s;
  const PolySet theta1 = g.graph.embed(total, 0);
  const PolySet theta2 = f.graph.embed(total, n);
  const ConvexPoly lift = ConvexPoly::product(in.c, ConvexPoly::whole(m + s));
  const ConvexPoly whole_m = ConvexPoly::whole(m);
  std::vector<std::pair<RVec, TriVerdict>> q1s, q2s;
  PolySet rhs = PolySet::empty(n);
  for (const RVec& y : reps) {
    q1s.push_back({y, zero_meet(coderivative_at_zero(f, whole_m, y, in.z),
                                        coderivative_kernel(g, in.c, in.x, y), "D*F(0) ∩ ker D*_C G")});
    q2s.push_back({y, normal_densed_check(SetPair{theta1, theta2, lift, ConvexPoly::whole(total)},
                                          concat(concat(in.x, y), in.z))});
    rhs = rhs.unite(compose_coderivatives(coderivative_cone(g, in.c, in.x, y),
                                          coderivative_cone(f, whole_m, y, in.z), n, m, in.zstar));
  }

  // S(x,z) = G(x) ∩ F^{-1}(z) with graph coordinates (x,z,y).
  std::vector<std::size_t> order = index_range(0, n);
  for (std::size_t i = n + m; i < total; ++i) order.push_back(i);
  for (std::size_t i = n; i < n + m; ++i) order.push_back(i);
  const PolySet sgraph = theta1.intersect(theta2).image(coordinate_map(total, order));
  const PolyMultimap sm(n + s, m, sgraph);
  const ConvexPoly cs = ConvexPoly::product(in.c, ConvexPoly::whole(s));
  const RVec xz = concat(in.x, in.z);
  TriVerdict side = semicompact ? inner_regularity_check(sm, cs, xz, {}, InnerMode::kSemicompact)
                                : inner_regularity_check(sm, cs, xz, in.y, InnerMode::kSemicontinuous);
  std::vector<Qualification> quals{
      {"q1", worst_of(q1s, "y")},
      {"q2", worst_of(q2s, "y")},
      {semicompact ? "S inner semicompact" : "S inner semicontinuous", side},
  };
  return make_report(semicompact ? "chain-semicompact" : "chain",
                     compare("coderivative chain", lhs, rhs, false), std::move(quals));
}

}  // namespace vawrt
