#include "vawrt/calculus.hpp"

#include <stdexcept>

namespace vawrt {

namespace {

void require_common_point(const SetPair& s, const RVec& x) {
  const std::size_t n = x.size();
  if (s.omega1.dim() != n || s.omega2.dim() != n || s.c1.dim() != n || s.c2.dim() != n) {
    throw DimensionError("set pair: dimension mismatch");
  }
  if (!s.omega1.contains(x) || !s.omega2.contains(x) || !s.c1.contains(x) || !s.c2.contains(x)) {
    throw std::invalid_argument("point must lie in Ω1 ∩ Ω2 ∩ C1 ∩ C2");
  }
}

RMat all_generators(const ConeUnion& u) {
  RMat out;
  for (const Cone& c : u.parts()) {
    for (RVec& g : c.generators()) out.push_back(std::move(g));
  }
  sort_unique(out);
  return out;
}

/// Outer limit of R(w, C) over points w of Ω ∩ bd C near x.
ConeUnion boundary_radial_limit(const SetPair& s, const ConvexPoly& c, const RVec& x) {
  const PolySet cs(c);
  const bool full = c.is_full_dim();
  std::vector<Cone> parts;
  for (const Cell& cell : local_cells({SetRef{&s.omega1}, SetRef{&s.omega2}, SetRef{&cs}}, x)) {
    bool boundary = !full;
    for (const AffineRow& r : c.ineqs()) {
      if (!is_zero(r.a) && dot(r.a, cell.witness) == r.b) boundary = true;
    }
    if (boundary) parts.push_back(radial_cone(c, cell.witness));
  }
  return ConeUnion(x.size(), std::move(parts));
}

/// Small combination c1 g1 + c2 g2 of generators of L1 and L2 landing in
/// `achievable` but outside `target`; relative interiors of the radial
/// limit parts are tried first.
std::optional<RVec> small_certificate(const ConeUnion& l1, const ConeUnion& l2, const ConeUnion& rlim,
                                      const ConeUnion& achievable, const ConeUnion& target, int max_total) {
  const RMat g1 = all_generators(l1), g2 = all_generators(l2);
  const RVec zero = zeros(achievable.dim());
  auto in_relint = [&](const RVec& v) {
    for (const Cone& p : rlim.parts()) {
      if (p.contains_relint(v)) return true;
    }
    return false;
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (int total = 1; total <= max_total; ++total) {
      for (int c1 = 0; c1 <= total; ++c1) {
        const int c2 = total - c1;
        const std::size_t n1 = c1 == 0 ? 1 : g1.size(), n2 = c2 == 0 ? 1 : g2.size();
        for (std::size_t i = 0; i < n1; ++i) {
          for (std::size_t j = 0; j < n2; ++j) {
            const RVec a = c1 == 0 ? zero : scale(g1[i], c1);
            const RVec b = c2 == 0 ? zero : scale(g2[j], c2);
            const RVec v = add(a, b);
            if (is_zero(v) || !achievable.contains(v) || target.contains(v)) continue;
            if (pass == 0 && !in_relint(v)) continue;
            return v;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TriVerdict lqc_wrt_check(const SetPair& s, const RVec& x) {
  require_common_point(s, x);
  const ConeUnion n1 = limiting_normal_wrt(s.omega1, s.c1, x);
  const ConeUnion n2 = limiting_normal_wrt(s.omega2, s.c2, x);
  TriVerdict v = zero_meet(n1, n2.negated(), "N_C1(x,Ω1) ∩ -N_C2(x,Ω2)");
  if (v.certificate) v.certificate2 = negate(*v.certificate);
  return v;
}

TriVerdict normal_densed_check(const SetPair& s, const RVec& x, const DensedLimits& lim) {
  require_common_point(s, x);
  const std::size_t n = x.size();
  if (is_interior(s.c1, x) && is_interior(s.c2, x)) {
    return TriVerdict::holding("x is interior to C1 and C2");
  }
  const ConvexPoly c = s.c1.intersect(s.c2);
  const ConeUnion rlim = boundary_radial_limit(s, c, x);
  if (rlim.is_empty()) return TriVerdict::holding("no points of Ω ∩ bd C near x");

  const ConvexPoly whole = ConvexPoly::whole(n);
  const ConeUnion l1 = limiting_normal_wrt(s.omega1.intersect(s.c1), whole, x);
  const ConeUnion l2 = limiting_normal_wrt(s.omega2.intersect(s.c2), whole, x);
  const ConeUnion w1 = limiting_normal_wrt(s.omega1, s.c1, x);
  const ConeUnion w2 = limiting_normal_wrt(s.omega2, s.c2, x);

  const ConeUnion achievable = l1.minkowski_sum(l2).intersect(rlim);
  const ConeUnion target = w1.minkowski_sum(w2);
  const SubsetResult sub = achievable.subset_of(target);
  if (!sub.holds) {
    auto cert = small_certificate(l1, l2, rlim, achievable, target, lim.max_coefficient_total);
    return TriVerdict::failing(cert ? *cert : *sub.witness,
                               "achievable sum x1*+x2* outside N_C1(x,Ω1)+N_C2(x,Ω2)");
  }
  const ConeUnion opposed = l1.intersect(l2.negated());
  if (!opposed.is_zero() && !opposed.is_empty()) {
    const ConeUnion rep = w1.intersect(w2.negated());
    if (rep.is_zero() || rep.is_empty()) {
      TriVerdict v = TriVerdict::failing(*nonzero_member(opposed),
                                         "nonzero pair (x1*, -x1*) but 0 has no nonzero representation");
      v.certificate2 = negate(*v.certificate);
      return v;
    }
  }
  return TriVerdict::holding("every achievable limit pair has a representation");
}

RuleReport intersection_rule(const SetPair& s, const RVec& x) {
  require_common_point(s, x);
  const TriVerdict lqc = lqc_wrt_check(s, x);
  const TriVerdict nd = normal_densed_check(s, x);
  const PolySet omega = s.omega1.intersect(s.omega2);
  const ConvexPoly c = s.c1.intersect(s.c2);
  const ConeUnion lhs = limiting_normal_wrt(omega, c, x);
  const ConeUnion w1 = limiting_normal_wrt(s.omega1, s.c1, x);
  const ConeUnion rhs = w1.minkowski_sum(limiting_normal_wrt(s.omega2, s.c2, x));
  Comparison main = compare("intersection", lhs, rhs, false);
  if (!main.holds && nd.fails() && nd.certificate && lhs.contains(*nd.certificate) &&
      !rhs.contains(*nd.certificate)) {
    main.witness = nd.certificate;
  }
  RuleReport r = make_report("intersection", std::move(main), {{"LQC", lqc}, {"normal-densed", nd}});
  if (is_interior(s.c2, x)) {
    const ConeUnion lhs1 = limiting_normal_wrt(omega, s.c1, x);
    r.extra.push_back(compare("N_C(x,Ω) = N_C1(x,Ω)", lhs, lhs1, true));
    const ConeUnion rhs1 = w1.minkowski_sum(limiting_normal_wrt(s.omega2, ConvexPoly::whole(x.size()), x));
    r.extra.push_back(compare("N_C1(x,Ω) ⊂ N_C1(x,Ω1) + N(x,Ω2)", lhs1, rhs1, false));
  }
  return r;
}

RuleReport product_rule(const PolySet& omega1, const ConvexPoly& c1, const RVec& x1, const PolySet& omega2,
                        const ConvexPoly& c2, const RVec& x2) {
  if (!omega1.contains(x1) || !c1.contains(x1) || !omega2.contains(x2) || !c2.contains(x2)) {
    throw std::invalid_argument("product rule: x_i must lie in Ω_i ∩ C_i");
  }
  const PolySet omega = PolySet::product(omega1, omega2);
  const ConvexPoly c = ConvexPoly::product(c1, c2);
  const RVec x = concat(x1, x2);
  const ConeUnion lhs = limiting_normal_wrt(omega, c, x);
  const ConeUnion rhs =
      ConeUnion::product(limiting_normal_wrt(omega1, c1, x1), limiting_normal_wrt(omega2, c2, x2));
  RuleReport r = make_report("product", compare("limiting product", lhs, rhs, true), {});
  const Cone f = *frechet_normal_wrt(omega, c, x);
  const Cone f1 = *frechet_normal_wrt(omega1, c1, x1);
  const Cone f2 = *frechet_normal_wrt(omega2, c2, x2);
  r.extra.push_back(compare("Fréchet product", ConeUnion(f), ConeUnion(Cone::product(f1, f2)), true));
  return r;
}

PolySet mixed_set(const PolySet& omega1, const PolySet& omega2, std::size_t n) {
  const std::size_t m = omega2.dim();
  const std::size_t s = omega1.dim() - n;
  const std::size_t total = n + m + s;
  std::vector<std::size_t> xz = index_range(0, n);
  for (std::size_t i = n + m; i < total; ++i) xz.push_back(i);
  const PolySet a = omega1.preimage(coordinate_map(total, xz), zeros(n + s), total);
  const PolySet b = omega2.preimage(coordinate_map(total, index_range(n, n + m)), zeros(m), total);
  return a.intersect(b);
}

namespace {

ConvexPoly mixed_convex(const ConvexPoly& c1, const ConvexPoly& c2, std::size_t n) {
  const PolySet m = mixed_set(PolySet(c1), PolySet(c2), n);
  if (m.pieces().size() != 1) throw std::invalid_argument("mixed product: wrt sets must be nonempty");
  return m.pieces().front();
}

template <typename Part>
Part mixed_rhs(const Part& n1, const Part& n2, std::size_t n, std::size_t m, std::size_t s, MixedReading reading) {
  const std::size_t total = n + m + s;
  std::vector<std::size_t> first = index_range(0, n);
  if (reading == MixedReading::kProof) {
    for (std::size_t i = n + m; i < total; ++i) first.push_back(i);
  } else {
    for (std::size_t i = n; i < n + m; ++i) first.push_back(i);
  }
  return n1.preimage(coordinate_map(total, first), total)
      .intersect(n2.preimage(coordinate_map(total, index_range(n, n + m)), total));
}

}  // namespace

RuleReport mixed_product_rule(const MixedInput& in, MixedReading reading) {
  const std::size_t n = in.x.size(), m = in.y.size(), s = in.z.size();
  if (in.omega1.dim() != n + s || in.c1.dim() != n + s || in.omega2.dim() != m || in.c2.dim() != m) {
    throw DimensionError("mixed product: dimension mismatch");
  }
  if (reading == MixedReading::kStatement && m != s) {
    throw std::invalid_argument("mixed product: the statement reading needs dim y = dim z");
  }
  const RVec xz = concat(in.x, in.z);
  if (!in.omega1.contains(xz) || !in.c1.contains(xz) || !in.omega2.contains(in.y) || !in.c2.contains(in.y)) {
    throw std::invalid_argument("mixed product: need (x,z) ∈ Ω1 ∩ C1 and y ∈ Ω2 ∩ C2");
  }
  const PolySet omega = mixed_set(in.omega1, in.omega2, n);
  const ConvexPoly c = mixed_convex(in.c1, in.c2, n);
  const RVec p = concat(concat(in.x, in.y), in.z);
  const ConeUnion lhs = limiting_normal_wrt(omega, c, p);
  const ConeUnion rhs = mixed_rhs(limiting_normal_wrt(in.omega1, in.c1, xz),
                                  limiting_normal_wrt(in.omega2, in.c2, in.y), n, m, s, reading);
  const std::string id = reading == MixedReading::kProof ? "mixed-product" : "mixed-product-statement";
  RuleReport r = make_report(id, compare("limiting mixed product", lhs, rhs, true), {});
  const Cone f = *frechet_normal_wrt(omega, c, p);
  const Cone f1 = *frechet_normal_wrt(in.omega1, in.c1, xz);
  const Cone f2 = *frechet_normal_wrt(in.omega2, in.c2, in.y);
  r.extra.push_back(compare("Fréchet mixed product", ConeUnion(f), ConeUnion(mixed_rhs(f1, f2, n, m, s, reading)), true));
  return r;
}

RuleReport preimage_rule(const PolyMultimap& f, const PolySet& theta, const ConvexPoly& c, const RVec& x) {
  const std::size_t n = f.in_dim, m = f.out_dim;
  if (theta.dim() != m || c.dim() != n || x.size() != n) throw DimensionError("preimage rule: shape mismatch");
  const PolySet pre = preimage_set(f, theta);
  if (!pre.contains(x) || !c.contains(x)) throw std::invalid_argument("preimage rule: x must lie in F^-1(Θ) ∩ C");
  const ConeUnion lhs = limiting_normal_wrt(pre, c, x);

  const PolySet fx = f.value(x);
  const std::vector<RVec> reps = cell_representatives({SetRef{&fx}, SetRef{&theta}});
  const PolySet lifted_theta = theta.embed(n + m, n);
  const ConvexPoly lift = ConvexPoly::product(c, ConvexPoly::whole(m));
  const ConvexPoly whole_m = ConvexPoly::whole(m);
  RMat flip = identity(n);
  for (std::size_t i = 0; i < m; ++i) flip.push_back(scale(unit(n + m, n + i), -1));
  for (std::size_t i = 0; i < n; ++i) flip[i].resize(n + m, Rat(0));
  const RMat tail = coordinate_map(n + m, index_range(n, n + m));

  std::vector<std::pair<RVec, TriVerdict>> kernel, densed;
  std::vector<Cone> parts;
  for (const RVec& y : reps) {
    const ConeUnion nt = limiting_normal_wrt(theta, whole_m, y);
    kernel.push_back({y, zero_meet(nt, coderivative_kernel(f, c, x, y), "N(y,Θ) ∩ ker D*_C F(x,y)")});
    densed.push_back({y, normal_densed_check(SetPair{f.graph, lifted_theta, lift, ConvexPoly::whole(n + m)},
                                             concat(x, y))});
    const ConeUnion nf = coderivative_cone(f, c, x, y);
    for (const Cone& a : nf.parts()) {
      const Cone pulled = a.preimage(flip, n + m);
      for (const Cone& b : nt.parts()) {
        parts.push_back(pulled.intersect(b.preimage(tail, n + m)).project(0, n));
      }
    }
  }
  const ConeUnion rhs(n, std::move(parts));
  const PolyMultimap restricted(n, m, f.graph.intersect(lifted_theta));
  std::vector<Qualification> quals{
      {"kernel condition", worst_of(kernel, "y")},
      {"normal-densed", worst_of(densed, "y")},
      {"F ∩ Θ inner semicompact", inner_regularity_check(restricted, c, x, {}, InnerMode::kSemicompact)},
  };
  return make_report("preimage", compare("preimage", lhs, rhs, false), std::move(quals));
}

}  // namespace vawrt
