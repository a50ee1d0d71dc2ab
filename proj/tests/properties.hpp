#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vawrt/calculus.hpp"
#include "vawrt/mpec.hpp"

namespace vawrt::test {

/// Seeded source of small polyhedral instances. Every set, map and
/// function it builds passes through the requested base point.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int num, int den) { return uniform(1, den) <= num; }

  RVec vec(std::size_t n, int lo, int hi) {
    RVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Rat(uniform(lo, hi)));
    return v;
  }
  RVec nonzero(std::size_t n, int bound = 2) {
    RVec v;
    do v = vec(n, -bound, bound);
    while (is_zero(v));
    return v;
  }
  RVec point(std::size_t n) { return vec(n, -1, 1); }

  /// Up to three rows through `base` (active) or strictly above it.
  ConvexPoly piece(const RVec& base) {
    const std::size_t n = base.size();
    std::vector<AffineRow> in, eq;
    const int rows = uniform(1, 3);
    for (int i = 0; i < rows; ++i) {
      RVec a = nonzero(n);
      const Rat at = dot(a, base);
      if (n > 1 && chance(1, 6)) {
        eq.push_back({std::move(a), at});
      } else {
        in.push_back({std::move(a), chance(2, 3) ? at : at + uniform(1, 2)});
      }
    }
    return ConvexPoly(n, std::move(in), std::move(eq));
  }

  /// One to four pieces through `base`, sometimes with one extra piece
  /// whose closure may miss it.
  PolySet set(const RVec& base) {
    std::vector<ConvexPoly> ps;
    const int k = uniform(1, 3);
    for (int i = 0; i < k; ++i) ps.push_back(piece(base));
    if (chance(1, 4)) {
      RVec shifted = base;
      shifted[0] += 1;
      ps.push_back(piece(shifted));
    }
    return PolySet(base.size(), std::move(ps));
  }

  /// Whole space, a halfspace active or inactive at `base`, or a wedge.
  ConvexPoly wrt(const RVec& base) {
    const std::size_t n = base.size();
    switch (uniform(0, 3)) {
      case 0: return ConvexPoly::whole(n);
      case 1: {
        RVec a = nonzero(n, 1);
        const Rat b = dot(a, base);
        return ConvexPoly(n, {{std::move(a), b}});
      }
      case 2: {
        RVec a = nonzero(n, 1);
        const Rat b = dot(a, base) + 1;
        return ConvexPoly(n, {{std::move(a), b}});
      }
      default: {
        RVec a = nonzero(n, 1), c = nonzero(n, 1);
        const Rat b = dot(a, base), d = dot(c, base);
        return ConvexPoly(n, {{std::move(a), b}, {std::move(c), d}});
      }
    }
  }

  Cone cone(std::size_t n) {
    RMat rays, lin;
    const int k = uniform(1, 3);
    for (int i = 0; i < k; ++i) rays.push_back(nonzero(n));
    if (n > 1 && chance(1, 5)) lin.push_back(nonzero(n));
    return Cone::from_v(n, rays, lin);
  }

  PolyMultimap map(const RVec& x, const RVec& y) {
    return PolyMultimap(x.size(), y.size(), set(concat(x, y)));
  }

  /// Minimum of one or two max-affine functions, all finite at `base`.
  PLFunc function(const RVec& base) {
    const std::size_t n = base.size();
    std::vector<ConvexPoly> pieces;
    const int k = uniform(1, 2);
    for (int i = 0; i < k; ++i) {
      std::vector<AffineRow> aff;
      const int m = uniform(1, 2);
      for (int j = 0; j < m; ++j) aff.push_back({vec(n, -2, 2), Rat(uniform(-1, 1))});
      ConvexPoly dom = chance(1, 2) ? ConvexPoly::whole(n) : wrt(base);
      pieces.push_back(PLFunc::max_affine(aff, dom).epi().pieces().front());
    }
    return PLFunc(n, PolySet(n + 1, std::move(pieces)));
  }

 private:
  std::mt19937_64 rng_;
};

struct SuiteResult {
  int instances = 0;
  long checks = 0;
  int guarded = 0;  // instances whose hypotheses all held
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

inline std::string tag(std::uint64_t seed, int i, const char* what) {
  std::ostringstream s;
  s << what << " (seed " << seed << ", instance " << i << ")";
  return s.str();
}

/// Inclusion chain, convexity, Limsup equality, product-rule equalities,
/// subdifferential/coderivative agreement, polar involution and dd round trip.
inline SuiteResult structural_suite(std::uint64_t seed, int count) {
  SuiteResult r;
  InstanceGen g(seed);
  for (int i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    const RVec x = g.point(n);
    const PolySet omega = g.set(x);
    const ConvexPoly c = g.wrt(x);
    const auto prox = proximal_normal_wrt(omega, c, x);
    const auto fre = frechet_normal_wrt(omega, c, x);
    const ConeUnion lim = limiting_normal_wrt(omega, c, x);
    r.check(prox && fre && *prox == *fre, tag(seed, i, "proximal = Fréchet"));
    if (fre) {
      r.check(ConeUnion(*fre).subset_of(lim).holds, tag(seed, i, "Fréchet ⊂ limiting"));
      const RMat gens = fre->generators();
      for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a; b < gens.size(); ++b) {
          RVec s = gens[a];
          for (std::size_t k = 0; k < n; ++k) s[k] += gens[b][k];
          r.check(fre->contains(s), tag(seed, i, "Fréchet cone convex"));
        }
      }
      r.check(fre->subset_of(frechet_normal(omega.intersect(c), x)), tag(seed, i, "Fréchet wrt ⊂ Fréchet of Ω∩C"));
    }
    for (const Cone& part : lim.parts()) {
      r.check(part.contains(zeros(n)), tag(seed, i, "limiting part contains 0"));
      for (const RVec& ray : part.rays()) {
        RVec twice = ray;
        for (Rat& q : twice) q *= 2;
        r.check(part.contains(twice), tag(seed, i, "limiting part scale invariant"));
      }
    }
    r.check(limiting_normal_wrt_from_proximal(omega, c, x).same_set(lim), tag(seed, i, "proximal Limsup = Fréchet Limsup"));
    r.check(*frechet_normal_wrt(omega, ConvexPoly::whole(n), x) == frechet_normal(omega, x),
            tag(seed, i, "whole-space reduction"));

    const Cone k = g.cone(n);
    r.check(k.polar().polar() == k, tag(seed, i, "polar involution"));
    r.check(Cone::from_h(n, k.ineqs(), k.eqs()) == k, tag(seed, i, "H round trip"));
    r.check(Cone::from_v(n, k.rays(), k.lineality()) == k, tag(seed, i, "V round trip"));

    const RVec x1 = g.point(1), x2 = g.point(n == 3 ? 2 : n);
    const RuleReport prod = product_rule(g.set(x1), g.wrt(x1), x1, g.set(x2), g.wrt(x2), x2);
    r.check(prod.inclusion_holds, tag(seed, i, "limiting product equality"));
    for (const Comparison& e : prod.extra) r.check(e.holds, tag(seed, i, "Fréchet product equality"));

    const RVec mx = g.point(1), my = g.point(1), mz = g.point(1);
    const RVec xz = concat(mx, mz);
    const MixedInput mi{g.set(xz), g.wrt(xz), g.set(my), g.wrt(my), mx, my, mz};
    const RuleReport mixed = mixed_product_rule(mi);
    r.check(mixed.inclusion_holds, tag(seed, i, "mixed product equality"));
    for (const Comparison& e : mixed.extra) r.check(e.holds, tag(seed, i, "mixed Fréchet equality"));

    const std::size_t fn = static_cast<std::size_t>(g.uniform(1, 2));
    const RVec fx = g.point(fn);
    const PLFunc f = g.function(fx);
    const ConvexPoly fc = g.wrt(fx);
    for (SubdiffKind kind : {SubdiffKind::kLimiting, SubdiffKind::kHorizon}) {
      r.check(subdiff_wrt(f, fc, fx, kind).value.same_set(subdiff_via_coderivative(f, fc, fx, kind).value),
              tag(seed, i, "subdifferential = coderivative of the epigraphical map"));
    }
  }
  return r;
}

/// Intersection, preimage, sum and chain rules on instances where every
/// hypothesis check returns Holds.
inline SuiteResult guarded_rule_suite(std::uint64_t seed, int count) {
  SuiteResult r;
  InstanceGen g(seed);
  auto guarded = [&](const RuleReport& rep, int i, const char* what) {
    if (!rep.hypotheses_hold()) return;
    ++r.guarded;
    r.check(rep.inclusion_holds, tag(seed, i, what));
    for (const Comparison& e : rep.extra) r.check(e.holds, tag(seed, i, what));
  };
  for (int i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    const RVec x = g.point(n);
    guarded(intersection_rule(SetPair{g.set(x), g.set(x), g.wrt(x), g.wrt(x)}, x), i, "intersection rule");

    const std::size_t pn = static_cast<std::size_t>(g.uniform(1, 2)), pm = static_cast<std::size_t>(g.uniform(1, 2));
    const RVec px = g.point(pn), py = g.point(pm);
    guarded(preimage_rule(g.map(px, py), g.set(py), g.wrt(px), px), i, "preimage rule");

    const RVec sx = g.point(1), y1 = g.point(1), y2 = g.point(1);
    const SumRuleInput sum{g.map(sx, y1), g.map(sx, y2), g.wrt(sx), g.wrt(sx), sx, y1, y2, g.vec(1, -2, 2)};
    guarded(sum_rule(sum, g.chance(1, 2)), i, "sum rule");

    const RVec cx = g.point(1), cy = g.point(1), cz = g.point(1);
    const ChainRuleInput chain{g.map(cx, cy), g.map(cy, cz), g.wrt(cx), cx, cy, cz, g.vec(1, -2, 2)};
    guarded(chain_rule(chain, g.chance(1, 2)), i, "chain rule");
  }
  return r;
}

}  // namespace vawrt::test
