#include "doctest.h"
#include "support.hpp"
#include "vawrt/calculus.hpp"

using namespace vawrt;
using namespace vawrt::test;

namespace {

SetPair ex1_pair(bool whole_c1) {
  WedgePair e;
  return SetPair{e.omega1, e.omega2, whole_c1 ? e.c1 : e.c, e.c};
}

ConeUnion cone_set(const Cone& c) { return ConeUnion(c); }

}  // namespace

TEST_CASE("LQC holds for both wrt pairs") {
  WedgePair e;
  CHECK(lqc_wrt_check(ex1_pair(false), e.origin).holds());
  CHECK(lqc_wrt_check(ex1_pair(true), e.origin).holds());

  const PolySet pt(ConvexPoly::point(v({"0"})));
  const ConvexPoly line = ConvexPoly::whole(1);
  const TriVerdict t = lqc_wrt_check(SetPair{pt, pt, line, line}, v({"0"}));
  REQUIRE(t.fails());
  CHECK(!is_zero(*t.certificate));
  CHECK(*t.certificate2 == negate(*t.certificate));
}

TEST_CASE("normal-densed verdicts on the two wrt pairs") {
  WedgePair e;
  CHECK(normal_densed_check(ex1_pair(false), e.origin).holds());
  const TriVerdict t = normal_densed_check(ex1_pair(true), e.origin);
  REQUIRE(t.fails());
  CHECK(*t.certificate == v({"1", "0", "-2"}));

  const ConvexPoly whole = ConvexPoly::whole(3);
  const TriVerdict interior = normal_densed_check(SetPair{e.omega1, e.omega2, whole, whole}, e.origin);
  CHECK(interior.holds());
}

TEST_CASE("intersection rule with shared wrt set") {
  WedgePair e;
  const RuleReport r = intersection_rule(ex1_pair(false), e.origin);
  CHECK(r.hypotheses_hold());
  CHECK(r.inclusion_holds);
  // True value of the intersection cone: {w ≤ 0, u ≥ 0, u + v ≤ 0}.
  const Cone expect = cone_h(3, {v({"0", "1", "0"}), v({"-1", "0", "0"}), v({"1", "0", "1"})});
  CHECK(std::get<ConeUnion>(r.lhs).same_set(cone_set(expect)));
}

TEST_CASE("intersection rule failure witness") {
  WedgePair e;
  const RuleReport r = intersection_rule(ex1_pair(true), e.origin);
  CHECK(r.qualifications[0].verdict.holds());
  CHECK(r.qualifications[1].verdict.fails());
  CHECK(!r.inclusion_holds);
  REQUIRE(r.witness);
  CHECK(*r.witness == v({"1", "0", "-2"}));
  const Cone sum = cone_v(3, {v({"1", "0", "-1"}), v({"0", "-1", "0"})});
  CHECK(std::get<ConeUnion>(r.rhs).same_set(cone_set(sum)));
}

TEST_CASE("intersection rule for convex sets without wrt restriction") {
  const PolySet a(poly(2, {row({"-1", "0"}, "0")}));
  const PolySet b(poly(2, {row({"0", "-1"}, "0")}));
  const ConvexPoly w = ConvexPoly::whole(2);
  const RuleReport r = intersection_rule(SetPair{a, b, w, w}, v({"0", "0"}));
  CHECK(r.hypotheses_hold());
  CHECK(r.inclusion_holds);
  CHECK(r.extra.size() == 2);
  for (const Comparison& c : r.extra) CHECK(c.holds);
}

TEST_CASE("product rule") {
  const PolySet half(poly(1, {row({"-1"}, "0")}));
  const ConvexPoly ray = poly(1, {row({"-1"}, "0")});
  const PolySet line(ConvexPoly::whole(1));
  const RuleReport r = product_rule(half, ray, v({"0"}), line, ConvexPoly::whole(1), v({"0"}));
  CHECK(r.inclusion_holds);
  REQUIRE(r.extra.size() == 1);
  CHECK(r.extra[0].holds);
  CHECK(std::get<ConeUnion>(r.extra[0].lhs).is_zero());
}

TEST_CASE("mixed product rule readings") {
  // Ω1 ⊂ Q^(1+1) in (x,z); Ω2 ⊂ Q^1.
  MixedInput in{PolySet(poly(2, {row({"1", "-1"}, "0")})), poly(2, {row({"-1", "0"}, "0")}),
                PolySet(poly(1, {row({"-1"}, "0")})), ConvexPoly::whole(1), v({"0"}), v({"0"}), v({"0"})};
  const RuleReport proof = mixed_product_rule(in, MixedReading::kProof);
  CHECK(proof.inclusion_holds);
  CHECK(proof.extra[0].holds);
  const RuleReport statement = mixed_product_rule(in, MixedReading::kStatement);
  CHECK(!statement.inclusion_holds);

  MixedInput flat = in;
  flat.omega1 = PolySet(ConvexPoly::whole(1));
  flat.c1 = ConvexPoly::whole(1);
  flat.z = {};
  CHECK(mixed_product_rule(flat).inclusion_holds);
}

TEST_CASE("preimage rule through the identity map") {
  const PolyMultimap id = linear_map(identity(2), 2);
  const PolySet theta(poly(2, {row({"-1", "0"}, "0"), row({"0", "-1"}, "0")}));
  const ConvexPoly w = ConvexPoly::whole(2);
  const RuleReport r = preimage_rule(id, theta, w, v({"0", "0"}));
  CHECK(r.inclusion_holds);
  CHECK(std::get<ConeUnion>(r.lhs).same_set(std::get<ConeUnion>(r.rhs)));
  CHECK(std::get<ConeUnion>(r.lhs).same_set(limiting_normal_wrt(theta, w, v({"0", "0"}))));
}

TEST_CASE("preimage rule on the constraint map") {
  // G(x) = R_+ for x ≥ 0, Θ = {0}: G^{-1}(Θ) = [0, ∞).
  const PolyMultimap g(1, 1, PolySet(poly(2, {row({"-1", "0"}, "0"), row({"0", "-1"}, "0")})));
  const PolySet theta(ConvexPoly::point(v({"0"})));
  const ConvexPoly c = poly(1, {row({"-1"}, "0")});
  const RuleReport r = preimage_rule(g, theta, c, v({"0"}));
  const ConeUnion lhs = std::get<ConeUnion>(r.lhs);
  CHECK(lhs.same_set(limiting_normal_wrt(PolySet(c), c, v({"0"}))));
  // N(0,Θ) = R meets ker D*_C G(0,0) = R_+.
  CHECK(r.qualifications[0].verdict.fails());
  CHECK(*r.qualifications[0].verdict.certificate == v({"1"}));
  CHECK(r.qualifications[1].verdict.holds());
  CHECK(r.qualifications[2].verdict.holds());
  CHECK(r.inclusion_holds);
}
