#include "doctest.h"
#include "support.hpp"

using namespace vawrt;
using namespace vawrt::test;

namespace {

PolySet point_set(const RVec& p) { return PolySet(ConvexPoly::point(p)); }

}  // namespace

TEST_CASE("coderivative slices") {
  ConstraintMap e;
  const auto d = coderivative_wrt(e.g, e.half, e.zero, e.zero, e.zero);
  CHECK(d.value.same_set(point_set(e.zero)));

  const auto open = coderivative_wrt(e.g, e.line, e.zero, e.zero, e.zero);
  CHECK(open.value.contains(v({"-1"})));
  CHECK(!open.value.contains(v({"1"})));

  const RMat a{v({"1", "2"}), v({"0", "1"})};
  const PolyMultimap lin = linear_map(a, 2);
  const auto s = coderivative_wrt(lin, ConvexPoly::whole(2), v({"1", "1"}), v({"3", "1"}), v({"1", "-1"}));
  CHECK(s.value.same_set(point_set(v({"1", "1"}))));
}

TEST_CASE("slice agrees with the graph cone") {
  ConstraintMap e;
  const ConeUnion k = coderivative_cone(e.g, e.line, e.zero, e.zero);
  for (const char* ys : {"-1", "0", "2"}) {
    const RVec ystar = v({ys});
    const PolySet s = coderivative_wrt(e.g, e.line, e.zero, e.zero, ystar).value;
    for (int i = -3; i <= 3; ++i) {
      const RVec xs{Rat(i, 2)};
      CHECK(s.contains(xs) == k.contains(concat(xs, negate(ystar))));
    }
  }
}

TEST_CASE("aubin criterion") {
  ConstraintMap e;
  CHECK(aubin_wrt_check(e.g, e.half, e.zero, e.zero).holds());
  const TriVerdict open = aubin_wrt_check(e.g, e.line, e.zero, e.zero);
  REQUIRE(open.fails());
  CHECK(*open.certificate == v({"-1"}));

  const PolyMultimap constant(1, 1, PolySet(poly(2, {}, {row({"0", "1"}, "0")})));
  CHECK(aubin_wrt_check(constant, e.line, e.zero, e.zero).holds());
  const PolyMultimap vertical(1, 1, PolySet(poly(2, {}, {row({"1", "0"}, "0")})));
  CHECK(aubin_wrt_check(vertical, e.line, e.zero, e.zero).fails());
}

TEST_CASE("inner regularity") {
  ConstraintMap e;
  CHECK(inner_regularity_check(e.g, e.line, e.zero, e.zero, InnerMode::kSemicontinuous).holds());
  CHECK(inner_regularity_check(e.g, e.line, e.zero, {}, InnerMode::kSemicompact).holds());
  CHECK(inner_regularity_check(e.g, e.line, e.zero, {}, InnerMode::kClosedGraph).holds());

  // y = x for x ≥ 0 and y = 1 for x ≤ 0: no selection through (0,0) from the left.
  const PolyMultimap jump(1, 1, PolySet(2, {poly(2, {row({"-1", "0"}, "0")}, {row({"-1", "1"}, "0")}),
                                            poly(2, {row({"1", "0"}, "0")}, {row({"0", "1"}, "1")})}));
  const TriVerdict t = inner_regularity_check(jump, e.line, e.zero, e.zero, InnerMode::kSemicontinuous);
  REQUIRE(t.fails());
  CHECK(sgn((*t.certificate)[0]) < 0);
  CHECK(inner_regularity_check(jump, e.half, e.zero, e.zero, InnerMode::kSemicontinuous).holds());
}

TEST_CASE("graph of a sum against brute force") {
  ConstraintMap e;
  const PolyMultimap id = linear_map({v({"1"})}, 1);
  const PolyMultimap s = multimap_sum(id, e.g);
  const PolySet expect(poly(2, {row({"-1", "0"}, "0"), row({"1", "-1"}, "0")}));
  CHECK(s.graph.same_set(expect));
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 4; ++y) {
      const bool brute = x >= 0 && y - x >= 0;
      CHECK(s.graph.contains(v({std::to_string(x).c_str(), std::to_string(y).c_str()})) == brute);
    }
  }
}

TEST_CASE("sum rule") {
  ConstraintMap e;
  const PolyMultimap zero_map(1, 1, PolySet(poly(2, {}, {row({"0", "1"}, "0")})));
  for (const char* ys : {"-1", "0", "1"}) {
    const RuleReport r = sum_rule(SumRuleInput{e.g, zero_map, e.half, e.line, e.zero, e.zero, e.zero, v({ys})});
    CHECK(r.inclusion_holds);
    const PolySet own = coderivative_wrt(e.g, e.half, e.zero, e.zero, v({ys})).value;
    CHECK(std::get<PolySet>(r.rhs).same_set(own));
  }
  const PolyMultimap id = linear_map({v({"1"})}, 1);
  const RuleReport r = sum_rule(SumRuleInput{id, e.g, e.half, e.half, e.zero, e.zero, e.zero, v({"1"})});
  CHECK(r.hypotheses_hold());
  CHECK(r.inclusion_holds);
  const RuleReport sc = sum_rule(SumRuleInput{id, e.g, e.half, e.half, e.zero, e.zero, e.zero, v({"1"})}, true);
  CHECK(sc.inclusion_holds);
}

TEST_CASE("chain rule") {
  ConstraintMap e;
  const PolyMultimap id = linear_map({v({"1"})}, 1);
  const RuleReport r = chain_rule(ChainRuleInput{e.g, id, e.half, e.zero, e.zero, e.zero, v({"1"})});
  CHECK(r.inclusion_holds);
  CHECK(std::get<PolySet>(r.rhs).same_set(coderivative_wrt(e.g, e.half, e.zero, e.zero, v({"1"})).value));

  const PolyMultimap g = linear_map({v({"1", "2"})}, 2);
  const PolyMultimap f = linear_map({v({"3"}), v({"-1"})}, 1);
  const RuleReport lin = chain_rule(ChainRuleInput{g, f, ConvexPoly::whole(2), v({"1", "1"}), v({"3"}),
                                                   v({"9", "-3"}), v({"1", "1"})});
  CHECK(lin.hypotheses_hold());
  CHECK(lin.inclusion_holds);
  // Gᵀ Fᵀ z* = (1,2)ᵀ · (3 - 1) = (2, 4).
  CHECK(std::get<PolySet>(lin.rhs).same_set(point_set(v({"2", "4"}))));
  CHECK(std::get<PolySet>(lin.lhs).same_set(point_set(v({"2", "4"}))));
}
