#include "doctest.h"

#include "support.hpp"
#include "vawrt/cone_union.hpp"
#include "vawrt/linalg.hpp"
#include "vawrt/lp.hpp"

using namespace vawrt;
using vawrt::test::v;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-0/7")) == "0");
  CHECK(to_string(parse_rat(" 5 ")) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("2/-3"), ParseError);
}

TEST_CASE("primitive scaling") {
  CHECK(primitive(v({"1/2", "-3/4"})) == v({"2", "-3"}));
  RVec w = v({"0", "-2", "4"});
  CHECK(primitive_unsigned(w) == -1);
  CHECK(w == v({"0", "1", "-2"}));
}

TEST_CASE("lp maximize and infeasibility") {
  lp::System s;
  s.dim = 2;
  s.le = {{v({"1", "1"}), 4}, {v({"-1", "0"}), 0}, {v({"0", "-1"}), 0}, {v({"1", "0"}), 3}};
  auto r = lp::maximize(s, v({"2", "1"}));
  CHECK(r.status == lp::Status::kOptimal);
  CHECK(r.value == 7);
  s.eq = {{v({"1", "-1"}), Rat(10)}};
  CHECK_FALSE(lp::feasible_point(s).has_value());
  lp::System u;
  u.dim = 1;
  CHECK(lp::maximize(u, v({"1"})).status == lp::Status::kUnbounded);
}

TEST_CASE("strict feasibility") {
  lp::System s;
  s.dim = 2;
  std::vector<lp::Row> strict = {{v({"1", "0"}), 0}, {v({"-1", "0"}), 0}};
  CHECK_FALSE(lp::strictly_feasible_point(s, strict).has_value());
  strict.pop_back();
  auto p = lp::strictly_feasible_point(s, strict);
  REQUIRE(p.has_value());
  CHECK((*p)[0] < 0);
}

TEST_CASE("dd_convert examples") {
  SUBCASE("half-line") {
    Cone c = Cone::from_h(1, {v({"-1"})}, {});
    CHECK(c.rays() == RMat{v({"1"})});
    CHECK(c.lineality().empty());
  }
  SUBCASE("negative orthant") {
    Cone c = Cone::from_h(2, {v({"1", "0"}), v({"0", "1"})}, {});
    CHECK(c.rays() == RMat{v({"-1", "0"}), v({"0", "-1"})});
  }
  SUBCASE("u+v<=0, -u<=0") {
    Cone c = Cone::from_h(2, {v({"1", "1"}), v({"-1", "0"})}, {});
    CHECK(c.rays() == RMat{v({"0", "-1"}), v({"1", "-1"})});
    // Both inclusions against the generator description.
    CHECK(Cone::from_v(2, c.rays(), {}) == c);
  }
  SUBCASE("empty H description gives the whole space") {
    Cone c = Cone::from_h(3, {}, {});
    CHECK(c.lineality().size() == 3);
    CHECK(c.is_whole());
  }
}

TEST_CASE("polar examples") {
  CHECK(Cone::whole(3).polar().is_zero());
  CHECK(Cone::origin(2).polar().is_whole());
  Cone neg = Cone::from_h(2, {v({"1", "0"}), v({"0", "1"})}, {});
  Cone pos = Cone::from_h(2, {v({"-1", "0"}), v({"0", "-1"})}, {});
  CHECK(neg.polar() == pos);
  Cone k = Cone::from_v(2, {v({"0", "1"}), v({"1", "1"})}, {});
  Cone expected = Cone::from_h(2, {v({"0", "1"}), v({"1", "1"})}, {});
  CHECK(k.polar() == expected);
  // The polar computed from the H side through a fresh DD run agrees.
  CHECK(Cone::from_h(2, k.rays(), k.lineality()) == expected);
  for (const RVec& y : expected.rays()) {
    for (const RVec& x : k.rays()) CHECK(dot(x, y) <= 0);
  }
}

TEST_CASE("cone union operations on wedge cones") {
  ConeUnion a(Cone::from_h(3, {v({"-1", "0", "0"}), v({"1", "0", "1"})}, {v({"0", "1", "0"})}));
  ConeUnion b(Cone::from_h(3, {v({"-1", "0", "0"}), v({"0", "1", "0"})}, {v({"1", "0", "1"})}));
  SubsetResult r = a.subset_of(b);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(a.contains(*r.witness));
  CHECK_FALSE(b.contains(*r.witness));
  CHECK(b.subset_of(b).holds);

  ConeUnion ray(Cone::from_v(3, {v({"1", "0", "-1"})}, {}));
  ConeUnion axis(Cone::from_v(3, {v({"0", "-1", "0"})}, {}));
  CHECK(ray.minkowski_sum(axis) == b);
  CHECK(ConeUnion(Cone::origin(3)).subset_of(axis).holds);
}

TEST_CASE("is_zero_cone") {
  CHECK(ConeUnion(Cone::origin(3)).is_zero());
  CHECK_FALSE(ConeUnion(Cone::from_v(3, {v({"0", "-1", "0"})}, {})).is_zero());
  CHECK(ConeUnion(Cone::whole(4).polar()).is_zero());
  CHECK_FALSE(ConeUnion::empty(2).is_zero());
}

TEST_CASE("union subset needs the split, not a single part") {
  // Upper half-plane is covered by two quadrants together.
  ConeUnion half(Cone::from_h(2, {v({"0", "-1"})}, {}));
  ConeUnion quads(2, {Cone::from_h(2, {v({"-1", "0"}), v({"0", "-1"})}, {}),
                      Cone::from_h(2, {v({"1", "0"}), v({"0", "-1"})}, {})});
  CHECK(half.subset_of(quads).holds);
  CHECK(half.same_set(quads));
  CHECK_FALSE(half == quads);
}

TEST_CASE("linear algebra helpers") {
  RMat rows = {v({"1", "2", "3"}), v({"2", "4", "6"})};
  CHECK(rank(rows, 3) == 1);
  CHECK(null_space_basis(rows, 3).size() == 2);
  CHECK(in_span(v({"3", "6", "9"}), rows));
  CHECK_FALSE(in_span(v({"1", "0", "0"}), rows));
  RVec p = project_out(v({"1", "1"}), {v({"1", "0"})});
  CHECK(p == v({"0", "1"}));
}
