#include "doctest.h"
#include "support.hpp"

using namespace vawrt;
using namespace vawrt::test;

namespace {

PolySet interval(const char* lo, const char* hi) {
  return PolySet(poly(1, {row({"-1"}, lo), row({"1"}, hi)}));
}

PLFunc abs_fn() { return PLFunc::max_affine({row({"1"}, "0"), row({"-1"}, "0")}, ConvexPoly::whole(1)); }

}  // namespace

TEST_CASE("values from the epigraph") {
  const PLFunc f = abs_fn();
  CHECK(*f.value(v({"-3"})) == 3);
  const PLFunc g = PLFunc::max_affine({row({"2"}, "1")}, poly(1, {row({"-1"}, "0")}));
  CHECK(!g.value(v({"-1"})));
  CHECK(*g.value(v({"1/2"})) == 2);
  CHECK_THROWS(PLFunc(1, PolySet(poly(2, {row({"0", "1"}, "0")}))));
}

TEST_CASE("subdifferentials of f(x) = x") {
  ConstraintMap e;
  const auto wrt = subdiff_wrt(e.f, e.half, e.zero, SubdiffKind::kLimiting);
  CHECK(wrt.value.same_set(PolySet(poly(1, {row({"-1"}, "0"), row({"1"}, "1")}))));
  CHECK(wrt.value.same_set(interval("0", "1")));
  const auto plain = subdiff_wrt(e.f, e.line, e.zero, SubdiffKind::kLimiting);
  CHECK(plain.value.same_set(PolySet(ConvexPoly::point(v({"1"})))));
  CHECK(subdiff_wrt(e.f, e.half, v({"-1"}), SubdiffKind::kLimiting).value.is_empty());
}

TEST_CASE("affine function at an interior point") {
  const PLFunc f = PLFunc::max_affine({row({"2", "-1"}, "3")}, ConvexPoly::whole(2));
  const ConvexPoly w = ConvexPoly::whole(2);
  const RVec x = v({"1", "1"});
  const PolySet grad(ConvexPoly::point(v({"2", "-1"})));
  CHECK(subdiff_wrt(f, w, x, SubdiffKind::kFrechet).value.same_set(grad));
  CHECK(subdiff_wrt(f, w, x, SubdiffKind::kLimiting).value.same_set(grad));
  CHECK(subdiff_wrt(f, w, x, SubdiffKind::kHorizon).value.same_set(PolySet(ConvexPoly::point(v({"0", "0"})))));
  CHECK(subdiff_via_coderivative(f, w, x, SubdiffKind::kLimiting).value.same_set(grad));
  CHECK(lipschitz_wrt_check(f, w, x).holds());
}

TEST_CASE("coderivative route agrees") {
  ConstraintMap e;
  for (const ConvexPoly* c : {&e.half, &e.line}) {
    for (SubdiffKind k : {SubdiffKind::kLimiting, SubdiffKind::kHorizon}) {
      CHECK(subdiff_wrt(e.f, *c, e.zero, k).value.same_set(subdiff_via_coderivative(e.f, *c, e.zero, k).value));
    }
  }
}

TEST_CASE("lipschitz criterion") {
  ConstraintMap e;
  CHECK(lipschitz_wrt_check(e.f, e.half, e.zero).holds());
  const PLFunc ind = PLFunc::max_affine({row({"0"}, "0")}, e.half);
  const TriVerdict t = lipschitz_wrt_check(ind, e.line, e.zero);
  REQUIRE(t.fails());
  CHECK(*t.certificate == v({"-1"}));
  CHECK(lipschitz_wrt_check(ind, e.half, e.zero).holds());
}

TEST_CASE("fermat rule") {
  ConstraintMap e;
  const FermatReport a = fermat_check(e.f, e.half, e.zero);
  CHECK(a.is_stationary_frechet);
  CHECK(a.is_stationary_limiting);
  const FermatReport b = fermat_check(e.f, e.line, e.zero);
  CHECK(!b.is_stationary_frechet);
  CHECK(!b.is_stationary_limiting);
  CHECK(b.certified_non_minimizer);
  const FermatReport c = fermat_check(abs_fn(), e.line, e.zero);
  CHECK(c.is_stationary_frechet);
  CHECK(c.is_stationary_limiting);
}

TEST_CASE("classical subdifferential of a nonconvex function") {
  // f = min(x, -x) = -|x|: Fréchet empty at 0, limiting {-1, 1}.
  const PLFunc f(1, PolySet(2, {poly(2, {row({"1", "-1"}, "0")}), poly(2, {row({"-1", "-1"}, "0")})}));
  const ConvexPoly w = ConvexPoly::whole(1);
  CHECK(subdiff_wrt(f, w, v({"0"}), SubdiffKind::kFrechet).value.is_empty());
  const PolySet lim = subdiff_wrt(f, w, v({"0"}), SubdiffKind::kLimiting).value;
  CHECK(lim.same_set(PolySet(1, {ConvexPoly::point(v({"1"})), ConvexPoly::point(v({"-1"}))})));
}
