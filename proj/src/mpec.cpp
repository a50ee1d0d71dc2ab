#include "vawrt/mpec.hpp"

namespace vawrt {

namespace {

RVec zero_out(const MPECProblem& p) { return zeros(p.m()); }

}  // namespace

std::string to_string(MPECVerdict v) {
  switch (v) {
    case MPECVerdict::kCertifiedNonOptimal: return "certified-non-optimal";
    case MPECVerdict::kNecessaryConditionsHold: return "necessary-conditions-hold";
    case MPECVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void require_feasible(const MPECProblem& p, const RVec& x) {
  if (x.size() != p.n() || p.g.in_dim != p.n() || p.c1.dim() != p.n() || p.c2.dim() != p.n()) {
    throw DimensionError("mpec: dimension mismatch");
  }
  if (!p.g.in_graph(x, zero_out(p))) throw InfeasibleCandidate("infeasible candidate: 0 ∉ G(x)");
  if (!p.c1.contains(x)) throw InfeasibleCandidate("infeasible candidate: x ∉ C1");
  if (!p.c2.contains(x)) throw InfeasibleCandidate("infeasible candidate: x ∉ C2");
  if (!p.f.value(x)) throw InfeasibleCandidate("infeasible candidate: x ∉ dom f");
}

TriVerdict check_q1(const MPECProblem& p, const RVec& x) {
  require_feasible(p, x);
  const ConeUnion h = horizon_cone(p.f, p.c1, x);
  const ConeUnion d = coderivative_at_zero(p.g, p.c2, x, zero_out(p));
  return zero_meet(h, d.negated(), "horizon subdifferential ∩ -D*G(x,0)(0)");
}

TriVerdict check_q2(const MPECProblem& p, const RVec& x) {
  require_feasible(p, x);
  const std::size_t n = p.n(), m = p.m(), total = n + m + 1;
  std::vector<std::size_t> xz = index_range(0, n);
  xz.push_back(n + m);
  const PolySet omega1 = p.f.epi().preimage(coordinate_map(total, xz), zeros(n + 1), total);
  const PolySet omega2 = p.g.graph.embed(total, 0);
  const ConvexPoly tail = ConvexPoly::whole(m + 1);
  RVec point = concat(x, zero_out(p));
  point.push_back(*p.f.value(x));
  return normal_densed_check(
      SetPair{omega1, omega2, ConvexPoly::product(p.c1, tail), ConvexPoly::product(p.c2, tail)}, point);
}

StationarityReport stationarity_check(const MPECProblem& p, const RVec& x) {
  require_feasible(p, x);
  StationarityReport r;
  r.candidate = x;
  r.q1 = check_q1(p, x);
  r.q2 = check_q2(p, x);
  r.aubin_g = aubin_wrt_check(p.g, p.c2, x, zero_out(p));
  r.subdiff = subdiff_wrt(p.f, p.c1, x, SubdiffKind::kLimiting).value;
  r.coderiv = coderivative_at_zero(p.g, p.c2, x, zero_out(p));
  const RVec zero = zeros(p.n());
  r.condition_full = r.subdiff.sum(as_polyset(r.coderiv)).contains(zero);
  r.condition_simple = r.subdiff.contains(zero);
  r.simple_applicable = r.aubin_g.holds() && r.q2.holds();
  if (r.q1.holds() && r.q2.holds()) {
    r.verdict = r.condition_full ? MPECVerdict::kNecessaryConditionsHold : MPECVerdict::kCertifiedNonOptimal;
  } else if (r.simple_applicable) {
    r.verdict = r.condition_simple ? MPECVerdict::kNecessaryConditionsHold : MPECVerdict::kCertifiedNonOptimal;
  }
  return r;
}

}  // namespace vawrt
