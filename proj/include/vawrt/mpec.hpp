#pragma once

#include "vawrt/calculus.hpp"
#include "vawrt/plfunc.hpp"

namespace vawrt {

/// min f(x) subject to 0 ∈ G(x), x ∈ C1 ∩ C2.
struct MPECProblem {
  PLFunc f;
  PolyMultimap g;  // Q^n ⇉ Q^m
  ConvexPoly c1, c2;

  std::size_t n() const { return f.dim(); }
  std::size_t m() const { return g.out_dim; }
};

class InfeasibleCandidate : public std::invalid_argument {
 public:
  explicit InfeasibleCandidate(const std::string& what) : std::invalid_argument(what) {}
};

/// Throws InfeasibleCandidate naming the first violated constraint.
void require_feasible(const MPECProblem& p, const RVec& x);

/// ∂^∞_{C1} f(x) ∩ [-D*_{C2} G(x,0)(0)] = {0}.
TriVerdict check_q1(const MPECProblem& p, const RVec& x);

/// Normal-densedness of Ω1 = {(x,y,z) : (x,z) ∈ epi f}, Ω2 = gph G × Q in
/// {C1 × Q^(m+1), C2 × Q^(m+1)} at (x, 0, f(x)).
TriVerdict check_q2(const MPECProblem& p, const RVec& x);

enum class MPECVerdict { kCertifiedNonOptimal, kNecessaryConditionsHold, kInconclusive };

std::string to_string(MPECVerdict v);

struct StationarityReport {
  RVec candidate;
  TriVerdict q1, q2, aubin_g;
  PolySet subdiff = PolySet::empty(0);      // ∂_{C1} f(x)
  ConeUnion coderiv = ConeUnion(0);         // D*_{C2} G(x,0)(0)
  bool condition_full = false;               // 0 ∈ ∂_{C1} f(x) + D*_{C2} G(x,0)(0)
  bool condition_simple = false;            // 0 ∈ ∂_{C1} f(x)
  bool simple_applicable = false;           // Aubin and q2 both hold
  MPECVerdict verdict = MPECVerdict::kInconclusive;
};

StationarityReport stationarity_check(const MPECProblem& p, const RVec& x);

}  // namespace vawrt
