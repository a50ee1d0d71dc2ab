#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vawrt/multimaps.hpp"

/// Floating-point brute force used to cross-validate the exact engine. It
/// never feeds back into exact results.
namespace vawrt::oracle {

struct SamplingPlan {
  Rat radius{1};
  Rat grid_step{1, 64};
  int direction_count = 64;
  double tolerance = 1e-6;

  /// Throws std::invalid_argument on a malformed plan.
  void validate() const;
  /// Grid points per half axis, floor(radius / grid_step).
  long half_width() const;
};

inline constexpr double kDivergenceSentinel = 1e3;

enum class Probe { kConsistent, kInconsistent };
std::string to_string(Probe p);

struct FrechetSample {
  /// sup of <d, x - x̄>/|x - x̄| over grid points of Ω∩C in the smallest sampled ball.
  double limsup = 0;
  /// x̄ + p d/|d|∞ ∈ C for some p in {grid_step, radius}.
  bool radial = true;
  bool member(double tol) const { return radial && limsup <= tol; }
};

/// Grid of Ω∩C around x̄, built once and reused across directions.
class FrechetSampler {
 public:
  FrechetSampler(const PolySet& omega, const ConvexPoly& c, const RVec& x, const SamplingPlan& plan);
  FrechetSample sample(const RVec& d) const;
  std::size_t grid_points() const { return members_.size(); }

 private:
  ConvexPoly c_;
  RVec x_;
  SamplingPlan plan_;
  std::vector<std::vector<long>> members_;
};

/// Compares the sampled membership of d against `claimed`.
Probe frechet_membership_probe(const PolySet& omega, const ConvexPoly& c, const RVec& x, const RVec& d,
                               const SamplingPlan& plan, bool claimed = true);

struct CrossCheckReport {
  std::size_t probes = 0;
  std::vector<RVec> flagged;
  bool clean() const { return flagged.empty(); }
};

/// Probes the generators of `exact` and the directions {-1,0,1}^n, at most
/// plan.direction_count in total beyond the generators.
CrossCheckReport cross_check_frechet(const PolySet& omega, const ConvexPoly& c, const RVec& x, const Cone& exact,
                                     const SamplingPlan& plan);

struct AubinSample {
  double max_ratio = 0;  // +inf when some F(u)∩V is nonempty and F(x) is empty
  std::size_t pairs = 0;
  bool divergent() const { return max_ratio > kDivergenceSentinel; }
};

/// max over grid pairs x ≠ u in C∩B(x̄, radius) of e(F(u)∩V, F(x)) / |u - x|,
/// V = B(ȳ, radius). The grid is coarsened to at most 129 points per space.
AubinSample aubin_ratio_probe(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                              const SamplingPlan& plan);

/// Holds pairs with a bounded ratio, Fails with a divergent one.
bool aubin_agrees(const TriVerdict& exact, const AubinSample& s);

}  // namespace vawrt::oracle
