#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vawrt/rational.hpp"

namespace vawrt::lp {

/// Row a·x ≤ b or a·x = b depending on the list it sits in.
struct Row {
  RVec a;
  Rat b;
};

/// Constraint system over free variables x ∈ Qⁿ.
struct System {
  std::size_t dim = 0;
  std::vector<Row> le;
  std::vector<Row> eq;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  RVec x;     // optimal point (kOptimal) or any feasible point (kUnbounded)
  Rat value;  // objective at x
};

/// Exact simplex with Bland's rule. Maximizes objective·x.
Result maximize(const System& sys, const RVec& objective);

std::optional<RVec> feasible_point(const System& sys);

/// Finds x with all `strict` rows satisfied strictly (a·x < b), the remaining
/// rows of `sys` as usual. Returns nullopt if no such point exists.
std::optional<RVec> strictly_feasible_point(const System& sys, const std::vector<Row>& strict);

}  // namespace vawrt::lp
