#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vawrt/linalg.hpp"
#include "vawrt/lp.hpp"

namespace vawrt {

/// Sign of h·d for one hyperplane of a central arrangement.
enum class Sign : signed char { kNeg = -1, kZero = 0, kPos = 1 };

struct SignCell {
  std::vector<Sign> signs;
  RVec witness;  // relative-interior point of the cell
};

/// Decides whether to keep descending given the signs fixed so far
/// (a prefix of the hyperplane list).
using PrefixFilter = std::function<bool(const std::vector<Sign>&)>;

/// Enumerates every nonempty cell {d ∈ base : sign(h_i·d) = s_i ∀i} of the
/// arrangement of homogeneous hyperplanes h_i restricted to the polyhedron
/// `base`. Visits signs in the order -, 0, + per hyperplane.
std::vector<SignCell> enumerate_sign_cells(const lp::System& base, const RMat& hyperplanes,
                                           const PrefixFilter& keep = nullptr);

/// Largest power-of-two fraction t ≤ 1 such that x + t·d keeps the strict
/// sign of every given affine row that is inactive at x.
Rat safe_step(const RVec& x, const RVec& d, const std::vector<lp::Row>& rows);

}  // namespace vawrt
