#pragma once

#include <cstddef>

#include "vawrt/linalg.hpp"

namespace vawrt {

/// V-representation of a polyhedral cone: cone(rays) + span(lineality).
/// Rays are extreme modulo the lineality space.
struct Generators {
  RMat rays;
  RMat lineality;
};

/// Double description: generators of {x : a·x ≤ 0 (ineqs), e·x = 0 (eqs)}.
Generators dd_generators(std::size_t dim, const RMat& ineqs, const RMat& eqs);

}  // namespace vawrt
