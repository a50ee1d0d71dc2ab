#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vawrt/rational.hpp"

namespace vawrt {

using RMat = std::vector<RVec>;

std::size_t rank(const RMat& rows, std::size_t dim);

/// Reduced row echelon basis of the row span, rows scaled to primitive
/// integers. Unique for a given span, so usable as a canonical form.
RMat row_space_basis(const RMat& rows, std::size_t dim);

/// Basis of {x : r·x = 0 for all rows r}, canonicalized like row_space_basis.
RMat null_space_basis(const RMat& rows, std::size_t dim);

/// Orthogonal projection of v onto the orthogonal complement of span(basis).
RVec project_out(const RVec& v, const RMat& basis);

/// Some solution of M x = b (rows of M), or nullopt.
std::optional<RVec> solve(const RMat& m, const RVec& b, std::size_t dim);

bool in_span(const RVec& v, const RMat& basis);

}  // namespace vawrt
