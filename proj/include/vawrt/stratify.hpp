#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vawrt/polyhedron.hpp"

namespace vawrt {

enum class RowTag : char { kActive = '=', kSlack = '<', kViolated = '>' };

/// Active-set label of a point: one tag per row of every piece of every
/// participating set, plus piece membership.
struct CellSignature {
  std::vector<std::vector<std::vector<RowTag>>> ineq_tags;  // [set][piece][row]
  std::vector<std::vector<std::vector<RowTag>>> eq_tags;    // kActive or kViolated
  std::vector<std::vector<bool>> in_piece;                  // [set][piece]

  bool operator==(const CellSignature&) const = default;
};

struct Cell {
  CellSignature signature;
  RVec direction;  // relative-interior direction of the local cone cell
  RVec witness;    // base + t·direction, exact
  bool adherent = true;
};

struct SetRef {
  const PolySet* set;
  bool required = true;  // cells outside every piece of a required set are dropped
};

class BaseOutsideError : public std::invalid_argument {
 public:
  BaseOutsideError() : std::invalid_argument("base point outside all sets") {}
};

CellSignature signature_at(const std::vector<SetRef>& sets, const RVec& x);

/// Every nonempty cell of the arrangement of hyperplanes active at `base`,
/// restricted to cells inside every required set. Cells are relatively open
/// cones of directions; the base itself is the cell with direction 0.
std::vector<Cell> local_cells(const std::vector<SetRef>& sets, const RVec& base);

/// One exact point in every nonempty cell of the affine arrangement of all
/// rows of the given sets, restricted to points of every required set.
/// Points of one cell share all active sets.
std::vector<RVec> cell_representatives(const std::vector<SetRef>& sets);

}  // namespace vawrt
