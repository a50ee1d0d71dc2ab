#include "doctest.h"

#include <set>

#include "support.hpp"
#include "vawrt/stratify.hpp"

using namespace vawrt;
using namespace vawrt::test;

TEST_CASE("half-line at its endpoint has two cells") {
  PolySet s(poly(1, {row({"-1"}, "0")}));
  auto cells = local_cells({SetRef{&s}}, v({"0"}));
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].direction == v({"0"}));
  CHECK(cells[0].signature.ineq_tags[0][0][0] == RowTag::kActive);
  CHECK(cells[1].signature.ineq_tags[0][0][0] == RowTag::kSlack);
  CHECK(cells[1].witness[0] > 0);
  for (const Cell& c : cells) CHECK(c.adherent);
}

TEST_CASE("case split for omega1 within C") {
  WedgePair ex;
  const PolySet c(ex.c);
  auto cells = local_cells({SetRef{&ex.omega1}, SetRef{&c}}, ex.origin);
  // y is free, so every cell is a product with R along y; classify by (x, z-x).
  std::set<std::pair<int, int>> seen;
  for (const Cell& cell : cells) {
    const RVec& w = cell.witness;
    seen.insert({sgn(w[0]), sgn(w[2] - w[0])});
  }
  const std::set<std::pair<int, int>> expected = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(seen == expected);
}

TEST_CASE("single hyperplane through base gives three cells") {
  PolySet s(poly(2, {row({"1", "1"}, "0")}));
  PolySet all(ConvexPoly::whole(2));
  auto cells = local_cells({SetRef{&s, false}, SetRef{&all}}, v({"0", "0"}));
  CHECK(cells.size() == 3);
  // Grid classification around base agrees with the cells found.
  std::set<int> signs;
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) signs.insert(sgn(Rat(i + j)));
  }
  std::set<int> cell_signs;
  for (const Cell& c : cells) cell_signs.insert(sgn(c.witness[0] + c.witness[1]));
  CHECK(signs == cell_signs);
}

TEST_CASE("active_pieces") {
  PolySet s(2, {poly(2, {row({"1", "0"}, "1"), row({"-1", "0"}, "1")}),
                poly(2, {row({"1", "0"}, "5"), row({"-1", "0"}, "-3")})});
  CHECK(active_pieces(s, v({"0", "0"})) == std::vector<std::size_t>{0});
  CHECK(active_pieces(s, v({"9", "0"})).empty());
  WedgePair ex;
  CHECK(active_pieces(ex.omega2, v({"0", "0", "5"})) == std::vector<std::size_t>{0});
}

TEST_CASE("base outside all sets") {
  PolySet s(poly(1, {row({"1"}, "0")}));
  CHECK_THROWS_AS(local_cells({SetRef{&s}}, v({"1"})), BaseOutsideError);
}

TEST_CASE("witnesses realize their signatures and distinct cells differ") {
  WedgePair ex;
  const PolySet c(ex.c);
  const std::vector<SetRef> sets = {SetRef{&ex.omega1}, SetRef{&ex.omega2}, SetRef{&c}};
  auto cells = local_cells(sets, ex.origin);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(signature_at(sets, cells[i].witness) == cells[i].signature);
    for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK_FALSE(cells[i].direction == cells[j].direction);
  }
}
