#include "vawrt/stratify.hpp"

#include <map>

#include "vawrt/arrangement.hpp"

namespace vawrt {

namespace {

struct RowRef {
  std::size_t set, piece;
  bool equality;
  std::size_t plane;
  int orientation;  // row normal = orientation · plane
};

RowTag tag(const Rat& lhs, const Rat& rhs) {
  const int c = cmp(lhs, rhs);
  return c < 0 ? RowTag::kSlack : (c == 0 ? RowTag::kActive : RowTag::kViolated);
}

}  // namespace

CellSignature signature_at(const std::vector<SetRef>& sets, const RVec& x) {
  CellSignature sig;
  for (const SetRef& s : sets) {
    auto& it = sig.ineq_tags.emplace_back();
    auto& et = sig.eq_tags.emplace_back();
    auto& ip = sig.in_piece.emplace_back();
    for (const ConvexPoly& p : s.set->pieces()) {
      auto& rows_i = it.emplace_back();
      for (const AffineRow& r : p.ineqs()) rows_i.push_back(tag(dot(r.a, x), r.b));
      auto& rows_e = et.emplace_back();
      for (const AffineRow& r : p.eqs()) {
        rows_e.push_back(dot(r.a, x) == r.b ? RowTag::kActive : RowTag::kViolated);
      }
      ip.push_back(p.contains(x));
    }
  }
  return sig;
}

std::vector<Cell> local_cells(const std::vector<SetRef>& sets, const RVec& base) {
  if (sets.empty()) throw std::invalid_argument("local_cells: no sets");
  const std::size_t n = base.size();
  bool inside = false;
  for (const SetRef& s : sets) {
    if (s.set->dim() != n) throw DimensionError("local_cells: set dimension mismatch");
    inside = inside || s.set->contains(base);
  }
  if (!inside) throw BaseOutsideError();

  RMat planes;
  std::map<RVec, std::size_t, LexLess> index;
  std::vector<RowRef> rows;
  std::vector<AffineRow> all_rows;
  std::vector<std::vector<std::vector<std::size_t>>> piece_rows(sets.size());
  for (std::size_t si = 0; si < sets.size(); ++si) {
    const auto& pieces = sets[si].set->pieces();
    piece_rows[si].resize(pieces.size());
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
      auto visit = [&](const AffineRow& r, bool equality) {
        all_rows.push_back(r);
        if (equality) all_rows.push_back({negate(r.a), -r.b});
        if (dot(r.a, base) != r.b || is_zero(r.a)) return;
        RVec h = r.a;
        const int o = primitive_unsigned(h);
        auto [pos, fresh] = index.try_emplace(h, planes.size());
        if (fresh) planes.push_back(h);
        piece_rows[si][pi].push_back(rows.size());
        rows.push_back(RowRef{si, pi, equality, pos->second, o});
      };
      for (const AffineRow& r : pieces[pi].ineqs()) visit(r, false);
      for (const AffineRow& r : pieces[pi].eqs()) visit(r, true);
    }
  }

  // Pieces that can contain points near base are exactly those containing it.
  std::vector<std::vector<bool>> live(sets.size());
  for (std::size_t si = 0; si < sets.size(); ++si) {
    for (const ConvexPoly& p : sets[si].set->pieces()) live[si].push_back(p.contains(base));
  }

  auto row_ok = [&](const RowRef& r, Sign s) {
    const int v = r.orientation * static_cast<int>(s);
    return r.equality ? v == 0 : v <= 0;
  };
  auto piece_ok = [&](std::size_t si, std::size_t pi, const std::vector<Sign>& signs) {
    if (!live[si][pi]) return false;
    for (std::size_t ri : piece_rows[si][pi]) {
      const RowRef& r = rows[ri];
      if (r.plane < signs.size() && !row_ok(r, signs[r.plane])) return false;
    }
    return true;
  };
  auto keep = [&](const std::vector<Sign>& signs) {
    for (std::size_t si = 0; si < sets.size(); ++si) {
      if (!sets[si].required) continue;
      bool any = false;
      for (std::size_t pi = 0; pi < live[si].size() && !any; ++pi) any = piece_ok(si, pi, signs);
      if (!any) return false;
    }
    return true;
  };

  lp::System space;
  space.dim = n;
  std::vector<Cell> cells;
  for (SignCell& sc : enumerate_sign_cells(space, planes, keep)) {
    Cell cell;
    cell.direction = std::move(sc.witness);
    const Rat t = safe_step(base, cell.direction, all_rows);
    cell.witness = add(base, scale(cell.direction, t));
    cell.signature = signature_at(sets, cell.witness);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<RVec> cell_representatives(const std::vector<SetRef>& sets) {
  if (sets.empty()) throw std::invalid_argument("cell_representatives: no sets");
  const std::size_t n = sets.front().set->dim();
  RMat planes;
  std::map<RVec, std::size_t, LexLess> index;
  std::vector<RowRef> rows;
  std::vector<std::vector<std::vector<std::size_t>>> piece_rows(sets.size());
  std::vector<std::vector<bool>> live(sets.size());
  for (std::size_t si = 0; si < sets.size(); ++si) {
    if (sets[si].set->dim() != n) throw DimensionError("cell_representatives: set dimension mismatch");
    const auto& pieces = sets[si].set->pieces();
    piece_rows[si].resize(pieces.size());
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
      bool alive = true;
      auto visit = [&](const AffineRow& r, bool equality) {
        if (is_zero(r.a)) {
          alive = alive && (equality ? sgn(r.b) == 0 : sgn(r.b) >= 0);
          return;
        }
        RVec h = r.a;
        h.push_back(-r.b);
        const int o = primitive_unsigned(h);
        auto [pos, fresh] = index.try_emplace(h, planes.size());
        if (fresh) planes.push_back(h);
        piece_rows[si][pi].push_back(rows.size());
        rows.push_back(RowRef{si, pi, equality, pos->second, o});
      };
      for (const AffineRow& r : pieces[pi].ineqs()) visit(r, false);
      for (const AffineRow& r : pieces[pi].eqs()) visit(r, true);
      live[si].push_back(alive);
    }
  }

  auto row_ok = [&](const RowRef& r, Sign s) {
    const int v = r.orientation * static_cast<int>(s);
    return r.equality ? v == 0 : v <= 0;
  };
  auto keep = [&](const std::vector<Sign>& signs) {
    for (std::size_t si = 0; si < sets.size(); ++si) {
      if (!sets[si].required) continue;
      bool any = false;
      for (std::size_t pi = 0; pi < live[si].size() && !any; ++pi) {
        if (!live[si][pi]) continue;
        bool ok = true;
        for (std::size_t ri : piece_rows[si][pi]) {
          const RowRef& r = rows[ri];
          if (r.plane < signs.size() && !row_ok(r, signs[r.plane])) ok = false;
        }
        any = ok;
      }
      if (!any) return false;
    }
    return true;
  };

  lp::System affine;
  affine.dim = n + 1;
  affine.eq.push_back({unit(n + 1, n), 1});
  std::vector<RVec> out;
  for (SignCell& sc : enumerate_sign_cells(affine, planes, keep)) {
    out.push_back(scale(slice(sc.witness, 0, n), 1 / sc.witness[n]));
  }
  return out;
}

}  // namespace vawrt
