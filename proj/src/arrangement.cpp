#include "vawrt/arrangement.hpp"

#include "vawrt/linalg.hpp"

namespace vawrt {

namespace {

class CellSearch {
 public:
  CellSearch(const lp::System& base, const RMat& hyperplanes, const PrefixFilter& keep)
      : base_(base), hyperplanes_(hyperplanes), keep_(keep) {}

  std::vector<SignCell> run() {
    const auto start = lp::feasible_point(base_);
    if (!start) return {};
    std::vector<Sign> signs;
    descend(signs, *start);
    return std::move(cells_);
  }

 private:
  void descend(std::vector<Sign>& signs, const RVec& witness) {
    if (signs.size() == hyperplanes_.size()) {
      cells_.push_back(SignCell{signs, witness});
      return;
    }
    const std::size_t i = signs.size();
    const int own = sgn(dot(hyperplanes_[i], witness));
    RVec along;
    if (own == 0) along = tangent(signs, hyperplanes_[i]);
    for (Sign s : {Sign::kNeg, Sign::kZero, Sign::kPos}) {
      signs.push_back(s);
      if (!keep_ || keep_(signs)) {
        if (static_cast<int>(s) == own) {
          descend(signs, witness);
        } else if (own == 0 && is_zero(along)) {
          // h_i vanishes on the whole cell.
        } else if (auto w = own == 0 ? perturb(signs, witness, along, static_cast<int>(s)) : std::nullopt) {
          descend(signs, *w);
        } else if (auto w2 = realize(signs)) {
          descend(signs, *w2);
        }
      }
      signs.pop_back();
    }
  }

  // Component of h tangent to the linear hull of the current cell.
  RVec tangent(const std::vector<Sign>& signs, const RVec& h) const {
    RMat rows;
    for (const lp::Row& r : base_.eq) rows.push_back(r.a);
    for (std::size_t j = 0; j < signs.size(); ++j) {
      if (signs[j] == Sign::kZero) rows.push_back(hyperplanes_[j]);
    }
    return project_out(h, row_space_basis(rows, base_.dim));
  }

  // Step off the hyperplane along ±along, staying inside the cell and the base.
  std::optional<RVec> perturb(const std::vector<Sign>& signs, const RVec& witness, const RVec& along,
                              int s) const {
    const RVec d = s > 0 ? along : negate(along);
    std::vector<lp::Row> rows;
    for (const lp::Row& r : base_.le) {
      if (sgn(r.b - dot(r.a, witness)) == 0 && sgn(dot(r.a, d)) > 0) return std::nullopt;
      rows.push_back(r);
    }
    for (std::size_t j = 0; j + 1 < signs.size(); ++j) rows.push_back({hyperplanes_[j], 0});
    const Rat t = safe_step(witness, d, rows);
    return primitive(add(witness, scale(d, t)));
  }

  std::optional<RVec> realize(const std::vector<Sign>& signs) const {
    lp::System sys = base_;
    std::vector<lp::Row> strict;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      const RVec& h = hyperplanes_[i];
      switch (signs[i]) {
        case Sign::kNeg: strict.push_back({h, 0}); break;
        case Sign::kZero: sys.eq.push_back({h, 0}); break;
        case Sign::kPos: strict.push_back({negate(h), 0}); break;
      }
    }
    auto w = lp::strictly_feasible_point(sys, strict);
    if (w) *w = primitive(*w);
    return w;
  }

  const lp::System& base_;
  const RMat& hyperplanes_;
  const PrefixFilter& keep_;
  std::vector<SignCell> cells_;
};

}  // namespace

std::vector<SignCell> enumerate_sign_cells(const lp::System& base, const RMat& hyperplanes,
                                           const PrefixFilter& keep) {
  for (const RVec& h : hyperplanes) {
    if (h.size() != base.dim) throw DimensionError("arrangement: hyperplane has wrong length");
  }
  return CellSearch(base, hyperplanes, keep).run();
}

Rat safe_step(const RVec& x, const RVec& d, const std::vector<lp::Row>& rows) {
  Rat t = 1;
  for (const lp::Row& r : rows) {
    const Rat slack = r.b - dot(r.a, x);
    if (sgn(slack) == 0) continue;
    const Rat ad = dot(r.a, d);
    // Moving by t changes a·x by t·ad; stay strictly on the side of x.
    while ((sgn(slack) > 0 && t * ad >= slack) || (sgn(slack) < 0 && t * ad <= slack)) t /= 2;
  }
  return t;
}

}  // namespace vawrt
