#include "vawrt/lp.hpp"

#include <limits>

namespace vawrt::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, zeros(cols)), rhs_(rows, Rat(0)), basis_(rows, kNone), cols_(cols) {}

  Rat& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rat& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = 1 / t_[r][c];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(t_[r][j]) != 0) t_[r][j] *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rat f = t_[i][c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Minimizes cost·z over columns with allowed[j]. Bland's rule throughout.
  Status minimize(const RVec& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_ && enter == kNone; ++j) {
        if (!allowed[j]) continue;
        Rat d = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
          if (sgn(cost[basis_[i]]) != 0 && sgn(t_[i][j]) != 0) d -= cost[basis_[i]] * t_[i][j];
        }
        if (sgn(d) < 0) enter = j;
      }
      if (enter == kNone) return Status::kOptimal;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rat ratio = rhs_[i] / t_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return Status::kUnbounded;
      pivot(leave, enter);
    }
  }

  RVec solution() const {
    RVec z(cols_, Rat(0));
    for (std::size_t i = 0; i < t_.size(); ++i) z[basis_[i]] = rhs_[i];
    return z;
  }

 private:
  std::vector<RVec> t_;
  RVec rhs_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

Result maximize(const System& sys, const RVec& objective) {
  const std::size_t n = sys.dim;
  if (objective.size() != n) throw DimensionError("lp: objective size mismatch");
  for (const Row& r : sys.le) {
    if (r.a.size() != n) throw DimensionError("lp: row size mismatch");
  }
  for (const Row& r : sys.eq) {
    if (r.a.size() != n) throw DimensionError("lp: row size mismatch");
  }
  const std::size_t nle = sys.le.size();
  const std::size_t m = nle + sys.eq.size();

  // Columns: x+ [0,n), x- [n,2n), slacks [2n,2n+nle), artificials after.
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < nle; ++i) {
    if (sgn(sys.le[i].b) < 0) art_rows.push_back(i);
  }
  for (std::size_t i = 0; i < sys.eq.size(); ++i) art_rows.push_back(nle + i);
  const std::size_t art0 = 2 * n + nle;
  const std::size_t cols = art0 + art_rows.size();

  Tableau tab(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = i < nle ? sys.le[i] : sys.eq[i - nle];
    const bool flip = sgn(row.b) < 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = row.a[j];
      if (sgn(v) == 0) continue;
      tab.at(i, j) = flip ? Rat(-v) : v;
      tab.at(i, n + j) = flip ? v : Rat(-v);
    }
    if (i < nle) tab.at(i, 2 * n + i) = flip ? -1 : 1;
    tab.rhs(i) = flip ? Rat(-row.b) : row.b;
    if (i < nle && !flip) tab.basis(i) = 2 * n + i;
  }
  for (std::size_t k = 0; k < art_rows.size(); ++k) {
    tab.at(art_rows[k], art0 + k) = 1;
    tab.basis(art_rows[k]) = art0 + k;
  }

  std::vector<bool> allowed(cols, true);
  if (!art_rows.empty()) {
    RVec cost(cols, Rat(0));
    for (std::size_t j = art0; j < cols; ++j) cost[j] = 1;
    tab.minimize(cost, allowed);
    Rat infeas = 0;
    const RVec z = tab.solution();
    for (std::size_t j = art0; j < cols; ++j) infeas += z[j];
    if (sgn(infeas) > 0) return Result{Status::kInfeasible, {}, 0};
    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis(i) < art0) {
        ++i;
        continue;
      }
      std::size_t c = kNone;
      for (std::size_t j = 0; j < art0 && c == kNone; ++j) {
        if (sgn(tab.at(i, j)) != 0) c = j;
      }
      if (c == kNone) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, c);
        ++i;
      }
    }
    for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  }

  RVec cost(cols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = -objective[j];
    cost[n + j] = objective[j];
  }
  const Status st = tab.minimize(cost, allowed);
  const RVec z = tab.solution();
  RVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
  return Result{st, x, dot(objective, x)};
}

std::optional<RVec> feasible_point(const System& sys) {
  Result r = maximize(sys, zeros(sys.dim));
  if (r.status == Status::kInfeasible) return std::nullopt;
  return r.x;
}

std::optional<RVec> strictly_feasible_point(const System& sys, const std::vector<Row>& strict) {
  if (strict.empty()) return feasible_point(sys);
  // Maximize t subject to a·x + t ≤ b on strict rows, t ≤ 1.
  System ext;
  ext.dim = sys.dim + 1;
  auto lift = [](const Row& r, const Rat& tcoef) {
    Row out{r.a, r.b};
    out.a.push_back(tcoef);
    return out;
  };
  for (const Row& r : sys.le) ext.le.push_back(lift(r, 0));
  for (const Row& r : sys.eq) ext.eq.push_back(lift(r, 0));
  for (const Row& r : strict) ext.le.push_back(lift(r, 1));
  Row cap{zeros(ext.dim), 1};
  cap.a.back() = 1;
  ext.le.push_back(cap);
  RVec obj = zeros(ext.dim);
  obj.back() = 1;
  Result r = maximize(ext, obj);
  if (r.status != Status::kOptimal || sgn(r.value) <= 0) return std::nullopt;
  r.x.pop_back();
  return r.x;
}

}  // namespace vawrt::lp
