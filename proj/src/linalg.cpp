#include "vawrt/linalg.hpp"

#include <utility>

namespace vawrt {

namespace {

struct Echelon {
  RMat rows;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination into reduced row echelon form.
Echelon rref(RMat m, std::size_t dim) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < dim; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < dim; ++j) {
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

void check_dims(const RMat& rows, std::size_t dim) {
  for (const RVec& r : rows) {
    if (r.size() != dim) throw DimensionError("matrix row has wrong length");
  }
}

}  // namespace

std::size_t rank(const RMat& rows, std::size_t dim) {
  check_dims(rows, dim);
  return rref(rows, dim).pivots.size();
}

RMat row_space_basis(const RMat& rows, std::size_t dim) {
  check_dims(rows, dim);
  Echelon e = rref(rows, dim);
  for (RVec& r : e.rows) r = primitive(r);
  return e.rows;
}

RMat null_space_basis(const RMat& rows, std::size_t dim) {
  check_dims(rows, dim);
  Echelon e = rref(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  RMat basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RVec v = zeros(dim);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return row_space_basis(basis, dim);
}

std::optional<RVec> solve(const RMat& m, const RVec& b, std::size_t dim) {
  check_dims(m, dim);
  if (m.size() != b.size()) throw DimensionError("solve: rhs size mismatch");
  RMat aug;
  aug.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    RVec row = m[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  Echelon e = rref(aug, dim + 1);
  RVec x = zeros(dim);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == dim) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][dim];
  }
  return x;
}

RVec project_out(const RVec& v, const RMat& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  // Gram system G c = B v, result v - B^T c.
  RMat gram(k, zeros(k));
  RVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto c = solve(gram, rhs, k);
  RVec out = v;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn((*c)[i]) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*c)[i] * basis[i][j];
  }
  return out;
}

bool in_span(const RVec& v, const RMat& basis) {
  if (is_zero(v)) return true;
  const std::size_t dim = v.size();
  RMat cols(dim, zeros(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) cols[i][j] = basis[j][i];
  }
  return solve(cols, v, basis.size()).has_value();
}

}  // namespace vawrt
