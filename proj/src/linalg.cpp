#include "omt/linalg.hpp"

#include <utility>

namespace omt {

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::select_columns(Subset keep) const {
  const auto positions = keep.positions();
  RationalMatrix out(rows_, positions.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < positions.size(); ++j) out(r, j) = (*this)(r, positions[j]);
  return out;
}

RationalMatrix RationalMatrix::remove_row(std::size_t row) const {
  RationalMatrix out(rows_ - 1, cols_);
  for (std::size_t r = 0, k = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(r, c);
    ++k;
  }
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::vector<std::size_t> reduce_to_rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t column_rank(const RationalMatrix& m, Subset cols) {
  RationalMatrix sub = m.select_columns(cols);
  return reduce_to_rref(sub).size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = reduce_to_rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> w(m.cols());
    w[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = -r(i, free);
    basis.push_back(std::move(w));
  }
  return basis;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto rank = reduce_to_rref(r).size();
  RationalMatrix out(rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = r(i, c);
  return out;
}

std::optional<std::vector<Rational>> EchelonBasis::residual(std::span<const Rational> v) const {
  std::vector<Rational> w(v.begin(), v.end());
  // Row k is zero at the pivots of rows inserted before it, so one pass in
  // insertion order clears every pivot.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (w[p] == 0) continue;
    const Rational f = w[p];
    for (std::size_t i = 0; i < dim_; ++i)
      if (rows_[k][i] != 0) w[i] -= f * rows_[k][i];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return std::nullopt;
  const Rational inv = 1 / w[p];
  for (std::size_t i = p; i < dim_; ++i) w[i] *= inv;
  return w;
}

void EchelonBasis::append_residual(std::vector<Rational> r) {
  std::size_t p = 0;
  while (r[p] == 0) ++p;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
}

bool EchelonBasis::insert(std::span<const Rational> v) {
  auto r = residual(v);
  if (!r) return false;
  append_residual(std::move(*r));
  return true;
}

}  // namespace omt
