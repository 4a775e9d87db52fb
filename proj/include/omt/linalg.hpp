#pragma once

// Dense exact rational matrices and the handful of eliminations the matroid
// layer needs (rank, row echelon form, kernel).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "omt/poly.hpp"
#include "omt/subset.hpp"

namespace omt {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;

  /// Keeps the columns whose positions are in `keep`, in order.
  RationalMatrix select_columns(Subset keep) const;
  RationalMatrix remove_row(std::size_t r) const;
  RationalMatrix transposed() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form, in place. Returns the pivot column of each
/// nonzero row; rows past the returned size are zero.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& m);

/// Rank of the columns at positions `cols`, by Gaussian elimination.
std::size_t column_rank(const RationalMatrix& m, Subset cols);

/// Basis of {w : m w = 0}, one vector per free column of the RREF.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// The nonzero rows of the RREF: a basis of the row space.
RationalMatrix row_space_basis(const RationalMatrix& m);

/// Incremental echelon basis of a growing set of column vectors.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

  /// Reduces v against the basis; appends it and returns true if independent.
  bool insert(std::span<const Rational> v);

  /// Normalized residual of v against the basis, or nullopt if v is in the span.
  std::optional<std::vector<Rational>> residual(std::span<const Rational> v) const;
  /// Appends a vector returned by residual().
  void append_residual(std::vector<Rational> r);

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace omt
