#pragma once

// Integer lattice linear algebra over arbitrary-precision integers.

#include <cstddef>
#include <span>
#include <vector>

#include "qtorb/exact.hpp"

namespace qtorb {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMat identity(std::size_t n);
  /// Matrix whose j-th column is cols[j]; every column must have length `rows`.
  static IntMat from_columns(std::span<const IntVec> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec column(std::size_t c) const;
  IntMat transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntVec operator*(const IntMat& a, const IntVec& x);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// gcd of the entries is 1. Throws Error for the zero vector.
bool is_primitive(const IntVec& v);

Int gcd_of(const IntVec& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

/// Rank over the rationals.
std::size_t rank(const IntMat& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMat u;
  IntMat d;
  IntMat v;
  /// Inverse of u, accumulated alongside it.
  IntMat u_inv;

  /// min(rows, cols) diagonal entries of d.
  std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMat& m);

/// Basis (as columns) of the lattice (span_Q(L) ∩ Z^n). Throws Error when the
/// columns of L are dependent.
IntMat saturation(const IntMat& l);

/// Unique rational c with B * c = w. Throws Error when the columns of B are
/// dependent or w lies outside their span.
RatVec coords_in_basis(const IntMat& basis, const IntVec& w);

/// Non-throwing variant: false when w is outside the span. Columns of B must be
/// independent.
bool try_coords_in_basis(const IntMat& basis, const IntVec& w, RatVec& out);

}  // namespace qtorb
