#pragma once

#include <map>
#include <vector>

#include "hochlat/rational.hpp"

namespace hochlat {

/// Sparse exact-rational matrix with row-major storage. Rank uses
/// fraction-free (Bareiss-style) elimination after scaling each row to
/// integers; pivot column is the sparsest, ties broken by lowest index,
/// so results are deterministic.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;

  Rational get(int i, int j) const;
  void set(int i, int j, const Rational& v);
  void add(int i, int j, const Rational& v);
  const std::map<int, Rational>& row(int i) const { return data_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  /// Exact rank over the rationals.
  int rank() const;
  int kernel_dim() const { return cols_ - rank(); }

  /// A basis of the right kernel (dense columns), obtained from the reduced
  /// row echelon form; size equals kernel_dim().
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, Rational>> data_;
};

}  // namespace hochlat
