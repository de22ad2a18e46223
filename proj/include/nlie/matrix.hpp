#pragma once

#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

/// Dense matrix of exact rationals with the linear algebra the library
/// needs: rank, reduced row echelon form, null space, inverse. Elimination
/// uses a deterministic pivot order (lowest column, then lowest row) so all
/// derived reports are reproducible.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[idx(r, c)]; }
  const Rational& at(int r, int c) const { return data_[idx(r, c)]; }

  void append_row(const std::vector<Rational>& row);

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool operator==(const RatMatrix& other) const;

  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_zero() const;

  int rank() const;
  /// Row-reduced echelon form together with the pivot columns.
  RatMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
  /// Basis of the right null space, one column vector per basis element.
  std::vector<std::vector<Rational>> nullspace() const;
  /// Inverse; throws std::invalid_argument when singular or non-square.
  RatMatrix inverse() const;
  bool is_invertible() const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace nlie
