#include "nlie/matrix.hpp"

#include <stdexcept>

namespace nlie {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            Rational(0)) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("RatMatrix: negative shape");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void RatMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < other.cols_; ++c)
        out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix apply: length mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

bool RatMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    if (at(r, r) != 0) return false;
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != -at(c, r)) return false;
  }
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::rref(std::vector<int>* pivot_cols) const {
  RatMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int piv = -1;
    for (int r = lead; r < rows_; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int k = 0; k < cols_; ++k) std::swap(m.at(piv, k), m.at(lead, k));
    Rational inv = 1 / m.at(lead, c);
    for (int k = 0; k < cols_; ++k) m.at(lead, k) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (int k = 0; k < cols_; ++k) m.at(r, k) -= f * m.at(lead, k);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++lead;
  }
  return m;
}

int RatMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
  std::vector<int> piv;
  RatMatrix r = rref(&piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[static_cast<std::size_t>(piv[i])] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RatMatrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("inverse: matrix not square");
  RatMatrix aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  std::vector<int> piv;
  RatMatrix red = aug.rref(&piv);
  for (int i = 0; i < rows_; ++i)
    if (static_cast<int>(piv.size()) <= i || piv[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("inverse: singular matrix");
  RatMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = red.at(r, cols_ + c);
  return out;
}

}  // namespace nlie
