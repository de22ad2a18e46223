#pragma once

#include <map>
#include <vector>

#include "nlie/index.hpp"
#include "nlie/rational.hpp"

namespace nlie {

class RatMatrix;

/// Sparse element of the p-fold tensor power of an m-dimensional space.
/// Keys are full (not necessarily increasing) index tuples; zero
/// coefficients are pruned eagerly, so structural equality is mathematical
/// equality. Values are immutable in spirit: every operation returns a new
/// element.
class TensorElement {
 public:
  TensorElement(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds coeff * (basis tensor for tuple); prunes on cancellation.
  void add_term(const IndexTuple& tuple, const Rational& coeff);

  Rational coefficient(const IndexTuple& tuple) const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement scaled(const Rational& c) const;
  bool operator==(const TensorElement& other) const;

  const std::map<IndexTuple, Rational>& terms() const { return terms_; }

 private:
  int order_;
  int dim_;
  std::map<IndexTuple, Rational> terms_;
};

/// Unnormalized antisymmetrization of a basis tuple:
/// sum over permutations sigma of sign(sigma) * permuted basis tensor.
/// No 1/p! factor, so <dual tuple, wedge> equals the generalized Kronecker
/// determinant. Repeated indices give the zero element.
TensorElement wedge(const IndexTuple& t, int dim);

/// Source-position array of the dual-side rearrangement: the dual map sends
/// x_1...x_{n-1} y_1...y_n to y_1...(skip y_s)...y_n x_1...x_{n-1} y_s.
/// Entry q holds the input position (0-based) copied to output position q.
std::vector<int> omega_dual_positions(int n, int s);

/// Factor permutation on order-(2n-1) tensors adjoint (under the dual
/// pairing) to the rearrangement above. Linear bijection.
TensorElement omega_apply(const TensorElement& t, int n, int s);

/// Coefficient of a dual basis tuple in t. Lengths must match.
Rational pair_coefficient(const IndexTuple& dual, const TensorElement& t);

/// Applies phi to every tensor factor: (phi (x) ... (x) phi)(t).
TensorElement map_factorwise(const RatMatrix& phi, const TensorElement& t);

}  // namespace nlie
