#pragma once

#include <map>
#include <vector>

#include "nlie/index.hpp"
#include "nlie/matrix.hpp"
#include "nlie/rational.hpp"
#include "nlie/report.hpp"
#include "nlie/tensor.hpp"

namespace nlie {

/// Dense coefficient vector of a single element.
using VectorElement = std::vector<Rational>;

VectorElement basis_vector(int dim, int i);
VectorElement zero_vector(int dim);

/// Structure constants of an arity-n antisymmetric multilinear map on an
/// m-dimensional space: for each strictly increasing n-tuple, the m target
/// coefficients. Lookups on arbitrary tuples canonicalize and fold in the
/// permutation sign, so antisymmetry holds by construction. The same type
/// doubles as comultiplication coefficients (see coalgebra.hpp).
class StructureConstants {
 public:
  StructureConstants(int arity, int dim);

  int arity() const { return arity_; }
  int dim() const { return dim_; }

  /// Adds v to the target-k coefficient at tuple t (any order; the sign is
  /// folded in). Throws on repeated indices or out-of-range values.
  void add(const IndexTuple& t, int k, const Rational& v);

  /// Target coefficients at t, sign-folded; zero vector on repeats.
  VectorElement row(const IndexTuple& t) const;
  Rational coeff(const IndexTuple& t, int k) const;

  /// Stored entries: strictly increasing tuples with a nonzero coefficient
  /// vector each. Deterministic (lexicographic) order.
  const std::map<IndexTuple, VectorElement>& entries() const {
    return entries_;
  }

  bool operator==(const StructureConstants& other) const;

 private:
  int arity_;
  int dim_;
  std::map<IndexTuple, VectorElement> entries_;
};

/// Bracket of basis elements: row lookup as a vector.
VectorElement bracket_basis(const StructureConstants& mu, const IndexTuple& t);

/// Multilinear extension of the bracket to arbitrary arguments.
VectorElement bracket_eval(const StructureConstants& mu,
                           const std::vector<VectorElement>& args);

/// The n-ary Jacobi condition as a residual on structure constants:
/// for every increasing (n-1)-tuple i, increasing n-tuple j and target k,
///   sum_t c^t_j c^k_{i,t}
///     - sum_s (-1)^{n-s} sum_t c^t_{i,j_s} c^k_{j with j_s removed, t} = 0.
/// Empty report exactly when the bracket satisfies the identity.
ValidationReport check_fundamental_identity(const StructureConstants& mu);

/// Row basis (RREF rows) of the span of all bracket values; row count is
/// the derived-subalgebra dimension.
RatMatrix derived_algebra(const StructureConstants& mu);

/// Row basis of { x : bracket(x, e_{t_1}, ..., e_{t_{n-1}}) = 0 for all t }.
RatMatrix center(const StructureConstants& mu);

/// Matrix of y -> bracket(e_{t_1}, ..., e_{t_{n-1}}, y). t has length n-1.
RatMatrix ad_operator(const StructureConstants& mu, const IndexTuple& t);

/// Same with general vector arguments in the first n-1 slots.
RatMatrix ad_operator_general(const StructureConstants& mu,
                              const std::vector<VectorElement>& xs);

/// Applies M to tensor factor s (1-based) of every term of T.
TensorElement apply_to_factor(const RatMatrix& M, int s,
                              const TensorElement& T);

/// Action of the bracket on factor s of the n-fold tensor power:
/// identity on every factor except s, where ad_operator(mu, t) acts.
TensorElement rho_s_apply(const StructureConstants& mu, int s,
                          const IndexTuple& t, const TensorElement& T);

/// Verifies that the factor-s action is a module structure: the operator
/// bracket relation on all pairs of basis (n-1)-tuples, and the relation
/// expressing the action of a bracket value in the first slot, on all basis
/// n-tuples and (n-2)-tuples.
ValidationReport check_rho_module(const StructureConstants& mu, int s);

/// Transports constants through the invertible basis change f_i = P e_i
/// (columns of P are the new basis vectors). Throws on singular P.
StructureConstants change_basis(const StructureConstants& mu,
                                const RatMatrix& P);

}  // namespace nlie
