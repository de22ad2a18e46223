#pragma once

#include "nlie/matrix.hpp"
#include "nlie/report.hpp"
#include "nlie/structure.hpp"
#include "nlie/tensor.hpp"

namespace nlie {

/// Comultiplication into the n-fold wedge power: the coefficient of the
/// increasing tuple (i_1..i_n) in Delta(e_l) wedge-expanded. Storage reuses
/// StructureConstants, reading entry (tuple, l) as that coefficient; the
/// shared canonical storage gives antisymmetry in the upper indices.
struct Comultiplication {
  StructureConstants constants;

  Comultiplication(int arity, int dim) : constants(arity, dim) {}
  explicit Comultiplication(StructureConstants c) : constants(std::move(c)) {}

  int arity() const { return constants.arity(); }
  int dim() const { return constants.dim(); }
  bool operator==(const Comultiplication& o) const {
    return constants == o.constants;
  }
};

/// Delta applied to a general element: sum of coefficient-weighted wedges.
TensorElement delta_apply(const Comultiplication& d, const VectorElement& v);
TensorElement delta_apply_basis(const Comultiplication& d, int l);

/// Reads the comultiplication as an n-ary bracket on the dual space; a pure
/// relabeling, involutive with dual_comultiplication.
StructureConstants dual_algebra(const Comultiplication& d);
Comultiplication dual_comultiplication(const StructureConstants& mu);

/// Coalgebra condition, dual route: the dual bracket must satisfy the
/// n-ary Jacobi condition.
ValidationReport check_coalgebra_dual(const Comultiplication& d);

/// Coalgebra condition, tensor route: for each basis vector, apply Delta,
/// then Delta again to the last factor of every term, and require the
/// alternating omega combination of the order-(2n-1) result to vanish.
/// Independent of the dual route; the two must agree.
ValidationReport check_coalgebra_tensor(const Comultiplication& d);

/// Dimension of the derived algebra of the dual bracket.
int rank(const Comultiplication& d);

/// True iff (phi tensor ... tensor phi) Delta1 = Delta2 phi on every basis
/// vector. Throws on singular phi or shape mismatch.
bool check_coalgebra_iso(const RatMatrix& phi, const Comultiplication& d1,
                         const Comultiplication& d2);

}  // namespace nlie
