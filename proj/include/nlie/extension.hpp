#pragma once

#include "nlie/bialgebra.hpp"
#include "nlie/matrix.hpp"
#include "nlie/report.hpp"
#include "nlie/structure.hpp"

namespace nlie {

/// Symmetric bilinear form, dense. Symmetry is checked at construction;
/// nondegeneracy is not required (the zero form is a valid input).
class BilinearForm {
 public:
  explicit BilinearForm(RatMatrix entries);
  static BilinearForm zero(int dim);

  int dim() const { return mat_.rows(); }
  const Rational& at(int i, int j) const { return mat_.at(i - 1, j - 1); }
  const RatMatrix& matrix() const { return mat_; }
  bool nondegenerate() const { return mat_.rank() == mat_.rows(); }
  bool operator==(const BilinearForm& o) const { return mat_ == o.mat_; }

 private:
  RatMatrix mat_;
};

/// Invariance of B under all bracket multiplications:
/// B(bracket(y, x), z) + B(x, bracket(y, z)) = 0 on all basis choices.
ValidationReport check_ad_invariance(const StructureConstants& mu,
                                     const BilinearForm& B);

/// The two-slot enlargement of an invariant-metric bracket: adds elements
/// z (slot 1) and h (slot 2) to get an arity-(n+1), dim-(m+2) bracket with
///   bracket'(h, x_{i_1..i_n}) = bracket(x_{i_1..i_n}),
///   bracket'(..z..) = 0,
///   bracket'(x_{i_1..i_{n+1}}) = B(bracket(i_1..i_n), x_{i_{n+1}}) z.
/// Original index i is stored at slot i+2. Rejects non-invariant B.
StructureConstants extend_algebra_metric(const StructureConstants& mu,
                                         const BilinearForm& B);

/// Metric extension with B = 0 (no precondition beyond a valid bracket).
StructureConstants extend_algebra_trivial(const StructureConstants& mu);

/// Extends the form to the enlarged space: original block kept,
/// B'(h,h) = 1, B'(z,h) = (-1)^{n-1}, all other new entries 0.
/// `arity_n` is the arity of the algebra being extended.
BilinearForm extend_form(const BilinearForm& B, int arity_n);

/// Extension of a whole bialgebra: bracket per extend_algebra_metric, and
/// the comultiplication of original basis vector k maps each coefficient at
/// tuple (j_1..j_n) to the extended tuple (z, j_1..j_n); z and h have zero
/// comultiplication. Requires validate(b) empty and B invariant.
Bialgebra extend_bialgebra(const Bialgebra& b, const BilinearForm& B);

/// Dual variant: trivial extension of the bracket, metric extension of the
/// dual bracket of delta (with Bdual invariant for it), read back as the
/// extended comultiplication.
Bialgebra extend_bialgebra_dual(const Bialgebra& b, const BilinearForm& Bdual);

/// Row basis of the space of symmetric invariant forms for mu; each row
/// lists the upper-triangle entries (i <= j) in lexicographic order.
/// Companion to build a form from such a row.
RatMatrix invariant_form_space(const StructureConstants& mu);
BilinearForm form_from_upper_triangle(int dim,
                                      const std::vector<Rational>& upper);

}  // namespace nlie
