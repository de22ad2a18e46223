#pragma once

#include "nlie/coalgebra.hpp"
#include "nlie/structure.hpp"

namespace nlie {

/// Bracket plus comultiplication on the same space. Construction only
/// checks shapes; validity is a separate question answered by validate().
struct Bialgebra {
  StructureConstants mu;
  Comultiplication delta;

  Bialgebra(StructureConstants mu_, Comultiplication delta_);

  int arity() const { return mu.arity(); }
  int dim() const { return mu.dim(); }
  bool operator==(const Bialgebra& o) const {
    return mu == o.mu && delta == o.delta;
  }
};

/// Compatibility, tensor route: Delta of every basis bracket must equal the
/// double alternating sum of the factor-s bracket actions applied to the
/// Delta of each argument.
ValidationReport check_compatibility_tensor(const Bialgebra& b);

/// Compatibility, constants route: the equivalent closed-form identity on
/// coefficients, evaluated independently of any tensor arithmetic. For each
/// pair of increasing n-tuples i (bracket side) and j (wedge side):
///   sum_l c^l_i a^j_l  =  sum_k (-1)^{n-k} sum_s sum_r
///       a^{(j with slot s replaced by r)}_{i_k} c^{j_s}_{(i minus i_k, r)}.
ValidationReport check_compatibility_constants(const Bialgebra& b);

/// All five checks (bracket identity, both coalgebra routes, both
/// compatibility routes) merged; empty exactly for a bialgebra.
ValidationReport validate(const Bialgebra& b);

/// Swaps the roles of bracket and comultiplication over the dual space; an
/// exact involution on constants. Requires validate(b) empty.
Bialgebra dualize(const Bialgebra& b);
/// Same relabeling without the validity precondition (for symmetry tests).
Bialgebra dualize_unchecked(const Bialgebra& b);

/// True iff phi is simultaneously a bracket isomorphism and a
/// comultiplication isomorphism b1 -> b2. Throws on singular phi.
bool check_equivalence_map(const RatMatrix& phi, const Bialgebra& b1,
                           const Bialgebra& b2);

/// Bracket-only half of the equivalence test (also used by the catalog).
bool check_algebra_iso(const RatMatrix& phi, const StructureConstants& mu1,
                       const StructureConstants& mu2);

}  // namespace nlie
