#pragma once

#include <string>

#include "nlie/bialgebra.hpp"
#include "nlie/coalgebra.hpp"
#include "nlie/structure.hpp"

namespace nlie {

/// Isomorphism class of an (n+1)-dimensional arity-n bracket, following the
/// standard list: abelian; two one-dimensional-derived cases (B1 central,
/// B2 not); three two-dimensional-derived cases (C1, C2 with parameter
/// alpha != 0, C3); and the simple-type series D(r), 3 <= r <= n+1.
struct CanonicalLabel {
  enum class Kind { Abelian, B1, B2, C1, C2, C3, D, Unclassified };
  Kind kind = Kind::Unclassified;
  Rational alpha = 0;  // only for C2
  int r = 0;           // only for D

  static CanonicalLabel abelian() { return {Kind::Abelian, 0, 0}; }
  static CanonicalLabel b1() { return {Kind::B1, 0, 0}; }
  static CanonicalLabel b2() { return {Kind::B2, 0, 0}; }
  static CanonicalLabel c1() { return {Kind::C1, 0, 0}; }
  static CanonicalLabel c2(const Rational& a) { return {Kind::C2, a, 0}; }
  static CanonicalLabel c3() { return {Kind::C3, 0, 0}; }
  static CanonicalLabel d(int r) { return {Kind::D, 0, r}; }
  static CanonicalLabel unclassified() { return {}; }

  bool operator==(const CanonicalLabel& o) const {
    return kind == o.kind && alpha == o.alpha && r == o.r;
  }
  std::string to_string() const;
};

/// Constants realizing a label at dimension n+1. Throws on malformed labels
/// (alpha = 0 for C2, r outside 3..n+1 for D) and on n < 3.
StructureConstants canonical_algebra(int n, const CanonicalLabel& label);

/// The (n+1)-dimensional simple bracket: every omit-one-index tuple maps to
/// the omitted basis vector. n = 2 only with allow_n2 (cross-check use).
StructureConstants simple_an(int n, bool allow_n2 = false);

/// Inverse of canonical_algebra up to isomorphism, decided from exact
/// rational invariants of the derived subalgebra action. Requires a valid
/// bracket of dimension arity+1; returns Unclassified when the rational
/// discriminants do not settle the case (and always for arity 2 beyond the
/// abelian bracket).
CanonicalLabel classify(const StructureConstants& mu);

/// 3-ary comultiplication on the m x m matrix space (dim m^2). Basis order:
/// off-diagonal units E_ij row-major, then consecutive diagonal differences
/// E_jj - E_{j+1,j+1}, then the identity matrix last.
Comultiplication example_coalgebra_matrix(int m);

/// Delta(e_i) = wedge of all basis vectors except e_i; rank n+1.
Comultiplication example_coalgebra_top(int n);

/// The worked (n+1)-dimensional bialgebra: mu(x_1,x_3..x_{n+1}) = x_1,
/// mu(x_2..x_{n+1}) = x_2; Delta(x_1) = x_3^x_2^x_4^...,
/// Delta(x_3) = x_1^x_2^x_4^..., Delta = 0 elsewhere.
Bialgebra example_bialgebra(int n);

/// One bracket with three comultiplications plus the comparison maps
/// between them (coalgebra isomorphisms; only sigma is a bialgebra
/// equivalence).
struct ThreeDeltas {
  StructureConstants mu;
  Comultiplication d1, d2, d3;
  RatMatrix phi12, phi13, phi23, sigma;
};
ThreeDeltas example_three_deltas(int n);

}  // namespace nlie
