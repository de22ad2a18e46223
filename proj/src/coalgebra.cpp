#include "nlie/coalgebra.hpp"

#include <stdexcept>

namespace nlie {

TensorElement delta_apply(const Comultiplication& d, const VectorElement& v) {
  const int n = d.arity();
  const int m = d.dim();
  if (static_cast<int>(v.size()) != m)
    throw std::invalid_argument("delta_apply: dim mismatch");
  TensorElement out(n, m);
  for (const auto& [t, vec] : d.constants.entries()) {
    Rational c = 0;
    for (int l = 0; l < m; ++l)
      c += v[static_cast<std::size_t>(l)] * vec[static_cast<std::size_t>(l)];
    if (c == 0) continue;
    out += wedge(t, m).scaled(c);
  }
  return out;
}

TensorElement delta_apply_basis(const Comultiplication& d, int l) {
  return delta_apply(d, basis_vector(d.dim(), l));
}

StructureConstants dual_algebra(const Comultiplication& d) {
  return d.constants;
}

Comultiplication dual_comultiplication(const StructureConstants& mu) {
  return Comultiplication(mu);
}

ValidationReport check_coalgebra_dual(const Comultiplication& d) {
  return check_fundamental_identity(dual_algebra(d));
}

ValidationReport check_coalgebra_tensor(const Comultiplication& d) {
  const int n = d.arity();
  const int m = d.dim();
  ValidationReport report;
  for (int l = 1; l <= m; ++l) {
    TensorElement first = delta_apply_basis(d, l);
    // apply Delta to the LAST factor of every term
    TensorElement big(2 * n - 1, m);
    for (const auto& [t, c] : first.terms()) {
      TensorElement inner = delta_apply_basis(d, t.back());
      for (const auto& [t2, c2] : inner.terms()) {
        IndexTuple full(t.begin(), t.end() - 1);
        full.insert(full.end(), t2.begin(), t2.end());
        big.add_term(full, c * c2);
      }
    }
    TensorElement residual = big;
    for (int s = 1; s <= n; ++s) {
      int sign = ((n - s) % 2 == 0) ? 1 : -1;
      residual = residual - omega_apply(big, n, s).scaled(sign);
    }
    for (const auto& [t, c] : residual.terms()) {
      std::vector<int> where{l};
      where.insert(where.end(), t.begin(), t.end());
      report.add("coalgebra-tensor", where, rat_str(c));
    }
  }
  report.sort();
  return report;
}

int rank(const Comultiplication& d) {
  return derived_algebra(dual_algebra(d)).rows();
}

bool check_coalgebra_iso(const RatMatrix& phi, const Comultiplication& d1,
                         const Comultiplication& d2) {
  if (d1.arity() != d2.arity() || d1.dim() != d2.dim())
    throw std::invalid_argument("check_coalgebra_iso: shape mismatch");
  const int m = d1.dim();
  if (phi.rows() != m || phi.cols() != m || !phi.is_invertible())
    throw std::invalid_argument("check_coalgebra_iso: phi must be invertible");
  for (int l = 1; l <= m; ++l) {
    TensorElement lhs = map_factorwise(phi, delta_apply_basis(d1, l));
    VectorElement img(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) img[static_cast<std::size_t>(r)] = phi.at(r, l - 1);
    TensorElement rhs = delta_apply(d2, img);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace nlie
