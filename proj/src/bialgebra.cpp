#include "nlie/bialgebra.hpp"

#include <stdexcept>

namespace nlie {

Bialgebra::Bialgebra(StructureConstants mu_, Comultiplication delta_)
    : mu(std::move(mu_)), delta(std::move(delta_)) {
  if (mu.arity() != delta.arity() || mu.dim() != delta.dim())
    throw std::invalid_argument("Bialgebra: mu/delta shape mismatch");
}

ValidationReport check_compatibility_tensor(const Bialgebra& b) {
  const int n = b.arity();
  const int m = b.dim();
  ValidationReport report;
  for_each_increasing(m, n, [&](const IndexTuple& i) {
    TensorElement lhs = delta_apply(b.delta, b.mu.row(i));
    TensorElement rhs(n, m);
    for (int k = 1; k <= n; ++k) {
      IndexTuple rest;
      for (int q = 1; q <= n; ++q)
        if (q != k) rest.push_back(i[static_cast<std::size_t>(q - 1)]);
      TensorElement dk = delta_apply_basis(b.delta, i[static_cast<std::size_t>(k - 1)]);
      int sign = ((n - k) % 2 == 0) ? 1 : -1;
      for (int s = 1; s <= n; ++s)
        rhs += rho_s_apply(b.mu, s, rest, dk).scaled(sign);
    }
    TensorElement diff = lhs - rhs;
    for (const auto& [t, c] : diff.terms()) {
      std::vector<int> where(i);
      where.insert(where.end(), t.begin(), t.end());
      report.add("compatibility-tensor", where, rat_str(c));
    }
  });
  report.sort();
  return report;
}

ValidationReport check_compatibility_constants(const Bialgebra& b) {
  const int n = b.arity();
  const int m = b.dim();
  const StructureConstants& mu = b.mu;
  const StructureConstants& a = b.delta.constants;
  ValidationReport report;
  for_each_increasing(m, n, [&](const IndexTuple& i) {
    VectorElement ci = mu.row(i);
    for_each_increasing(m, n, [&](const IndexTuple& j) {
      VectorElement aj = a.row(j);
      Rational lhs = 0;
      for (int l = 0; l < m; ++l)
        lhs += ci[static_cast<std::size_t>(l)] * aj[static_cast<std::size_t>(l)];
      Rational rhs = 0;
      for (int k = 1; k <= n; ++k) {
        int sign = ((n - k) % 2 == 0) ? 1 : -1;
        IndexTuple ihat;
        for (int q = 1; q <= n; ++q)
          if (q != k) ihat.push_back(i[static_cast<std::size_t>(q - 1)]);
        ihat.push_back(0);
        for (int s = 1; s <= n; ++s) {
          IndexTuple jrep = j;
          for (int r = 1; r <= m; ++r) {
            jrep[static_cast<std::size_t>(s - 1)] = r;
            Rational av =
                a.coeff(jrep, i[static_cast<std::size_t>(k - 1)]);
            if (av == 0) continue;
            ihat.back() = r;
            rhs += sign * av *
                   mu.coeff(ihat, j[static_cast<std::size_t>(s - 1)]);
          }
        }
      }
      if (lhs != rhs) {
        std::vector<int> where(i);
        where.insert(where.end(), j.begin(), j.end());
        report.add("compatibility-constants", where, rat_str(lhs - rhs));
      }
    });
  });
  report.sort();
  return report;
}

ValidationReport validate(const Bialgebra& b) {
  ValidationReport report = check_fundamental_identity(b.mu);
  report.merge(check_coalgebra_dual(b.delta));
  report.merge(check_coalgebra_tensor(b.delta));
  report.merge(check_compatibility_tensor(b));
  report.merge(check_compatibility_constants(b));
  report.sort();
  return report;
}

Bialgebra dualize_unchecked(const Bialgebra& b) {
  return Bialgebra(dual_algebra(b.delta), dual_comultiplication(b.mu));
}

Bialgebra dualize(const Bialgebra& b) {
  ValidationReport r = validate(b);
  if (!r.ok())
    throw std::invalid_argument("dualize: input is not a valid bialgebra:\n" +
                                r.to_string());
  return dualize_unchecked(b);
}

bool check_algebra_iso(const RatMatrix& phi, const StructureConstants& mu1,
                       const StructureConstants& mu2) {
  if (mu1.arity() != mu2.arity() || mu1.dim() != mu2.dim())
    throw std::invalid_argument("check_algebra_iso: shape mismatch");
  const int n = mu1.arity();
  const int m = mu1.dim();
  if (phi.rows() != m || phi.cols() != m || !phi.is_invertible())
    throw std::invalid_argument("check_algebra_iso: phi must be invertible");
  bool ok = true;
  for_each_increasing(m, n, [&](const IndexTuple& t) {
    if (!ok) return;
    VectorElement lhs = phi.apply(mu1.row(t));
    std::vector<VectorElement> args;
    for (int i : t) {
      VectorElement col(static_cast<std::size_t>(m));
      for (int r = 0; r < m; ++r)
        col[static_cast<std::size_t>(r)] = phi.at(r, i - 1);
      args.push_back(col);
    }
    if (lhs != bracket_eval(mu2, args)) ok = false;
  });
  return ok;
}

bool check_equivalence_map(const RatMatrix& phi, const Bialgebra& b1,
                           const Bialgebra& b2) {
  return check_algebra_iso(phi, b1.mu, b2.mu) &&
         check_coalgebra_iso(phi, b1.delta, b2.delta);
}

}  // namespace nlie
