#include "nlie/extension.hpp"

#include <stdexcept>

namespace nlie {

BilinearForm::BilinearForm(RatMatrix entries) : mat_(std::move(entries)) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("BilinearForm: not square");
  if (!mat_.is_symmetric())
    throw std::invalid_argument("BilinearForm: not symmetric");
}

BilinearForm BilinearForm::zero(int dim) {
  return BilinearForm(RatMatrix(dim, dim));
}

ValidationReport check_ad_invariance(const StructureConstants& mu,
                                     const BilinearForm& B) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (B.dim() != m)
    throw std::invalid_argument("check_ad_invariance: dim mismatch");
  ValidationReport report;
  for_each_increasing(m, n - 1, [&](const IndexTuple& y) {
    IndexTuple full = y;
    full.push_back(0);
    for (int x = 1; x <= m; ++x) {
      full.back() = x;
      VectorElement vx = mu.row(full);
      for (int z = 1; z <= m; ++z) {
        full.back() = z;
        VectorElement vz = mu.row(full);
        Rational r = 0;
        for (int l = 1; l <= m; ++l) {
          r += vx[static_cast<std::size_t>(l - 1)] * B.at(l, z);
          r += B.at(x, l) * vz[static_cast<std::size_t>(l - 1)];
        }
        if (r != 0) {
          std::vector<int> where(y);
          where.push_back(x);
          where.push_back(z);
          report.add("ad-invariance", where, rat_str(r));
        }
      }
    }
  });
  report.sort();
  return report;
}

StructureConstants extend_algebra_metric(const StructureConstants& mu,
                                         const BilinearForm& B) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (B.dim() != m)
    throw std::invalid_argument("extend_algebra_metric: dim mismatch");
  ValidationReport inv = check_ad_invariance(mu, B);
  if (!inv.ok())
    throw std::invalid_argument(
        "extend_algebra_metric: form is not invariant:\n" + inv.to_string());
  StructureConstants out(n + 1, m + 2);
  // slot-2 element first, then original indices shifted by 2
  for (const auto& [t, vec] : mu.entries()) {
    IndexTuple key{2};
    for (int i : t) key.push_back(i + 2);
    for (int k = 1; k <= m; ++k)
      if (vec[static_cast<std::size_t>(k - 1)] != 0)
        out.add(key, k + 2, vec[static_cast<std::size_t>(k - 1)]);
  }
  // all-original brackets land on the slot-1 element weighted by B
  for_each_increasing(m, n + 1, [&](const IndexTuple& t) {
    IndexTuple head(t.begin(), t.end() - 1);
    VectorElement v = mu.row(head);
    Rational c = 0;
    for (int l = 1; l <= m; ++l)
      c += v[static_cast<std::size_t>(l - 1)] * B.at(l, t.back());
    if (c == 0) return;
    IndexTuple key;
    for (int i : t) key.push_back(i + 2);
    out.add(key, 1, c);
  });
  return out;
}

StructureConstants extend_algebra_trivial(const StructureConstants& mu) {
  return extend_algebra_metric(mu, BilinearForm::zero(mu.dim()));
}

BilinearForm extend_form(const BilinearForm& B, int arity_n) {
  const int m = B.dim();
  RatMatrix ext(m + 2, m + 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ext.at(i + 2, j + 2) = B.at(i + 1, j + 1);
  ext.at(1, 1) = 1;
  Rational zh = ((arity_n - 1) % 2 == 0) ? 1 : -1;
  ext.at(0, 1) = zh;
  ext.at(1, 0) = zh;
  return BilinearForm(ext);
}

namespace {

Comultiplication extend_delta(const Comultiplication& d) {
  const int n = d.arity();
  const int m = d.dim();
  Comultiplication out(n + 1, m + 2);
  for (const auto& [t, vec] : d.constants.entries()) {
    IndexTuple key{1};
    for (int i : t) key.push_back(i + 2);
    for (int k = 1; k <= m; ++k)
      if (vec[static_cast<std::size_t>(k - 1)] != 0)
        out.constants.add(key, k + 2, vec[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

void require_valid(const Bialgebra& b, const char* who) {
  ValidationReport r = validate(b);
  if (!r.ok())
    throw std::invalid_argument(std::string(who) +
                                ": input bialgebra is invalid:\n" +
                                r.to_string());
}

}  // namespace

Bialgebra extend_bialgebra(const Bialgebra& b, const BilinearForm& B) {
  require_valid(b, "extend_bialgebra");
  return Bialgebra(extend_algebra_metric(b.mu, B), extend_delta(b.delta));
}

Bialgebra extend_bialgebra_dual(const Bialgebra& b,
                                const BilinearForm& Bdual) {
  require_valid(b, "extend_bialgebra_dual");
  StructureConstants dual_mu = dual_algebra(b.delta);
  StructureConstants ext_dual = extend_algebra_metric(dual_mu, Bdual);
  return Bialgebra(extend_algebra_trivial(b.mu), Comultiplication(ext_dual));
}

RatMatrix invariant_form_space(const StructureConstants& mu) {
  const int n = mu.arity();
  const int m = mu.dim();
  const int nv = m * (m + 1) / 2;
  auto var = [m](int i, int j) {  // 1-based, i <= j
    if (i > j) std::swap(i, j);
    return (i - 1) * m - (i - 1) * (i - 2) / 2 + (j - i);
  };
  RatMatrix rows(0, nv);
  for_each_increasing(m, n - 1, [&](const IndexTuple& y) {
    IndexTuple full = y;
    full.push_back(0);
    for (int x = 1; x <= m; ++x) {
      full.back() = x;
      VectorElement vx = mu.row(full);
      for (int z = 1; z <= m; ++z) {
        full.back() = z;
        VectorElement vz = mu.row(full);
        std::vector<Rational> row(static_cast<std::size_t>(nv), Rational(0));
        bool any = false;
        for (int l = 1; l <= m; ++l) {
          const Rational& a = vx[static_cast<std::size_t>(l - 1)];
          const Rational& c = vz[static_cast<std::size_t>(l - 1)];
          if (a != 0) {
            row[static_cast<std::size_t>(var(l, z))] += a;
            any = true;
          }
          if (c != 0) {
            row[static_cast<std::size_t>(var(x, l))] += c;
            any = true;
          }
        }
        if (any) rows.append_row(row);
      }
    }
  });
  auto null_cols = rows.nullspace();
  RatMatrix out(0, nv);
  for (const auto& v : null_cols) out.append_row(v);
  return out;
}

BilinearForm form_from_upper_triangle(int dim,
                                      const std::vector<Rational>& upper) {
  if (static_cast<int>(upper.size()) != dim * (dim + 1) / 2)
    throw std::invalid_argument("form_from_upper_triangle: size mismatch");
  RatMatrix M(dim, dim);
  std::size_t p = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j, ++p) {
      M.at(i, j) = upper[p];
      M.at(j, i) = upper[p];
    }
  return BilinearForm(M);
}

}  // namespace nlie
