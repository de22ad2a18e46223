#include "nlie/structure.hpp"

#include <stdexcept>

namespace nlie {

VectorElement basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw std::out_of_range("basis_vector: index");
  VectorElement v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

VectorElement zero_vector(int dim) {
  return VectorElement(static_cast<std::size_t>(dim), Rational(0));
}

StructureConstants::StructureConstants(int arity, int dim)
    : arity_(arity), dim_(dim) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  if (dim < 1) throw std::invalid_argument("dim must be positive");
}

void StructureConstants::add(const IndexTuple& t, int k, const Rational& v) {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple length != arity");
  for (int i : t)
    if (i < 1 || i > dim_) throw std::out_of_range("tuple index out of range");
  if (k < 1 || k > dim_) throw std::out_of_range("target index out of range");
  auto c = canonicalize(t);
  if (!c) throw std::invalid_argument("repeated index in tuple");
  if (v == 0) return;
  auto it = entries_.find(c->sorted);
  if (it == entries_.end())
    it = entries_.emplace(c->sorted, zero_vector(dim_)).first;
  it->second[static_cast<std::size_t>(k - 1)] += c->sign * v;
  for (const Rational& x : it->second)
    if (x != 0) return;
  entries_.erase(it);
}

VectorElement StructureConstants::row(const IndexTuple& t) const {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple length != arity");
  for (int i : t)
    if (i < 1 || i > dim_) throw std::out_of_range("tuple index out of range");
  auto c = canonicalize(t);
  if (!c) return zero_vector(dim_);
  auto it = entries_.find(c->sorted);
  if (it == entries_.end()) return zero_vector(dim_);
  VectorElement out = it->second;
  if (c->sign < 0)
    for (Rational& x : out) x = -x;
  return out;
}

Rational StructureConstants::coeff(const IndexTuple& t, int k) const {
  if (k < 1 || k > dim_) throw std::out_of_range("target index out of range");
  return row(t)[static_cast<std::size_t>(k - 1)];
}

bool StructureConstants::operator==(const StructureConstants& other) const {
  return arity_ == other.arity_ && dim_ == other.dim_ &&
         entries_ == other.entries_;
}

VectorElement bracket_basis(const StructureConstants& mu,
                            const IndexTuple& t) {
  return mu.row(t);
}

VectorElement bracket_eval(const StructureConstants& mu,
                           const std::vector<VectorElement>& args) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("bracket_eval: argument count != arity");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != m)
      throw std::invalid_argument("bracket_eval: dim mismatch");
  VectorElement out = zero_vector(m);
  // expand multilinearly over the stored increasing tuples: the coefficient
  // of tuple t in the product is det of the args restricted to t's rows
  for (const auto& [t, vec] : mu.entries()) {
    // alternating sum over assignments of args to t's slots = determinant
    RatMatrix minor(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        minor.at(r, c) =
            args[static_cast<std::size_t>(c)]
                [static_cast<std::size_t>(t[static_cast<std::size_t>(r)] - 1)];
    // determinant by elimination (exact)
    Rational det = 1;
    {
      RatMatrix w = minor;
      for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
          if (w.at(r, c) != 0) { p = r; break; }
        if (p < 0) { det = 0; break; }
        if (p != c) {
          for (int cc = 0; cc < n; ++cc) std::swap(w.at(p, cc), w.at(c, cc));
          det = -det;
        }
        det *= w.at(c, c);
        for (int r = c + 1; r < n; ++r) {
          if (w.at(r, c) == 0) continue;
          Rational f = w.at(r, c) / w.at(c, c);
          for (int cc = c; cc < n; ++cc) w.at(r, cc) -= f * w.at(c, cc);
        }
      }
    }
    if (det == 0) continue;
    for (int k = 0; k < m; ++k)
      out[static_cast<std::size_t>(k)] +=
          det * vec[static_cast<std::size_t>(k)];
  }
  return out;
}

ValidationReport check_fundamental_identity(const StructureConstants& mu) {
  const int n = mu.arity();
  const int m = mu.dim();
  ValidationReport report;
  for_each_increasing(m, n - 1, [&](const IndexTuple& i) {
    for_each_increasing(m, n, [&](const IndexTuple& j) {
      VectorElement cj = mu.row(j);
      std::vector<VectorElement> rows;
      rows.reserve(static_cast<std::size_t>(m));
      IndexTuple it = i;
      it.push_back(0);
      // residual vector over all targets k at once
      VectorElement res = zero_vector(m);
      for (int t = 1; t <= m; ++t) {
        if (cj[static_cast<std::size_t>(t - 1)] == 0) continue;
        it.back() = t;
        VectorElement v = mu.row(it);
        for (int k = 0; k < m; ++k)
          res[static_cast<std::size_t>(k)] +=
              cj[static_cast<std::size_t>(t - 1)] *
              v[static_cast<std::size_t>(k)];
      }
      for (int s = 1; s <= n; ++s) {
        it.back() = j[static_cast<std::size_t>(s - 1)];
        VectorElement ci = mu.row(it);
        IndexTuple jrest;
        for (int q = 1; q <= n; ++q)
          if (q != s) jrest.push_back(j[static_cast<std::size_t>(q - 1)]);
        jrest.push_back(0);
        int sign = ((n - s) % 2 == 0) ? 1 : -1;
        for (int t = 1; t <= m; ++t) {
          if (ci[static_cast<std::size_t>(t - 1)] == 0) continue;
          jrest.back() = t;
          VectorElement v = mu.row(jrest);
          for (int k = 0; k < m; ++k)
            res[static_cast<std::size_t>(k)] -=
                sign * ci[static_cast<std::size_t>(t - 1)] *
                v[static_cast<std::size_t>(k)];
        }
      }
      for (int k = 1; k <= m; ++k) {
        const Rational& r = res[static_cast<std::size_t>(k - 1)];
        if (r == 0) continue;
        std::vector<int> where(i);
        where.insert(where.end(), j.begin(), j.end());
        where.push_back(k);
        report.add("fundamental-identity", where, rat_str(r));
      }
    });
  });
  report.sort();
  return report;
}

RatMatrix derived_algebra(const StructureConstants& mu) {
  RatMatrix rows(0, mu.dim());
  for (const auto& [t, vec] : mu.entries()) rows.append_row(vec);
  std::vector<int> piv;
  RatMatrix r = rows.rref(&piv);
  RatMatrix out(0, mu.dim());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    VectorElement row(static_cast<std::size_t>(mu.dim()));
    for (int c = 0; c < mu.dim(); ++c)
      row[static_cast<std::size_t>(c)] = r.at(static_cast<int>(i), c);
    out.append_row(row);
  }
  return out;
}

RatMatrix center(const StructureConstants& mu) {
  const int n = mu.arity();
  const int m = mu.dim();
  RatMatrix stacked(0, m);
  for_each_increasing(m, n - 1, [&](const IndexTuple& t) {
    IndexTuple full = t;
    full.push_back(0);
    // rows of the map x -> bracket(x, e_t): column j is bracket(e_j, e_t)
    RatMatrix M(m, m);
    for (int j = 1; j <= m; ++j) {
      full.back() = j;
      VectorElement v = mu.row(full);
      // bracket(e_j, e_t...) = (-1)^{n-1} bracket(e_t..., e_j)
      int sign = ((n - 1) % 2 == 0) ? 1 : -1;
      for (int k = 0; k < m; ++k)
        M.at(k, j - 1) = sign * v[static_cast<std::size_t>(k)];
    }
    for (int r = 0; r < m; ++r) {
      VectorElement row(static_cast<std::size_t>(m));
      for (int c = 0; c < m; ++c)
        row[static_cast<std::size_t>(c)] = M.at(r, c);
      stacked.append_row(row);
    }
  });
  auto null_cols = stacked.nullspace();
  RatMatrix out(0, m);
  for (const auto& v : null_cols) out.append_row(v);
  return out;
}

RatMatrix ad_operator(const StructureConstants& mu, const IndexTuple& t) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (static_cast<int>(t.size()) != n - 1)
    throw std::invalid_argument("ad_operator: tuple length != arity-1");
  RatMatrix M(m, m);
  IndexTuple full = t;
  full.push_back(0);
  for (int j = 1; j <= m; ++j) {
    full.back() = j;
    VectorElement v = mu.row(full);
    for (int k = 0; k < m; ++k)
      M.at(k, j - 1) = v[static_cast<std::size_t>(k)];
  }
  return M;
}

RatMatrix ad_operator_general(const StructureConstants& mu,
                              const std::vector<VectorElement>& xs) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (static_cast<int>(xs.size()) != n - 1)
    throw std::invalid_argument("ad_operator_general: need arity-1 vectors");
  RatMatrix M(m, m);
  std::vector<VectorElement> args = xs;
  args.push_back(zero_vector(m));
  for (int j = 1; j <= m; ++j) {
    args.back() = basis_vector(m, j);
    VectorElement v = bracket_eval(mu, args);
    for (int k = 0; k < m; ++k)
      M.at(k, j - 1) = v[static_cast<std::size_t>(k)];
  }
  return M;
}

TensorElement apply_to_factor(const RatMatrix& M, int s,
                              const TensorElement& T) {
  if (s < 1 || s > T.order())
    throw std::invalid_argument("apply_to_factor: factor out of range");
  if (M.rows() != T.dim() || M.cols() != T.dim())
    throw std::invalid_argument("apply_to_factor: matrix dim mismatch");
  TensorElement out(T.order(), T.dim());
  for (const auto& [tuple, coeff] : T.terms()) {
    int j = tuple[static_cast<std::size_t>(s - 1)];
    for (int r = 1; r <= T.dim(); ++r) {
      const Rational& c = M.at(r - 1, j - 1);
      if (c == 0) continue;
      IndexTuple nt = tuple;
      nt[static_cast<std::size_t>(s - 1)] = r;
      out.add_term(nt, coeff * c);
    }
  }
  return out;
}

TensorElement rho_s_apply(const StructureConstants& mu, int s,
                          const IndexTuple& t, const TensorElement& T) {
  if (T.order() != mu.arity() || T.dim() != mu.dim())
    throw std::invalid_argument("rho_s_apply: tensor shape mismatch");
  return apply_to_factor(ad_operator(mu, t), s, T);
}

namespace {

void report_matrix_diff(ValidationReport& report, const char* check,
                        std::vector<int> where, const RatMatrix& lhs,
                        const RatMatrix& rhs) {
  for (int r = 0; r < lhs.rows(); ++r)
    for (int c = 0; c < lhs.cols(); ++c) {
      Rational d = lhs.at(r, c) - rhs.at(r, c);
      if (d == 0) continue;
      std::vector<int> w = where;
      w.push_back(r + 1);
      w.push_back(c + 1);
      report.add(check, w, rat_str(d));
    }
}

}  // namespace

ValidationReport check_rho_module(const StructureConstants& mu, int s) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (s < 1 || s > n) throw std::out_of_range("check_rho_module: s");
  ValidationReport report;
  // Both relations touch only tensor factor s, so they reduce to exact
  // identities between the m x m matrices acting there.
  // 1) [ad(x), ad(z)] = sum_t ad(z_1,...,bracket(x, z_t),...,z_{n-1})
  for_each_increasing(m, n - 1, [&](const IndexTuple& x) {
    RatMatrix Mx = ad_operator(mu, x);
    for_each_increasing(m, n - 1, [&](const IndexTuple& z) {
      RatMatrix Mz = ad_operator(mu, z);
      RatMatrix lhs = Mx * Mz;
      {
        RatMatrix zy = Mz * Mx;
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) lhs.at(r, c) -= zy.at(r, c);
      }
      RatMatrix rhs(m, m);
      for (int t = 1; t <= n - 1; ++t) {
        IndexTuple xz = x;
        xz.push_back(z[static_cast<std::size_t>(t - 1)]);
        VectorElement inner = mu.row(xz);
        std::vector<VectorElement> args;
        for (int q = 1; q <= n - 1; ++q)
          args.push_back(q == t
                             ? inner
                             : basis_vector(m, z[static_cast<std::size_t>(q - 1)]));
        RatMatrix term = ad_operator_general(mu, args);
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) rhs.at(r, c) += term.at(r, c);
      }
      std::vector<int> where{s};
      where.insert(where.end(), x.begin(), x.end());
      where.insert(where.end(), z.begin(), z.end());
      report_matrix_diff(report, "rho-module-bracket", where, lhs, rhs);
    });
  });
  // 2) ad(x_1..x_{n-2}, bracket(y))
  //      = sum_t (-1)^{n-t} ad(y minus y_t) ad(x_1..x_{n-2}, y_t)
  for_each_increasing(m, n, [&](const IndexTuple& y) {
    VectorElement by = mu.row(y);
    for_each_increasing(m, n - 2, [&](const IndexTuple& x) {
      std::vector<VectorElement> args;
      for (int q : x) args.push_back(basis_vector(m, q));
      args.push_back(by);
      RatMatrix lhs = ad_operator_general(mu, args);
      RatMatrix rhs(m, m);
      for (int t = 1; t <= n; ++t) {
        IndexTuple yrest;
        for (int q = 1; q <= n; ++q)
          if (q != t) yrest.push_back(y[static_cast<std::size_t>(q - 1)]);
        IndexTuple xy = x;
        xy.push_back(y[static_cast<std::size_t>(t - 1)]);
        RatMatrix prod = ad_operator(mu, yrest) * ad_operator(mu, xy);
        int sign = ((n - t) % 2 == 0) ? 1 : -1;
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) rhs.at(r, c) += sign * prod.at(r, c);
      }
      std::vector<int> where{s};
      where.insert(where.end(), y.begin(), y.end());
      where.insert(where.end(), x.begin(), x.end());
      report_matrix_diff(report, "rho-module-cocycle", where, lhs, rhs);
    });
  });
  report.sort();
  return report;
}

StructureConstants change_basis(const StructureConstants& mu,
                                const RatMatrix& P) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (P.rows() != m || P.cols() != m)
    throw std::invalid_argument("change_basis: matrix dim mismatch");
  RatMatrix Pinv = P.inverse();
  StructureConstants out(n, m);
  for_each_increasing(m, n, [&](const IndexTuple& t) {
    std::vector<VectorElement> args;
    for (int i : t) {
      VectorElement col(static_cast<std::size_t>(m));
      for (int r = 0; r < m; ++r) col[static_cast<std::size_t>(r)] = P.at(r, i - 1);
      args.push_back(col);
    }
    VectorElement v = Pinv.apply(bracket_eval(mu, args));
    for (int k = 1; k <= m; ++k)
      if (v[static_cast<std::size_t>(k - 1)] != 0)
        out.add(t, k, v[static_cast<std::size_t>(k - 1)]);
  });
  return out;
}

}  // namespace nlie
