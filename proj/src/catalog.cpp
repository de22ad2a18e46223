#include "nlie/catalog.hpp"

#include <stdexcept>

namespace nlie {

std::string CanonicalLabel::to_string() const {
  switch (kind) {
    case Kind::Abelian: return "abelian";
    case Kind::B1: return "b1";
    case Kind::B2: return "b2";
    case Kind::C1: return "c1";
    case Kind::C2: return "c2(alpha=" + rat_str(alpha) + ")";
    case Kind::C3: return "c3";
    case Kind::D: return "d(" + std::to_string(r) + ")";
    case Kind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace {

IndexTuple range_tuple(int lo, int hi) {  // lo..hi inclusive
  IndexTuple t;
  for (int i = lo; i <= hi; ++i) t.push_back(i);
  return t;
}

IndexTuple omit(int lo, int hi, int skip) {
  IndexTuple t;
  for (int i = lo; i <= hi; ++i)
    if (i != skip) t.push_back(i);
  return t;
}

}  // namespace

StructureConstants canonical_algebra(int n, const CanonicalLabel& label) {
  if (n < 3) throw std::invalid_argument("canonical_algebra: n must be >= 3");
  const int m = n + 1;
  StructureConstants mu(n, m);
  using K = CanonicalLabel::Kind;
  switch (label.kind) {
    case K::Abelian:
      break;
    case K::B1:
      mu.add(range_tuple(2, m), 1, 1);
      break;
    case K::B2:
      mu.add(range_tuple(1, n), 1, 1);
      break;
    case K::C1:
      mu.add(range_tuple(2, m), 1, 1);
      mu.add(omit(1, m, 2), 2, 1);
      break;
    case K::C2:
      if (label.alpha == 0)
        throw std::invalid_argument("canonical_algebra: c2 needs alpha != 0");
      mu.add(range_tuple(2, m), 1, label.alpha);
      mu.add(range_tuple(2, m), 2, 1);
      mu.add(omit(1, m, 2), 2, 1);
      break;
    case K::C3:
      mu.add(omit(1, m, 2), 1, 1);
      mu.add(range_tuple(2, m), 2, 1);
      break;
    case K::D:
      if (label.r < 3 || label.r > m)
        throw std::invalid_argument("canonical_algebra: d needs 3 <= r <= n+1");
      for (int i = 1; i <= label.r; ++i) mu.add(omit(1, m, i), i, 1);
      break;
    case K::Unclassified:
      throw std::invalid_argument("canonical_algebra: malformed label");
  }
  return mu;
}

StructureConstants simple_an(int n, bool allow_n2) {
  if (n < 3 && !(n == 2 && allow_n2))
    throw std::invalid_argument("simple_an: n must be >= 3");
  const int m = n + 1;
  StructureConstants mu(n, m);
  for (int i = 1; i <= m; ++i) mu.add(omit(1, m, i), i, 1);
  return mu;
}

CanonicalLabel classify(const StructureConstants& mu) {
  const int n = mu.arity();
  const int m = mu.dim();
  if (m != n + 1)
    throw std::invalid_argument("classify: dim must equal arity + 1");
  if (!check_fundamental_identity(mu).ok())
    throw std::invalid_argument("classify: bracket fails the basic identity");
  RatMatrix stacked(0, m);
  for (const auto& [t, vec] : mu.entries()) stacked.append_row(vec);
  std::vector<int> piv;
  RatMatrix R = stacked.rref(&piv);
  const int d1 = static_cast<int>(piv.size());
  if (d1 == 0) return CanonicalLabel::abelian();
  if (n == 2) return CanonicalLabel::unclassified();
  if (d1 >= 3) return CanonicalLabel::d(d1);
  auto rref_row = [&](int r) {
    VectorElement v(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) v[static_cast<std::size_t>(c)] = R.at(r, c);
    return v;
  };
  if (d1 == 1) {
    // derived line inside the center <=> the B1 form
    VectorElement f1 = rref_row(0);
    bool central = true;
    for_each_increasing(m, n - 1, [&](const IndexTuple& t) {
      if (!central) return;
      std::vector<VectorElement> args{f1};
      for (int i : t) args.push_back(basis_vector(m, i));
      for (const Rational& x : bracket_eval(mu, args))
        if (x != 0) { central = false; return; }
    });
    return central ? CanonicalLabel::b1() : CanonicalLabel::b2();
  }
  // d1 == 2: the bracket restricted to (derived basis, complement wedge)
  // factors through a 2x2 matrix; classify by its conjugation invariants.
  VectorElement f1 = rref_row(0), f2 = rref_row(1);
  std::vector<VectorElement> complement;
  for (int c = 0; c < m && static_cast<int>(complement.size()) < n - 1; ++c) {
    bool is_piv = false;
    for (int p : piv)
      if (p == c) is_piv = true;
    if (!is_piv) complement.push_back(basis_vector(m, c + 1));
  }
  RatMatrix M(2, 2);
  const VectorElement* fs[2] = {&f1, &f2};
  for (int col = 0; col < 2; ++col) {
    std::vector<VectorElement> args{*fs[col]};
    args.insert(args.end(), complement.begin(), complement.end());
    VectorElement out = bracket_eval(mu, args);
    // R is in RREF, so coordinates along (f1, f2) sit at the pivot columns
    M.at(0, col) = out[static_cast<std::size_t>(piv[0])];
    M.at(1, col) = out[static_cast<std::size_t>(piv[1])];
  }
  Rational tr = M.at(0, 0) + M.at(1, 1);
  Rational det = M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0);
  bool scalar = M.at(0, 1) == 0 && M.at(1, 0) == 0 && M.at(0, 0) == M.at(1, 1);
  if (scalar && M.at(0, 0) != 0) return CanonicalLabel::c3();
  if (tr == 0)
    return det != 0 ? CanonicalLabel::c1() : CanonicalLabel::unclassified();
  Rational alpha = -det / (tr * tr);
  return alpha != 0 ? CanonicalLabel::c2(alpha)
                    : CanonicalLabel::unclassified();
}

namespace {

/// Antisymmetrized tensor product of general vectors (no 1/p! factor).
TensorElement general_wedge(const std::vector<VectorElement>& vs, int dim) {
  const int p = static_cast<int>(vs.size());
  TensorElement out(p, dim);
  std::vector<int> perm(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) perm[static_cast<std::size_t>(i)] = i;
  // iterate permutations with running sign (Heap's algorithm)
  std::vector<int> counters(static_cast<std::size_t>(p), 0);
  int sign = 1;
  auto emit = [&]() {
    // expand the tensor product of the permuted vectors
    std::vector<std::pair<IndexTuple, Rational>> terms{{{}, Rational(sign)}};
    for (int slot = 0; slot < p; ++slot) {
      const VectorElement& v = vs[static_cast<std::size_t>(perm[static_cast<std::size_t>(slot)])];
      std::vector<std::pair<IndexTuple, Rational>> next;
      for (const auto& [tup, c] : terms)
        for (int r = 1; r <= dim; ++r) {
          const Rational& x = v[static_cast<std::size_t>(r - 1)];
          if (x == 0) continue;
          IndexTuple nt = tup;
          nt.push_back(r);
          next.emplace_back(std::move(nt), c * x);
        }
      terms = std::move(next);
    }
    for (const auto& [tup, c] : terms) out.add_term(tup, c);
  };
  emit();
  int i = 0;
  while (i < p) {
    if (counters[static_cast<std::size_t>(i)] < i) {
      if (i % 2 == 0)
        std::swap(perm[0], perm[static_cast<std::size_t>(i)]);
      else
        std::swap(perm[static_cast<std::size_t>(counters[static_cast<std::size_t>(i)])],
                  perm[static_cast<std::size_t>(i)]);
      sign = -sign;
      emit();
      ++counters[static_cast<std::size_t>(i)];
      i = 0;
    } else {
      counters[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
  }
  return out;
}

}  // namespace

Comultiplication example_coalgebra_matrix(int m) {
  if (m < 2)
    throw std::invalid_argument("example_coalgebra_matrix: m must be >= 2");
  const int N = m * m;
  // basis index of each element; matrix-unit coordinates of each element
  // unit_index: matrix unit E_pq -> 0-based coordinate slot
  auto unit_index = [m](int p, int q) { return (p - 1) * m + (q - 1); };
  std::vector<VectorElement> basis_in_units;
  std::vector<std::pair<int, int>> offdiag_order;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      VectorElement v(static_cast<std::size_t>(N), Rational(0));
      v[static_cast<std::size_t>(unit_index(i, j))] = 1;
      basis_in_units.push_back(v);
      offdiag_order.emplace_back(i, j);
    }
  for (int j = 1; j <= m - 1; ++j) {
    VectorElement v(static_cast<std::size_t>(N), Rational(0));
    v[static_cast<std::size_t>(unit_index(j, j))] = 1;
    v[static_cast<std::size_t>(unit_index(j + 1, j + 1))] = -1;
    basis_in_units.push_back(v);
  }
  {
    VectorElement v(static_cast<std::size_t>(N), Rational(0));
    for (int i = 1; i <= m; ++i)
      v[static_cast<std::size_t>(unit_index(i, i))] = 1;
    basis_in_units.push_back(v);
  }
  // change of coordinates: columns are the basis elements
  RatMatrix T(N, N);
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < N; ++r)
      T.at(r, c) = basis_in_units[static_cast<std::size_t>(c)]
                                 [static_cast<std::size_t>(r)];
  RatMatrix Tinv = T.inverse();
  auto unit_coords = [&](int p, int q) {
    VectorElement e(static_cast<std::size_t>(N), Rational(0));
    e[static_cast<std::size_t>(unit_index(p, q))] = 1;
    return Tinv.apply(e);
  };
  Comultiplication out(3, N);
  auto add_tensor = [&](int l, const TensorElement& t) {
    for (const auto& [tup, c] : t.terms()) {
      auto canon = canonicalize(tup);
      if (canon && canon->sorted == tup)  // alternating: increasing reps only
        out.constants.add(tup, l, c);
    }
  };
  // off-diagonal basis elements: Delta(E_ij) = sum_k E_kk ^ E_ik ^ E_kj
  int l = 1;
  for (const auto& [i, j] : offdiag_order) {
    TensorElement t(3, N);
    for (int k = 1; k <= m; ++k)
      t += general_wedge({unit_coords(k, k), unit_coords(i, k),
                          unit_coords(k, j)}, N);
    add_tensor(l, t);
    ++l;
  }
  // diagonal differences: Delta(D_i) = sum_k E_kk ^ E_{i,i+1} ^ E_{i+1,i}
  for (int i = 1; i <= m - 1; ++i) {
    TensorElement t(3, N);
    for (int k = 1; k <= m; ++k)
      t += general_wedge({unit_coords(k, k), unit_coords(i, i + 1),
                          unit_coords(i + 1, i)}, N);
    add_tensor(l, t);
    ++l;
  }
  // identity element: Delta(E) = 0
  return out;
}

Comultiplication example_coalgebra_top(int n) {
  if (n < 2)
    throw std::invalid_argument("example_coalgebra_top: n must be >= 2");
  const int m = n + 1;
  Comultiplication d(n, m);
  for (int i = 1; i <= m; ++i) d.constants.add(omit(1, m, i), i, 1);
  return d;
}

Bialgebra example_bialgebra(int n) {
  if (n < 3) throw std::invalid_argument("example_bialgebra: n must be >= 3");
  const int m = n + 1;
  StructureConstants mu(n, m);
  mu.add(omit(1, m, 2), 1, 1);
  mu.add(range_tuple(2, m), 2, 1);
  Comultiplication d(n, m);
  // Delta(x_1) = x_3 ^ x_2 ^ x_4 ^ ... ^ x_{n+1}
  {
    IndexTuple t{3, 2};
    for (int i = 4; i <= m; ++i) t.push_back(i);
    d.constants.add(t, 1, 1);
  }
  // Delta(x_3) = x_1 ^ x_2 ^ x_4 ^ ... ^ x_{n+1}
  d.constants.add(omit(1, m, 3), 3, 1);
  return Bialgebra(std::move(mu), std::move(d));
}

namespace {

RatMatrix perm_matrix(int m, const std::vector<std::pair<int, int>>& moves) {
  RatMatrix M(m, m);
  std::vector<int> dest(static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= m; ++i) dest[static_cast<std::size_t>(i)] = i;
  for (const auto& [from, to] : moves) dest[static_cast<std::size_t>(from)] = to;
  for (int i = 1; i <= m; ++i)
    M.at(dest[static_cast<std::size_t>(i)] - 1, i - 1) = 1;
  return M;
}

}  // namespace

ThreeDeltas example_three_deltas(int n) {
  if (n < 3)
    throw std::invalid_argument("example_three_deltas: n must be >= 3");
  const int m = n + 1;
  StructureConstants mu(n, m);
  mu.add(range_tuple(2, m), 1, 1);
  mu.add(omit(1, m, 2), 2, 1);
  Comultiplication d1(n, m), d2(n, m), d3(n, m);
  auto set_pair = [&](Comultiplication& d, int l, int a, int b) {
    IndexTuple t{a, b};
    for (int i = 4; i <= m; ++i) t.push_back(i);
    d.constants.add(t, l, 1);
  };
  set_pair(d1, 1, 1, 3);
  set_pair(d1, 2, 2, 3);
  set_pair(d2, 1, 1, 2);
  set_pair(d2, 3, 3, 2);
  set_pair(d3, 2, 2, 1);
  set_pair(d3, 3, 3, 1);
  ThreeDeltas out{std::move(mu), std::move(d1), std::move(d2), std::move(d3),
                  perm_matrix(m, {{2, 3}, {3, 2}}),
                  perm_matrix(m, {{1, 2}, {2, 3}, {3, 1}}),
                  perm_matrix(m, {{1, 2}, {2, 1}}),
                  perm_matrix(m, {{1, 2}, {2, 1}})};
  return out;
}

}  // namespace nlie
