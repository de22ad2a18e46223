#include "nlie/ansolver.hpp"

#include <sstream>
#include <stdexcept>

#include "nlie/rng.hpp"

namespace nlie {

AnDeltaMatrix::AnDeltaMatrix(int n_, RatMatrix a_) : n(n_), a(std::move(a_)) {
  if (n < 2) throw std::invalid_argument("AnDeltaMatrix: n must be >= 2");
  if (a.rows() != n + 1 || a.cols() != n + 1)
    throw std::invalid_argument("AnDeltaMatrix: matrix must be (n+1)x(n+1)");
}

Comultiplication an_delta_from_matrix(const AnDeltaMatrix& d) {
  const int m = d.n + 1;
  Comultiplication out(d.n, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const Rational& c = d.a.at(i - 1, j - 1);
      if (c == 0) continue;
      IndexTuple t;
      for (int q = 1; q <= m; ++q)
        if (q != j) t.push_back(q);
      out.constants.add(t, i, c);
    }
  return out;
}

RatMatrix b_matrix(const AnDeltaMatrix& d) {
  const int m = d.n + 1;
  RatMatrix b(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int sign = ((d.n + j + 2) % 2 == 0) ? 1 : -1;  // (-1)^{n+j+1}, j 1-based
      b.at(i, j) = sign * d.a.at(i, j);
    }
  return b;
}

AnDeltaMatrix an_matrix_from_b(int n, const RatMatrix& b) {
  const int m = n + 1;
  if (b.rows() != m || b.cols() != m)
    throw std::invalid_argument("an_matrix_from_b: bad shape");
  RatMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int sign = ((n + j + 2) % 2 == 0) ? 1 : -1;
      a.at(i, j) = sign * b.at(i, j);  // the sign rule is involutive
    }
  return AnDeltaMatrix(n, a);
}

bool check_an_constraints(const AnDeltaMatrix& d) {
  const int m = d.n + 1;
  for (int k = 0; k < m; ++k)
    if (d.a.at(k, k) != 0) return false;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
      if (d.a.at(i - 1, j - 1) != sign * d.a.at(j - 1, i - 1)) return false;
    }
  return true;
}

BCriterionReport coalgebra_B_criterion(const AnDeltaMatrix& d) {
  BCriterionReport r;
  RatMatrix b = b_matrix(d);
  r.b_symmetric = b.is_symmetric();
  r.b_rank = b.rank();
  Comultiplication delta = an_delta_from_matrix(d);
  r.coalgebra_ok =
      check_coalgebra_dual(delta).ok() && check_coalgebra_tensor(delta).ok();
  r.delta_rank = rank(delta);
  bool lhs = r.coalgebra_ok && r.delta_rank >= 3;
  bool rhs = r.b_symmetric && r.b_rank >= 3;
  r.consistent = (lhs == rhs);
  return r;
}

namespace {

RatMatrix random_matrix(SplitMix64& rng, int m, long num_max) {
  RatMatrix M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M.at(i, j) = rng.rational(num_max, 3);
  return M;
}

std::vector<Rational> random_vector(SplitMix64& rng, int m, long num_max) {
  std::vector<Rational> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    v[static_cast<std::size_t>(i)] = rng.rational(num_max, 2);
  return v;
}

/// u v^T - v u^T: skew of rank exactly 2 when u, v are independent.
RatMatrix skew_pair(const std::vector<Rational>& u,
                    const std::vector<Rational>& v) {
  const int m = static_cast<int>(u.size());
  RatMatrix M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      M.at(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
                   v[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)];
  return M;
}

}  // namespace

std::string SimpleBracketReport::summary() const {
  std::ostringstream os;
  os << "trials " << trials << '\n'
     << "zero-matrix valid: " << zero_ok << '/' << 1 << '\n'
     << "skew rank-2 valid with rank 2 and dual type c3: " << rank2_ok << '/'
     << trials << '\n'
     << "skew rank-4 rejected by coalgebra checks: " << rank4_rejected << '/'
     << trials << '\n'
     << "constraint-violating rejected by compatibility: "
     << violating_rejected << '/' << trials << '\n'
     << "result: " << (all_passed ? "all assertions hold" : "FAILED") << '\n';
  return os.str();
}

SimpleBracketReport verify_simple_bracket_classification(int n, int trials, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("verify_simple_bracket_classification: n must be >= 3");
  if (trials < 1)
    throw std::invalid_argument("verify_simple_bracket_classification: trials must be >= 1");
  const int m = n + 1;
  StructureConstants mu = simple_an(n);
  SimpleBracketReport report;
  report.trials = trials;
  // (i) zero coefficients: valid bialgebra with rank 0
  {
    AnDeltaMatrix zero(n, RatMatrix(m, m));
    Comultiplication delta = an_delta_from_matrix(zero);
    Bialgebra b(mu, delta);
    if (validate(b).ok() && rank(delta) == 0) report.zero_ok = 1;
  }
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(seed + 0x517cc1b727220a95ULL * static_cast<std::uint64_t>(t + 1));
    // (ii) constraint-satisfying: skew B of rank exactly 2
    {
      RatMatrix B(m, m);
      do {
        B = skew_pair(random_vector(rng, m, 3), random_vector(rng, m, 3));
      } while (B.rank() != 2);
      AnDeltaMatrix d = an_matrix_from_b(n, B);
      Comultiplication delta = an_delta_from_matrix(d);
      Bialgebra b(mu, delta);
      if (check_an_constraints(d) && validate(b).ok() && rank(delta) == 2 &&
          classify(dual_algebra(delta)) == CanonicalLabel::c3())
        ++report.rank2_ok;
    }
    // (iii) skew B of rank 4: must fail the coalgebra checks
    {
      RatMatrix B(m, m);
      do {
        RatMatrix B1 = skew_pair(random_vector(rng, m, 3), random_vector(rng, m, 3));
        RatMatrix B2 = skew_pair(random_vector(rng, m, 3), random_vector(rng, m, 3));
        B = RatMatrix(m, m);
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) B.at(r, c) = B1.at(r, c) + B2.at(r, c);
      } while (B.rank() != 4);
      AnDeltaMatrix d = an_matrix_from_b(n, B);
      Comultiplication delta = an_delta_from_matrix(d);
      if (!check_coalgebra_dual(delta).ok() &&
          !check_coalgebra_tensor(delta).ok())
        ++report.rank4_rejected;
    }
    // (iv) constraint violations: compatibility must fail
    {
      RatMatrix a(m, m);
      AnDeltaMatrix d(n, a);
      do {
        d = AnDeltaMatrix(n, random_matrix(rng, m, 2));
      } while (check_an_constraints(d));
      Comultiplication delta = an_delta_from_matrix(d);
      Bialgebra b(mu, delta);
      if (!check_compatibility_tensor(b).ok()) ++report.violating_rejected;
    }
  }
  report.all_passed = report.zero_ok == 1 && report.rank2_ok == trials &&
                      report.rank4_rejected == trials &&
                      report.violating_rejected == trials;
  return report;
}

}  // namespace nlie
