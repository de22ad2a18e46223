#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/index.hpp"
#include "nlie/matrix.hpp"
#include "nlie/rational.hpp"
#include "nlie/rng.hpp"
#include "nlie/tensor.hpp"

using namespace nlie;

TEST_CASE("rational parsing and printing") {
  CHECK(*parse_rational("2/4") == rat(1, 2));
  CHECK(*parse_rational("-3") == rat(-3));
  CHECK(*parse_rational("+5/10") == rat(1, 2));
  CHECK(rat_str(rat(-6, 4)) == "-3/2");
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("1.5").has_value());
  CHECK(!parse_rational("a/b").has_value());
  CHECK(!parse_rational("1/-2").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("1/").has_value());
}

TEST_CASE("field axioms on randomized rationals") {
  SplitMix64 rng(42);
  for (int t = 0; t < 200; ++t) {
    Rational a = rng.rational(50, 20), b = rng.rational(50, 20),
             c = rng.rational(50, 20);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + 0 == a);
    CHECK(a * 1 == a);
    CHECK(a - a == 0);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("canonicalize sorts and signs") {
  auto c = canonicalize({3, 1, 2});
  REQUIRE(c.has_value());
  CHECK(c->sorted == IndexTuple{1, 2, 3});
  CHECK(c->sign == 1);  // cyclic, even
  c = canonicalize({2, 1, 3});
  CHECK(c->sign == -1);
  CHECK(!canonicalize({1, 1, 2}).has_value());
  c = canonicalize({4, 3, 2, 1});
  CHECK(c->sign == 1);  // two transpositions
}

TEST_CASE("kron_det is the pairing determinant") {
  CHECK(kron_det({1, 2, 3}, {1, 2, 3}) == 1);
  CHECK(kron_det({1, 2, 3}, {2, 1, 3}) == -1);
  CHECK(kron_det({1, 2, 3}, {1, 2, 4}) == 0);
  CHECK(kron_det({1, 1, 2}, {1, 2, 3}) == 0);
  CHECK_THROWS(kron_det({1, 2}, {1, 2, 3}));
}

TEST_CASE("wedge is alternating, unnormalized") {
  TensorElement w = wedge({1, 2}, 3);
  CHECK(w.coefficient({1, 2}) == 1);
  CHECK(w.coefficient({2, 1}) == -1);
  CHECK(w.term_count() == 2);
  CHECK(wedge({1, 1}, 3).is_zero());
  // pairing against dual tuples equals kron_det
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      CHECK(pair_coefficient({a, b}, w) == kron_det({a, b}, {1, 2}));
  // non-increasing input picks up the permutation sign
  TensorElement w2 = wedge({2, 1}, 3);
  CHECK(w2 == w.scaled(-1));
}

TEST_CASE("tensor arithmetic prunes zeros") {
  TensorElement t(2, 2);
  t.add_term({1, 2}, rat(1, 2));
  t.add_term({1, 2}, rat(-1, 2));
  CHECK(t.is_zero());
  t.add_term({2, 1}, 3);
  TensorElement u = t - t;
  CHECK(u.is_zero());
  CHECK((t + t) == t.scaled(2));
}

// Adjointness: the factor permutation must pair with dual tuples exactly as
// the rearranged dual tuple pairs with the original tensor.
static void check_omega_adjoint(int n, int m) {
  const int p = 2 * n - 1;
  for (int s = 1; s <= n; ++s) {
    for_each_tuple(m, p, [&](const IndexTuple& D) {
      IndexTuple rD;
      // (x_1..x_{n-1}, y_1..y_n) -> (y_1..skip y_s..y_n, x_1..x_{n-1}, y_s)
      for (int j = 0; j < n; ++j)
        if (j != s - 1) rD.push_back(D[static_cast<std::size_t>(n - 1 + j)]);
      for (int i = 0; i < n - 1; ++i) rD.push_back(D[static_cast<std::size_t>(i)]);
      rD.push_back(D[static_cast<std::size_t>(n - 1 + s - 1)]);
      for_each_tuple(m, p, [&](const IndexTuple& T) {
        TensorElement t(p, m);
        t.add_term(T, 1);
        Rational lhs = pair_coefficient(D, omega_apply(t, n, s));
        Rational rhs = (rD == T) ? 1 : 0;
        CHECK(lhs == rhs);
      });
    });
  }
}

TEST_CASE("omega adjointness, exhaustive at small size") {
  check_omega_adjoint(2, 2);
  check_omega_adjoint(3, 2);
}

TEST_CASE("omega source array at arity 3") {
  // n=3, s=1: output (y_2, y_3, x_1, x_2, y_1); positions of inputs copied
  auto A = omega_dual_positions(3, 1);
  CHECK(A == std::vector<int>{3, 4, 0, 1, 2});
  // omega is a linear bijection: applying with the inverse array restores
  TensorElement t(5, 2);
  t.add_term({1, 2, 2, 1, 2}, rat(5, 3));
  TensorElement moved = omega_apply(t, 3, 2);
  CHECK(moved.term_count() == 1);
  CHECK(!(moved == t));
}

TEST_CASE("map_factorwise is multiplicative over factors") {
  RatMatrix phi(2, 2);
  phi.at(0, 0) = 1;
  phi.at(0, 1) = 2;
  phi.at(1, 0) = 0;
  phi.at(1, 1) = 1;
  TensorElement t(2, 2);
  t.add_term({2, 2}, 1);
  TensorElement img = map_factorwise(phi, t);
  // phi(e_2) = 2 e_1 + e_2, so image = (2e1+e2) (x) (2e1+e2)
  CHECK(img.coefficient({1, 1}) == 4);
  CHECK(img.coefficient({1, 2}) == 2);
  CHECK(img.coefficient({2, 1}) == 2);
  CHECK(img.coefficient({2, 2}) == 1);
}

TEST_CASE("matrix rank, rref, nullspace, inverse") {
  RatMatrix M(3, 3);
  M.at(0, 0) = 1; M.at(0, 1) = 2; M.at(0, 2) = 3;
  M.at(1, 0) = 2; M.at(1, 1) = 4; M.at(1, 2) = 6;
  M.at(2, 0) = 1; M.at(2, 1) = 0; M.at(2, 2) = 1;
  CHECK(M.rank() == 2);
  auto ns = M.nullspace();
  REQUIRE(ns.size() == 1);
  // check M v = 0 exactly
  auto v = ns[0];
  for (int r = 0; r < 3; ++r) {
    Rational acc = 0;
    for (int c = 0; c < 3; ++c) acc += M.at(r, c) * v[static_cast<std::size_t>(c)];
    CHECK(acc == 0);
  }
  CHECK(!M.is_invertible());
  CHECK_THROWS(M.inverse());

  RatMatrix I = RatMatrix::identity(4);
  SplitMix64 rng(7);
  for (int t = 0; t < 10; ++t) {
    RatMatrix R(4, 4);
    do {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) R.at(r, c) = rng.rational(4, 2);
    } while (!R.is_invertible());
    CHECK(R * R.inverse() == I);
    CHECK(R.inverse() * R == I);
    CHECK(R.transpose().transpose() == R);
  }
}

TEST_CASE("deterministic rng is platform-stable") {
  SplitMix64 rng(1);
  CHECK(rng.next() == 0x910a2dec89025cc1ULL);
  CHECK(rng.next() == 0xbeeb8da1658eec67ULL);
}
