#include "nlie/tensor.hpp"

#include <stdexcept>

#include "nlie/matrix.hpp"

namespace nlie {

TensorElement::TensorElement(int order, int dim) : order_(order), dim_(dim) {
  if (order < 1 || dim < 1)
    throw std::invalid_argument("TensorElement: order and dim must be >= 1");
}

void TensorElement::add_term(const IndexTuple& tuple, const Rational& coeff) {
  if (static_cast<int>(tuple.size()) != order_)
    throw std::invalid_argument("TensorElement: tuple length != order");
  if (coeff == 0) return;
  auto it = terms_.find(tuple);
  if (it == terms_.end()) {
    terms_.emplace(tuple, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorElement::coefficient(const IndexTuple& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (other.order_ != order_ || other.dim_ != dim_)
    throw std::invalid_argument("TensorElement: shape mismatch");
  for (const auto& [k, v] : other.terms_) add_term(k, v);
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  TensorElement out = *this;
  out += other;
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  TensorElement out = *this;
  out += other.scaled(Rational(-1));
  return out;
}

TensorElement TensorElement::scaled(const Rational& c) const {
  TensorElement out(order_, dim_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

bool TensorElement::operator==(const TensorElement& other) const {
  return order_ == other.order_ && dim_ == other.dim_ &&
         terms_ == other.terms_;
}

TensorElement wedge(const IndexTuple& t, int dim) {
  const int p = static_cast<int>(t.size());
  TensorElement out(p, dim);
  auto canon = canonicalize(t);
  if (!canon) return out;  // repeated index: alternating, so zero
  // enumerate permutations of positions with their signs
  std::vector<int> perm(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) perm[i] = static_cast<int>(i);
  IndexTuple key(t.size());
  // Heap's algorithm keeps a running sign: every step is one transposition.
  std::vector<int> ctr(t.size(), 0);
  int sign = 1;
  auto emit = [&]() {
    for (std::size_t i = 0; i < t.size(); ++i)
      key[i] = t[static_cast<std::size_t>(perm[i])];
    out.add_term(key, Rational(sign));
  };
  emit();
  std::size_t i = 0;
  while (i < t.size()) {
    if (ctr[i] < static_cast<int>(i)) {
      if (i % 2 == 0)
        std::swap(perm[0], perm[i]);
      else
        std::swap(perm[static_cast<std::size_t>(ctr[i])], perm[i]);
      sign = -sign;
      emit();
      ++ctr[i];
      i = 0;
    } else {
      ctr[i] = 0;
      ++i;
    }
  }
  return out;
}

std::vector<int> omega_dual_positions(int n, int s) {
  if (n < 2 || s < 1 || s > n)
    throw std::invalid_argument("omega: need n >= 2 and 1 <= s <= n");
  // layout: x_1..x_{n-1} at 0..n-2, y_j at n-2+j (1-based j)
  std::vector<int> src;
  src.reserve(static_cast<std::size_t>(2 * n - 1));
  for (int j = 1; j <= n; ++j)
    if (j != s) src.push_back(n - 2 + j);
  for (int i = 0; i < n - 1; ++i) src.push_back(i);
  src.push_back(n - 2 + s);
  return src;
}

TensorElement omega_apply(const TensorElement& t, int n, int s) {
  if (t.order() != 2 * n - 1)
    throw std::invalid_argument("omega_apply: tensor order must be 2n-1");
  // The adjoint factor permutation is the inverse of the dual-side one.
  std::vector<int> src = omega_dual_positions(n, s);
  std::vector<int> inv(src.size());
  for (std::size_t q = 0; q < src.size(); ++q)
    inv[static_cast<std::size_t>(src[q])] = static_cast<int>(q);
  TensorElement out(t.order(), t.dim());
  IndexTuple key(src.size());
  for (const auto& [k, v] : t.terms()) {
    for (std::size_t r = 0; r < key.size(); ++r)
      key[r] = k[static_cast<std::size_t>(inv[r])];
    out.add_term(key, v);
  }
  return out;
}

Rational pair_coefficient(const IndexTuple& dual, const TensorElement& t) {
  if (static_cast<int>(dual.size()) != t.order())
    throw std::invalid_argument("pair: length mismatch");
  return t.coefficient(dual);
}

TensorElement map_factorwise(const RatMatrix& phi, const TensorElement& t) {
  if (phi.cols() != t.dim())
    throw std::invalid_argument("map_factorwise: dimension mismatch");
  TensorElement out(t.order(), phi.rows());
  // expand each factor through phi, depth-first
  const int p = t.order();
  IndexTuple key(static_cast<std::size_t>(p));
  for (const auto& [k, v] : t.terms()) {
    // iterative product expansion
    std::vector<std::vector<std::pair<int, Rational>>> images;
    images.reserve(k.size());
    bool dead = false;
    for (int i : k) {
      std::vector<std::pair<int, Rational>> img;
      for (int r = 0; r < phi.rows(); ++r)
        if (phi.at(r, i - 1) != 0) img.emplace_back(r + 1, phi.at(r, i - 1));
      if (img.empty()) {
        dead = true;
        break;
      }
      images.push_back(std::move(img));
    }
    if (dead) continue;
    std::vector<std::size_t> pos(static_cast<std::size_t>(p), 0);
    while (true) {
      Rational c = v;
      for (int i = 0; i < p; ++i) {
        const auto& [r, cc] = images[static_cast<std::size_t>(i)]
                                     [pos[static_cast<std::size_t>(i)]];
        key[static_cast<std::size_t>(i)] = r;
        c *= cc;
      }
      out.add_term(key, c);
      int i = p - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] + 1 ==
                           images[static_cast<std::size_t>(i)].size()) {
        pos[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

}  // namespace nlie
