#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nlie {

/// Basis-index tuple. Indices are 1-based; the extension module additionally
/// uses a renumbered range, so no global range check lives here.
using IndexTuple = std::vector<int>;

struct Canonicalized {
  IndexTuple sorted;  // strictly increasing
  int sign;           // sign of the sorting permutation, +1 or -1
};

/// Sorts a tuple and reports the permutation sign. A repeated index returns
/// nullopt (the alternating-tensor zero case).
inline std::optional<Canonicalized> canonicalize(const IndexTuple& t) {
  const std::size_t p = t.size();
  std::vector<int> order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t[a] < t[b]; });
  Canonicalized out;
  out.sorted.resize(p);
  for (std::size_t i = 0; i < p; ++i) out.sorted[i] = t[order[i]];
  for (std::size_t i = 0; i + 1 < p; ++i)
    if (out.sorted[i] == out.sorted[i + 1]) return std::nullopt;
  // permutation sign via cycle decomposition of `order`
  int sign = 1;
  std::vector<bool> seen(p, false);
  for (std::size_t i = 0; i < p; ++i) {
    if (seen[i]) continue;
    std::size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(order[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  out.sign = sign;
  return out;
}

/// Generalized Kronecker determinant: det of the p x p matrix with (r,c)
/// entry delta_{upper_c, lower_r}. Value in {-1,0,+1} for distinct entries.
inline int kron_det(const IndexTuple& upper, const IndexTuple& lower) {
  if (upper.size() != lower.size())
    throw std::invalid_argument("kron_det: tuple length mismatch");
  auto cu = canonicalize(upper);
  auto cl = canonicalize(lower);
  if (!cu || !cl) return 0;  // repeated row or column of deltas
  if (cu->sorted != cl->sorted) return 0;
  return cu->sign * cl->sign;
}

/// Calls fn(t) for every strictly increasing k-tuple over {1..m}.
template <typename Fn>
void for_each_increasing(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  IndexTuple t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(const_cast<const IndexTuple&>(t));
    int i = k - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Calls fn(t) for every k-tuple over {1..m} (with repetition, all orders).
template <typename Fn>
void for_each_tuple(int m, int k, Fn&& fn) {
  IndexTuple t(static_cast<std::size_t>(k), 1);
  if (k == 0) {
    fn(const_cast<const IndexTuple&>(t));
    return;
  }
  while (true) {
    fn(const_cast<const IndexTuple&>(t));
    int i = k - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == m) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) t[static_cast<std::size_t>(j)] = 1;
  }
}

}  // namespace nlie
