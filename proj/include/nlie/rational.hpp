#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nlie {

/// Exact rational scalar. All coefficients in the library are of this type;
/// there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Renders "p" for integers, "p/q" otherwise (lowest terms, q > 0).
inline std::string rat_str(const Rational& r) {
  return r.get_str();
}

/// Parses "p" or "p/q" with optional sign. Rejects q == 0 and junk.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string txt(s);
  // mpq_class accepts whitespace and other bases; be strict instead.
  std::size_t slash = txt.find('/');
  auto is_int = [](std::string_view v) {
    if (v.empty()) return false;
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(txt)) return std::nullopt;
  } else {
    std::string_view num = std::string_view(txt).substr(0, slash);
    std::string_view den = std::string_view(txt).substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) return std::nullopt;
  }
  if (txt[0] == '+') txt.erase(0, 1);  // mpq rejects an explicit plus
  Rational r;
  if (r.set_str(txt, 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;  // before canonicalize: mpq aborts on 0 denominator
  r.canonicalize();
  return r;
}

}  // namespace nlie
