#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "nlie/index.hpp"
#include "nlie/rational.hpp"

namespace nlie {

/// One violated identity: which check, at which indices, with what residual.
struct Violation {
  std::string check;
  std::vector<int> where;   // index data, check-specific layout
  std::string residual;     // exact rational (or short description)

  auto key() const { return std::tie(check, where, residual); }
  bool operator==(const Violation& o) const { return key() == o.key(); }
  bool operator<(const Violation& o) const { return key() < o.key(); }
};

/// Structured list of all violations found by a check. Empty means the
/// identity holds everywhere. Entries are kept sorted so output is
/// deterministic regardless of evaluation order.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string check, std::vector<int> where, std::string residual) {
    violations.push_back({std::move(check), std::move(where), std::move(residual)});
  }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  void sort() { std::sort(violations.begin(), violations.end()); }

  std::string to_string() const {
    ValidationReport copy = *this;
    copy.sort();
    std::ostringstream os;
    for (const auto& v : copy.violations) {
      os << v.check << " at (";
      for (std::size_t i = 0; i < v.where.size(); ++i) {
        if (i) os << ',';
        os << v.where[i];
      }
      os << "): residual " << v.residual << '\n';
    }
    return os.str();
  }
};

}  // namespace nlie
