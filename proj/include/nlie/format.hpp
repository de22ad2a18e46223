#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlie/matrix.hpp"
#include "nlie/structure.hpp"

namespace nlie {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

/// In-memory image of a `.nlie` file. Line grammar, `#` starts a comment:
///   nlie 1
///   arity N
///   dim M
///   mu i1 ... iN : k = p/q        bracket coefficient
///   delta l : i1 ... iN = p/q     comultiplication coefficient
///   form i j = p/q                bilinear form entry
/// Indices need not be increasing; they are canonicalized with sign on
/// load. Duplicate entries and out-of-range indices are rejected.
struct NlieDocument {
  int arity = 0;
  int dim = 0;
  std::optional<StructureConstants> mu;
  std::optional<StructureConstants> delta;  // entry (t, l) = a_l^t
  std::optional<RatMatrix> form;
  std::vector<std::string> comments;  // leading `#` lines, kept verbatim
};

/// Throws ParseError with a 1-based line number on any malformed input.
NlieDocument parse_document(const std::string& text);

/// Canonical serialization: comments first, then header, then entries with
/// increasing tuples in lexicographic order and lowest-terms rationals, LF
/// endings. parse(emit(d)) reproduces d; emit is idempotent byte-for-byte.
std::string emit_document(const NlieDocument& doc);

NlieDocument load_document(const std::string& path);
void save_document(const NlieDocument& doc, const std::string& path);

}  // namespace nlie
