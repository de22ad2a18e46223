#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/catalog.hpp"
#include "nlie/format.hpp"

using namespace nlie;

namespace {

int error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("minimal document and canonicalized signs") {
  std::string text =
      "# sample\n"
      "nlie 1\n"
      "arity 3\n"
      "dim 4\n"
      "mu 2 1 3 : 4 = 1\n"
      "delta 1 : 4 3 2 = 2/4\n"
      "form 1 2 = -3\n";
  NlieDocument doc = parse_document(text);
  CHECK(doc.arity == 3);
  CHECK(doc.dim == 4);
  REQUIRE(doc.mu.has_value());
  CHECK(doc.mu->coeff({1, 2, 3}, 4) == -1);  // one transposition
  REQUIRE(doc.delta.has_value());
  CHECK(doc.delta->coeff({2, 3, 4}, 1) == rat(-1, 2));  // odd permutation
  REQUIRE(doc.form.has_value());
  CHECK(doc.form->at(0, 1) == -3);
  CHECK(doc.form->at(1, 0) == -3);  // mirrored
  CHECK(doc.comments.size() == 1);
  CHECK(doc.comments[0] == "# sample");
}

TEST_CASE("emit then parse is the identity, emit is idempotent") {
  NlieDocument doc;
  doc.arity = 3;
  doc.dim = 4;
  doc.comments = {"# round trip"};
  doc.mu = simple_an(3);
  Bialgebra ex = example_bialgebra(3);
  doc.delta = ex.delta.constants;
  RatMatrix B(4, 4);
  B.at(0, 0) = rat(1, 3);
  B.at(1, 2) = -2;
  B.at(2, 1) = -2;
  doc.form = B;

  std::string once = emit_document(doc);
  NlieDocument back = parse_document(once);
  CHECK(back.arity == doc.arity);
  CHECK(back.dim == doc.dim);
  CHECK(back.comments == doc.comments);
  CHECK(*back.mu == *doc.mu);
  CHECK(*back.delta == *doc.delta);
  CHECK(*back.form == *doc.form);
  CHECK(emit_document(back) == once);

  // rationals are reduced on the way through
  NlieDocument frac = parse_document("nlie 1\narity 2\ndim 2\nmu 1 2 : 1 = 2/4\n");
  CHECK(emit_document(frac).find("= 1/2\n") != std::string::npos);
}

TEST_CASE("errors carry 1-based line numbers") {
  CHECK(error_line("") == 1);                       // missing header
  CHECK(error_line("nlie 2\n") == 1);               // wrong version
  CHECK(error_line("nlie 1\narity 3\n") == 3);      // missing dim
  CHECK(error_line("nlie 1\narity 3\ndim 4\nbogus 1\n") == 4);
  CHECK(error_line("nlie 1\ndim 4\nmu 1 2 3 : 4 = 1\narity 3\n") == 3);
  CHECK(error_line("nlie 1\narity 3\ndim 4\nmu 1 2 3 : 4 = 1/0\n") == 4);
  CHECK(error_line("nlie 1\narity 3\ndim 4\nmu 1 2 3 : 4 = x\n") == 4);
  CHECK(error_line("nlie 1\narity 3\ndim 4\nmu 1 2 5 : 4 = 1\n") == 4);
  CHECK(error_line("nlie 1\narity 3\ndim 4\nmu 1 2 : 4 = 1\n") == 4);
  CHECK(error_line("nlie 1\narity 3\ndim 4\nmu 1 1 2 : 4 = 1\n") == 4);
  CHECK(error_line("nlie 1\narity 3\ndim 4\narity 3\n") == 4);
  // duplicate entry, even under reordering
  CHECK(error_line("nlie 1\narity 3\ndim 4\n"
                   "mu 1 2 3 : 4 = 1\nmu 2 1 3 : 4 = 5\n") == 5);
  CHECK(error_line("nlie 1\narity 3\ndim 4\n"
                   "delta 1 : 1 2 3 = 1\ndelta 1 : 3 2 1 = 1\n") == 5);
  CHECK(error_line("nlie 1\narity 3\ndim 4\nform 1 2 = 1\nform 2 1 = 3\n") ==
        6);  // symmetry conflict reported at end of file
  // repeated index with a zero coefficient is dropped, not an error
  NlieDocument ok =
      parse_document("nlie 1\narity 3\ndim 4\nmu 1 1 2 : 4 = 0\n");
  CHECK(!ok.mu.has_value());
}

TEST_CASE("trailing comments and blank lines are tolerated") {
  NlieDocument doc = parse_document(
      "nlie 1\n\narity 3\ndim 4   # inline\n\nmu 1 2 3 : 4 = 1 # note\n");
  CHECK(doc.dim == 4);
  CHECK(doc.mu->coeff({1, 2, 3}, 4) == 1);
  CHECK(doc.comments.empty());
}
