// Command-line front end for the n-ary bracket/comultiplication toolkit.
// Exit codes: 0 = all checks clean, 1 = mathematical violation, 2 = usage
// or parse error.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nlie/ansolver.hpp"
#include "nlie/bialgebra.hpp"
#include "nlie/catalog.hpp"
#include "nlie/coalgebra.hpp"
#include "nlie/extension.hpp"
#include "nlie/format.hpp"
#include "nlie/rng.hpp"
#include "nlie/structure.hpp"

namespace {

using namespace nlie;

constexpr int kOk = 0, kViolation = 1, kUsage = 2;

int report_outcome(const std::string& check, const ValidationReport& r) {
  if (r.ok()) {
    std::cout << check << ": ok\n";
    return kOk;
  }
  std::cout << check << ": " << r.violations.size() << " violation(s)\n"
            << r.to_string();
  return kViolation;
}

std::optional<Bialgebra> doc_bialgebra(const NlieDocument& doc) {
  if (!doc.mu || !doc.delta) return std::nullopt;
  return Bialgebra(*doc.mu, Comultiplication(*doc.delta));
}

int cmd_validate(const std::string& path) {
  NlieDocument doc = load_document(path);
  int rc = kOk;
  if (!doc.mu && !doc.delta && !doc.form) {
    std::cerr << "nothing to validate: no mu, delta, or form entries\n";
    return kUsage;
  }
  if (doc.mu)
    rc |= report_outcome("fundamental-identity",
                         check_fundamental_identity(*doc.mu));
  if (doc.delta) {
    Comultiplication d(*doc.delta);
    rc |= report_outcome("coalgebra-dual", check_coalgebra_dual(d));
    rc |= report_outcome("coalgebra-tensor", check_coalgebra_tensor(d));
  }
  if (doc.mu && doc.delta) {
    Bialgebra b = *doc_bialgebra(doc);
    rc |= report_outcome("compatibility-tensor",
                         check_compatibility_tensor(b));
    rc |= report_outcome("compatibility-constants",
                         check_compatibility_constants(b));
  }
  if (doc.form) {
    BilinearForm B((*doc.form));
    if (doc.mu)
      rc |= report_outcome("ad-invariance", check_ad_invariance(*doc.mu, B));
    else
      std::cout << "form: symmetric, rank " << doc.form->rank() << '\n';
  }
  return rc ? kViolation : kOk;
}

int cmd_rank(const std::string& path) {
  NlieDocument doc = load_document(path);
  if (!doc.delta) {
    std::cerr << "rank requires delta entries\n";
    return kUsage;
  }
  std::cout << rank(Comultiplication(*doc.delta)) << '\n';
  return kOk;
}

int cmd_dual(const std::string& path, const std::string& out_path) {
  NlieDocument doc = load_document(path);
  NlieDocument out;
  out.arity = doc.arity;
  out.dim = doc.dim;
  if (doc.mu && doc.delta) {
    Bialgebra dual = dualize(*doc_bialgebra(doc));  // throws if invalid
    out.mu = dual.mu;
    out.delta = dual.delta.constants;
  } else if (doc.delta) {
    out.mu = dual_algebra(Comultiplication(*doc.delta));
  } else if (doc.mu) {
    out.delta = dual_comultiplication(*doc.mu).constants;
  } else {
    std::cerr << "dual requires mu or delta entries\n";
    return kUsage;
  }
  save_document(out, out_path);
  std::cout << "wrote " << out_path << '\n';
  return kOk;
}

int cmd_extend(const std::string& path, const std::string& form_path,
               bool trivial, const std::string& out_path) {
  NlieDocument doc = load_document(path);
  if (!doc.mu) {
    std::cerr << "extend requires mu entries\n";
    return kUsage;
  }
  BilinearForm B = BilinearForm::zero(doc.dim);
  if (!trivial && !form_path.empty()) {
    NlieDocument fdoc = load_document(form_path);
    if (!fdoc.form || fdoc.dim != doc.dim) {
      std::cerr << "form file must carry form entries of matching dim\n";
      return kUsage;
    }
    B = BilinearForm(*fdoc.form);
  } else if (!trivial && doc.form) {
    B = BilinearForm(*doc.form);
  }
  NlieDocument out;
  out.arity = doc.arity + 1;
  out.dim = doc.dim + 2;
  out.comments = {
      "# extended structure: index 1 = adjoined central vector,",
      "# index 2 = adjoined multiplier, index i+2 = original index i"};
  if (doc.delta) {
    Bialgebra ext =
        extend_bialgebra(*doc_bialgebra(doc), B);
    out.mu = ext.mu;
    out.delta = ext.delta.constants;
  } else {
    out.mu = extend_algebra_metric(*doc.mu, B);
  }
  out.form = extend_form(B, doc.arity).matrix();
  save_document(out, out_path);
  std::cout << "wrote " << out_path << '\n';
  return kOk;
}

int cmd_classify(const std::string& path) {
  NlieDocument doc = load_document(path);
  if (!doc.mu) {
    std::cerr << "classify requires mu entries\n";
    return kUsage;
  }
  if (!check_fundamental_identity(*doc.mu).ok()) {
    std::cout << "not a valid bracket (fundamental identity fails)\n";
    return kViolation;
  }
  std::cout << classify(*doc.mu).to_string() << '\n';
  return kOk;
}

int cmd_catalog(const std::string& label, int n, const std::string& alpha_str,
                int r, const std::string& out_path) {
  NlieDocument out;
  if (label == "top") {
    Comultiplication d = example_coalgebra_top(n);
    out.arity = n;
    out.dim = n + 1;
    out.delta = d.constants;
  } else if (label == "example") {
    Bialgebra b = example_bialgebra(n);
    out.arity = n;
    out.dim = n + 1;
    out.mu = b.mu;
    out.delta = b.delta.constants;
  } else {
    CanonicalLabel cl;
    if (label == "abelian") cl = CanonicalLabel::abelian();
    else if (label == "b1") cl = CanonicalLabel::b1();
    else if (label == "b2") cl = CanonicalLabel::b2();
    else if (label == "c1") cl = CanonicalLabel::c1();
    else if (label == "c3") cl = CanonicalLabel::c3();
    else if (label == "an") cl = CanonicalLabel::d(n + 1);
    else if (label == "c2") {
      auto a = parse_rational(alpha_str);
      if (!a || *a == 0) {
        std::cerr << "c2 needs --alpha with a nonzero rational\n";
        return kUsage;
      }
      cl = CanonicalLabel::c2(*a);
    } else if (label == "d") {
      cl = CanonicalLabel::d(r);
    } else {
      std::cerr << "unknown label: " << label << '\n';
      return kUsage;
    }
    out.arity = n;
    out.dim = n + 1;
    out.mu = canonical_algebra(n, cl);
  }
  save_document(out, out_path);
  std::cout << "wrote " << out_path << '\n';
  return kOk;
}

int cmd_solve_an(int n, int trials, std::uint64_t seed) {
  SimpleBracketReport r = verify_simple_bracket_classification(n, trials, seed);
  std::cout << r.summary();
  return r.all_passed ? kOk : kViolation;
}

StructureConstants random_constants(SplitMix64& rng, int n, int m,
                                    int percent_density) {
  StructureConstants sc(n, m);
  for_each_increasing(m, n, [&](const IndexTuple& t) {
    for (int k = 1; k <= m; ++k)
      if (rng.bounded(100) < static_cast<std::uint64_t>(percent_density))
        sc.add(t, k, rng.rational(3, 2));
  });
  return sc;
}

int cmd_fuzz(int n, int m, int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  int coalg_agree = 0, compat_agree = 0;
  for (int t = 0; t < trials; ++t) {
    Comultiplication d(random_constants(rng, n, m, 25));
    bool tensor_ok = check_coalgebra_tensor(d).ok();
    bool dual_ok = check_coalgebra_dual(d).ok();
    if (tensor_ok == dual_ok) ++coalg_agree;
    Bialgebra b(random_constants(rng, n, m, 25),
                Comultiplication(random_constants(rng, n, m, 25)));
    bool ct = check_compatibility_tensor(b).ok();
    bool cc = check_compatibility_constants(b).ok();
    if (ct == cc) ++compat_agree;
  }
  std::cout << "coalgebra route agreement: " << coalg_agree << '/' << trials
            << '\n'
            << "compatibility route agreement: " << compat_agree << '/'
            << trials << '\n';
  return (coalg_agree == trials && compat_agree == trials) ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for n-ary brackets, "
               "comultiplications, and their compatibility"};
  app.require_subcommand(1);

  std::string path, out_path, form_path, label, alpha_str;
  int n = 3, m = 4, trials = 100, r = 3;
  std::uint64_t seed = 0;
  bool trivial = false;

  auto* validate_cmd = app.add_subcommand("validate", "run every applicable check");
  validate_cmd->add_option("file", path)->required();

  auto* rank_cmd = app.add_subcommand("rank", "rank of the comultiplication");
  rank_cmd->add_option("file", path)->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual structure");
  dual_cmd->add_option("file", path)->required();
  dual_cmd->add_option("-o,--output", out_path)->required();

  auto* extend_cmd = app.add_subcommand("extend", "two-slot extension");
  extend_cmd->add_option("file", path)->required();
  extend_cmd->add_flag("--trivial", trivial, "force the zero form");
  extend_cmd->add_option("--form", form_path, "file carrying form entries");
  extend_cmd->add_option("-o,--output", out_path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "isomorphism class");
  classify_cmd->add_option("file", path)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "write a canonical structure");
  catalog_cmd->add_option("label", label)->required();
  catalog_cmd->add_option("-n,--arity", n);
  catalog_cmd->add_option("--alpha", alpha_str);
  catalog_cmd->add_option("--r", r);
  catalog_cmd->add_option("-o,--output", out_path)->required();

  auto* solve_cmd = app.add_subcommand("solve-an", "verify the simple-bracket classification");
  solve_cmd->add_option("-n,--arity", n);
  solve_cmd->add_option("--trials", trials);
  solve_cmd->add_option("--seed", seed);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "route-agreement fuzzing");
  fuzz_cmd->add_option("-n,--arity", n);
  fuzz_cmd->add_option("-m,--dim", m);
  fuzz_cmd->add_option("--trials", trials);
  fuzz_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(path);
    if (app.got_subcommand(rank_cmd)) return cmd_rank(path);
    if (app.got_subcommand(dual_cmd)) return cmd_dual(path, out_path);
    if (app.got_subcommand(extend_cmd))
      return cmd_extend(path, form_path, trivial, out_path);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(path);
    if (app.got_subcommand(catalog_cmd))
      return cmd_catalog(label, n, alpha_str, r, out_path);
    if (app.got_subcommand(solve_cmd)) return cmd_solve_an(n, trials, seed);
    if (app.got_subcommand(fuzz_cmd)) return cmd_fuzz(n, m, trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
