#include "nlie/format.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nlie {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_index(const std::string& tok, int lo, int hi, int line,
                const char* what) {
  for (char c : tok)
    if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + what);
  try {
    int v = std::stoi(tok);
    if (v < lo || v > hi)
      throw ParseError(line, std::string(what) + " out of range: " + tok);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(line, std::string("bad ") + what);
  }
}

Rational parse_value(const std::string& tok, int line) {
  auto r = parse_rational(tok);
  if (!r) throw ParseError(line, "malformed rational: " + tok);
  return *r;
}

}  // namespace

NlieDocument parse_document(const std::string& text) {
  NlieDocument doc;
  bool saw_header = false, saw_arity = false, saw_dim = false,
       body_started = false;
  std::set<std::pair<IndexTuple, int>> seen_mu, seen_delta;
  std::set<std::pair<int, int>> seen_form;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string content = line;
    std::size_t hash = content.find('#');
    if (hash != std::string::npos) {
      if (hash == 0 && !body_started && !saw_header)
        doc.comments.push_back(line);
      content = content.substr(0, hash);
    }
    auto toks = tokenize(content);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (!saw_header) {
      if (head != "nlie" || toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, "expected header `nlie 1`");
      saw_header = true;
      continue;
    }
    if (head == "arity") {
      if (saw_arity) throw ParseError(lineno, "duplicate arity");
      if (toks.size() != 2) throw ParseError(lineno, "arity takes one value");
      doc.arity = parse_index(toks[1], 2, 64, lineno, "arity");
      saw_arity = true;
      continue;
    }
    if (head == "dim") {
      if (saw_dim) throw ParseError(lineno, "duplicate dim");
      if (toks.size() != 2) throw ParseError(lineno, "dim takes one value");
      doc.dim = parse_index(toks[1], 1, 4096, lineno, "dim");
      saw_dim = true;
      continue;
    }
    if (!saw_arity || !saw_dim)
      throw ParseError(lineno, "arity and dim must come before entries");
    body_started = true;
    const int n = doc.arity, m = doc.dim;
    if (head == "mu") {
      // mu i1 ... iN : k = p/q
      if (static_cast<int>(toks.size()) != n + 5 || toks[static_cast<std::size_t>(n + 1)] != ":" ||
          toks[static_cast<std::size_t>(n + 3)] != "=")
        throw ParseError(lineno, "malformed mu entry");
      IndexTuple t;
      for (int q = 1; q <= n; ++q)
        t.push_back(parse_index(toks[static_cast<std::size_t>(q)], 1, m, lineno, "index"));
      int k = parse_index(toks[static_cast<std::size_t>(n + 2)], 1, m, lineno, "target index");
      Rational v = parse_value(toks[static_cast<std::size_t>(n + 4)], lineno);
      auto c = canonicalize(t);
      if (!c) {
        if (v != 0)
          throw ParseError(lineno, "repeated index with nonzero coefficient");
        continue;
      }
      if (!seen_mu.insert({c->sorted, k}).second)
        throw ParseError(lineno, "duplicate mu entry");
      if (!doc.mu) doc.mu.emplace(n, m);
      doc.mu->add(t, k, v);
      continue;
    }
    if (head == "delta") {
      // delta l : i1 ... iN = p/q
      if (static_cast<int>(toks.size()) != n + 5 || toks[2] != ":" ||
          toks[static_cast<std::size_t>(n + 3)] != "=")
        throw ParseError(lineno, "malformed delta entry");
      int l = parse_index(toks[1], 1, m, lineno, "source index");
      IndexTuple t;
      for (int q = 0; q < n; ++q)
        t.push_back(parse_index(toks[static_cast<std::size_t>(3 + q)], 1, m, lineno, "index"));
      Rational v = parse_value(toks[static_cast<std::size_t>(n + 4)], lineno);
      auto c = canonicalize(t);
      if (!c) {
        if (v != 0)
          throw ParseError(lineno, "repeated index with nonzero coefficient");
        continue;
      }
      if (!seen_delta.insert({c->sorted, l}).second)
        throw ParseError(lineno, "duplicate delta entry");
      if (!doc.delta) doc.delta.emplace(n, m);
      doc.delta->add(t, l, v);
      continue;
    }
    if (head == "form") {
      if (toks.size() != 5 || toks[3] != "=")
        throw ParseError(lineno, "malformed form entry");
      int i = parse_index(toks[1], 1, m, lineno, "index");
      int j = parse_index(toks[2], 1, m, lineno, "index");
      Rational v = parse_value(toks[4], lineno);
      if (!seen_form.insert({i, j}).second)
        throw ParseError(lineno, "duplicate form entry");
      if (!doc.form) doc.form.emplace(m, m);
      doc.form->at(i - 1, j - 1) = v;
      continue;
    }
    throw ParseError(lineno, "unknown directive: " + head);
  }
  if (!saw_header) throw ParseError(lineno + 1, "missing header `nlie 1`");
  if (!saw_arity || !saw_dim)
    throw ParseError(lineno + 1, "missing arity or dim");
  if (doc.form) {
    // a one-sided entry mirrors; conflicting pairs are an error
    for (int i = 0; i < doc.dim; ++i)
      for (int j = i + 1; j < doc.dim; ++j) {
        bool has_ij = seen_form.count({i + 1, j + 1}) > 0;
        bool has_ji = seen_form.count({j + 1, i + 1}) > 0;
        if (has_ij && has_ji) {
          if (doc.form->at(i, j) != doc.form->at(j, i))
            throw ParseError(lineno + 1, "form entries are not symmetric");
        } else if (has_ij) {
          doc.form->at(j, i) = doc.form->at(i, j);
        } else if (has_ji) {
          doc.form->at(i, j) = doc.form->at(j, i);
        }
      }
  }
  return doc;
}

std::string emit_document(const NlieDocument& doc) {
  std::ostringstream os;
  for (const auto& c : doc.comments) os << c << '\n';
  os << "nlie 1\n";
  os << "arity " << doc.arity << '\n';
  os << "dim " << doc.dim << '\n';
  if (doc.mu) {
    for (const auto& [t, vec] : doc.mu->entries())
      for (int k = 1; k <= doc.dim; ++k) {
        const Rational& v = vec[static_cast<std::size_t>(k - 1)];
        if (v == 0) continue;
        os << "mu";
        for (int i : t) os << ' ' << i;
        os << " : " << k << " = " << rat_str(v) << '\n';
      }
  }
  if (doc.delta) {
    // grouped by source index for readability, tuples already sorted
    for (int l = 1; l <= doc.dim; ++l)
      for (const auto& [t, vec] : doc.delta->entries()) {
        const Rational& v = vec[static_cast<std::size_t>(l - 1)];
        if (v == 0) continue;
        os << "delta " << l << " :";
        for (int i : t) os << ' ' << i;
        os << " = " << rat_str(v) << '\n';
      }
  }
  if (doc.form) {
    for (int i = 1; i <= doc.dim; ++i)
      for (int j = i; j <= doc.dim; ++j) {
        const Rational& v = doc.form->at(i - 1, j - 1);
        if (v == 0) continue;
        os << "form " << i << ' ' << j << " = " << rat_str(v) << '\n';
      }
  }
  return os.str();
}

NlieDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const NlieDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << emit_document(doc);
}

}  // namespace nlie
