// Copyright 2026 The hypsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypsub/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "hypsub/error.hpp"

namespace hypsub {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) detail::fail<ValidationError>("empty symbol name");
    if (s.arity == 0)
      detail::fail<ValidationError>("symbol '", s.name, "' has non-positive arity");
    if (!seen.insert(s.name).second)
      detail::fail<ValidationError>("duplicate symbol '", s.name, "'");
  }
}

std::optional<SymbolIndex> Signature::find(std::string_view name) const {
  for (SymbolIndex i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Signature parse_signature(std::string_view text) {
  std::vector<Symbol> symbols;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = strip_comment(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      detail::fail<ParseError>("line ", line_no, ": expected '<name> <arity>'");
    auto name = fields[0];
    if (!is_ident_start(name.front()) ||
        !std::all_of(name.begin(), name.end(), is_ident_char))
      detail::fail<ParseError>("line ", line_no, ": bad symbol name '", name, "'");
    long long arity = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(),
                                     fields[1].data() + fields[1].size(), arity);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size())
      detail::fail<ParseError>("line ", line_no, ": bad arity '", fields[1], "'");
    if (arity <= 0)
      detail::fail<ParseError>("line ", line_no, ": non-positive arity for '",
                               name, "'");
    if (arity > std::numeric_limits<unsigned>::max())
      detail::fail<ParseError>("line ", line_no, ": arity too large");
    if (!seen.insert(std::string(name)).second)
      detail::fail<ParseError>("line ", line_no, ": duplicate symbol '", name, "'");
    symbols.push_back({std::string(name), static_cast<unsigned>(arity)});
  }
  return Signature(std::move(symbols));
}

Signature semigroup_signature() { return Signature({{"f", 2}}); }

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  VarIndex var = 0;  // 0 for applications
  SymbolIndex symbol = 0;
  std::vector<Term> children;
  std::size_t hash = 0;
  unsigned height = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(VarIndex index) {
  if (index == 0) detail::fail<ValidationError>("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->var = index;
  node->hash = mix(0x51ed27, index);
  return Term(std::move(node));
}

Term Term::app(SymbolIndex symbol, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->symbol = symbol;
  std::size_t h = mix(0xa11ce, symbol);
  unsigned height = 0;
  for (const auto& c : children) {
    h = mix(h, c.hash());
    height = std::max(height, c.height());
  }
  node->hash = h;
  node->height = height + 1;
  node->children = std::move(children);
  return Term(std::move(node));
}

bool Term::is_var() const { return node_->var != 0; }
VarIndex Term::var_index() const { return node_->var; }
SymbolIndex Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::children() const { return node_->children; }
std::size_t Term::hash() const { return node_->hash; }
unsigned Term::height() const { return node_->height; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->var != b.node_->var ||
      a.node_->height != b.node_->height)
    return false;
  if (a.is_var()) return true;
  if (a.node_->symbol != b.node_->symbol) return false;
  return std::equal(a.node_->children.begin(), a.node_->children.end(),
                    b.node_->children.begin(), b.node_->children.end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  if (a.is_var()) return a.var_index() <=> b.var_index();  // height 0: both vars
  if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
  auto ac = a.children();
  auto bc = b.children();
  return std::lexicographical_compare_three_way(ac.begin(), ac.end(), bc.begin(),
                                                bc.end());
}

TermMetrics metrics(const Term& t) {
  TermMetrics m;
  if (t.is_var()) {
    m.depth = 0;
    m.length = 1;
    m.varset.insert(t.var_index());
  } else {
    for (const auto& child : t.children()) {
      auto cm = metrics(child);
      m.depth = std::max(m.depth, cm.depth);
      m.length += cm.length;
      m.varset.insert(cm.varset.begin(), cm.varset.end());
    }
    m.depth += 1;
  }
  m.varcount = m.varset.size();
  return m;
}

void check_term(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  if (t.symbol() >= sig.size())
    detail::fail<ValidationError>("symbol index ", t.symbol(), " outside signature");
  if (t.children().size() != sig.arity(t.symbol()))
    detail::fail<ValidationError>("symbol '", sig[t.symbol()].name, "' expects ",
                                  sig.arity(t.symbol()), " arguments, got ",
                                  t.children().size());
  for (const auto& c : t.children()) check_term(c, sig);
}

VarIndex max_variable(const Term& t) {
  if (t.is_var()) return t.var_index();
  VarIndex m = 0;
  for (const auto& c : t.children()) m = std::max(m, max_variable(c));
  return m;
}

std::optional<VarIndex> alias_variable(char c) {
  switch (c) {
    case 'x': return 1;
    case 'y': return 2;
    case 'z': return 3;
    case 'u': return 4;
    case 't': return 4;
    case 'v': return 5;
    case 'w': return 6;
    default: return std::nullopt;
  }
}

namespace {

std::optional<VarIndex> variable_token(std::string_view tok) {
  if (tok.size() == 1) return alias_variable(tok[0]);
  if (tok.size() >= 2 && tok[0] == 'x' &&
      std::all_of(tok.begin() + 1, tok.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    VarIndex k = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || k == 0)
      return std::nullopt;
    return k;
  }
  return std::nullopt;
}

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) error("trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(std::string_view what) const {
    detail::fail<ParseError>("term parse error at offset ", pos_, ": ", what,
                             " in '", text_, "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term term() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
      error("expected a variable or symbol");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    auto name = text_.substr(start, pos_ - start);
    if (!peek('(')) {
      auto v = variable_token(name);
      if (!v) detail::fail<ParseError>("unknown variable '", name, "'");
      return Term::var(*v);
    }
    auto sym = sig_.find(name);
    if (!sym) detail::fail<ParseError>("unknown symbol '", name, "'");
    expect('(');
    std::vector<Term> children;
    children.push_back(term());
    while (peek(',')) {
      ++pos_;
      children.push_back(term());
    }
    expect(')');
    if (children.size() != sig_.arity(*sym))
      detail::fail<ParseError>("arity mismatch: '", name, "' expects ",
                               sig_.arity(*sym), " arguments, got ",
                               children.size());
    return Term::app(*sym, std::move(children));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

void render_into(const Term& t, const Signature& sig, std::string& out) {
  if (t.is_var()) {
    out += render_variable(t.var_index());
    return;
  }
  out += sig[t.symbol()].name;
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ',';
    first = false;
    render_into(c, sig, out);
  }
  out += ')';
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  return TermParser(text, sig).parse();
}

std::string render_variable(VarIndex index) { return "x" + std::to_string(index); }

std::string render_term(const Term& t, const Signature& sig) {
  std::string out;
  render_into(t, sig, out);
  return out;
}

Term superpose(const Term& s, std::span<const Term> args) {
  if (s.is_var()) {
    if (s.var_index() > args.size())
      detail::fail<ValidationError>("superposition: variable x", s.var_index(),
                                    " exceeds ", args.size(), " arguments");
    return args[s.var_index() - 1];
  }
  std::vector<Term> children;
  children.reserve(s.children().size());
  for (const auto& c : s.children()) children.push_back(superpose(c, args));
  return Term::app(s.symbol(), std::move(children));
}

namespace {

std::size_t saturating_pow(std::size_t base, unsigned exp, std::size_t limit) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, unsigned max_depth,
                                  VarIndex max_var, std::size_t cap) {
  if (max_var == 0) detail::fail<ValidationError>("max_var must be positive");
  std::size_t count = max_var;
  for (unsigned d = 1; d <= max_depth; ++d) {
    std::size_t next = max_var;
    for (const auto& s : sig.symbols()) {
      next += saturating_pow(count, s.arity, cap);
      if (next > cap) break;
    }
    count = next;
    if (count > cap)
      detail::fail<CapExceeded>("term universe of depth ", max_depth, " over ",
                                max_var, " variables exceeds cap ", cap);
  }

  std::vector<Term> universe;
  universe.reserve(count);
  for (VarIndex v = 1; v <= max_var; ++v) universe.push_back(Term::var(v));
  for (unsigned d = 1; d <= max_depth; ++d) {
    const std::size_t prev = universe.size();
    for (SymbolIndex s = 0; s < sig.size(); ++s) {
      const unsigned arity = sig.arity(s);
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        bool reaches = false;
        std::vector<Term> children;
        children.reserve(arity);
        for (auto i : idx) {
          reaches = reaches || universe[i].height() + 1 == d;
          children.push_back(universe[i]);
        }
        if (reaches) universe.push_back(Term::app(s, std::move(children)));
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == prev) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return universe;
}

}  // namespace hypsub
