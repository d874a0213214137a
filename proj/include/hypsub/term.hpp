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

#ifndef HYPSUB_TERM_HPP
#define HYPSUB_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypsub {

using VarIndex = std::uint32_t;
using SymbolIndex = std::size_t;

struct Symbol {
  std::string name;
  unsigned arity = 0;

  bool operator==(const Symbol&) const = default;
};

/// An indexed family of operation symbols with positive arities. Declaration
/// order is the index order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](SymbolIndex i) const { return symbols_.at(i); }
  std::span<const Symbol> symbols() const { return symbols_; }
  unsigned arity(SymbolIndex i) const { return symbols_.at(i).arity; }
  std::optional<SymbolIndex> find(std::string_view name) const;

  /// True for the type (2): one binary symbol.
  bool is_semigroup_type() const {
    return symbols_.size() == 1 && symbols_[0].arity == 2;
  }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Parses `<name> <arity>` lines; `#` starts a comment.
Signature parse_signature(std::string_view text);

/// The signature `f 2`.
Signature semigroup_signature();

/// Immutable term value. Copies share structure; equality is syntactic.
class Term {
 public:
  static Term var(VarIndex index);
  static Term app(SymbolIndex symbol, std::vector<Term> children);

  bool is_var() const;
  VarIndex var_index() const;
  SymbolIndex symbol() const;
  std::span<const Term> children() const;

  std::size_t hash() const;
  /// Cached height; used by enumeration and ordering.
  unsigned height() const;

  friend bool operator==(const Term& a, const Term& b);
  /// Canonical order: height, then variables by index before applications,
  /// then symbol index, then children lexicographically.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct TermMetrics {
  unsigned depth = 0;
  std::size_t length = 0;
  std::set<VarIndex> varset;
  std::size_t varcount = 0;
};

TermMetrics metrics(const Term& t);

/// Throws ValidationError unless every application matches the signature.
void check_term(const Term& t, const Signature& sig);

/// Largest variable index occurring in `t`.
VarIndex max_variable(const Term& t);

/// Maps `x y z u v w` to x1..x6 and `t` to x4.
std::optional<VarIndex> alias_variable(char c);

Term parse_term(std::string_view text, const Signature& sig);
std::string render_term(const Term& t, const Signature& sig);
std::string render_variable(VarIndex index);

/// Simultaneous substitution of args[i-1] for x_i in `s`.
Term superpose(const Term& s, std::span<const Term> args);

inline constexpr std::size_t kDefaultTermCap = 4'000'000;

/// All terms over x1..x_max_var of depth at most max_depth, in canonical order.
std::vector<Term> enumerate_terms(const Signature& sig, unsigned max_depth,
                                  VarIndex max_var,
                                  std::size_t cap = kDefaultTermCap);

}  // namespace hypsub

#endif  // HYPSUB_TERM_HPP
