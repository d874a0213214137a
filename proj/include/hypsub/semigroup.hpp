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

#ifndef HYPSUB_SEMIGROUP_HPP
#define HYPSUB_SEMIGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hypsub/term.hpp"

namespace hypsub {

/// A semigroup word: a non-empty sequence of variable indices.
class Word {
 public:
  Word() = default;  // empty placeholder; never a valid word
  explicit Word(std::vector<VarIndex> letters);

  std::span<const VarIndex> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::set<VarIndex> variables() const;
  std::size_t variable_count() const { return variables().size(); }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<VarIndex> letters_;
};

/// `x1..xn` as a word.
Word word_of_range(VarIndex first, VarIndex last);

/// Juxtaposed letters `x,y,z,u,v,w,t` or `x<k>` tokens, optional `^<k>`
/// exponents, whitespace ignored. "xy^2", "x1 x2 x2", "x1x2x2" are equal.
Word parse_word(std::string_view text);
/// Juxtaposed `x<k>` tokens, e.g. "x1x3x2".
std::string render_word(const Word& w);

struct Identity {
  Word lhs;
  Word rhs;

  auto operator<=>(const Identity&) const = default;
  bool operator==(const Identity&) const = default;
};

/// `<word> = <word>` (also accepts `≈` or `~`).
Identity parse_identity(std::string_view text);
std::string render_identity(const Identity& id);

/// Finite axiom set, deduplicated modulo swapping sides. Associativity is
/// implicit in the word representation.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<Identity> axioms);

  std::span<const Identity> axioms() const { return axioms_; }
  bool empty() const { return axioms_.empty(); }

 private:
  std::vector<Identity> axioms_;
};

/// Lines `<word> = <word>`, `#` comments.
Presentation parse_presentation(std::string_view text);

/// In-order leaves of a term over the signature `f 2`.
Word term_to_word(const Term& t, const Signature& sig);

inline constexpr std::size_t kDefaultBracketingCap = 6;

/// All binary bracketings of the word (Catalan(len-1) of them). The root
/// split moves from the rightmost position to the leftmost, so for xyz the
/// left-nested term comes first.
std::vector<Term> bracketings(const Word& w, std::size_t cap = kDefaultBracketingCap);

// Finite models -------------------------------------------------------------

class FiniteSemigroup {
 public:
  /// Throws ValidationError unless the table is total, in range and associative.
  FiniteSemigroup(unsigned order, std::vector<std::uint8_t> table);

  unsigned order() const { return order_; }
  std::uint8_t multiply(unsigned a, unsigned b) const { return table_[a * order_ + b]; }
  std::span<const std::uint8_t> table() const { return table_; }

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  unsigned order_;
  std::vector<std::uint8_t> table_;
};

inline constexpr unsigned kMaxModelOrder = 4;

/// All labelled associative tables of order 1..max_order, by order and then
/// lexicographically by row-major table.
std::vector<FiniteSemigroup> enumerate_finite_semigroups(unsigned max_order,
                                                         unsigned cap = kMaxModelOrder);

/// Value of the word under an assignment indexed by variable (index 0 unused).
unsigned evaluate(const FiniteSemigroup& s, const Word& w,
                  std::span<const unsigned> assignment);

// Verdicts ------------------------------------------------------------------

enum class Status { Proved, Disproved, Unknown };
std::string_view status_name(Status s);

struct Budget {
  std::size_t max_word_len = 8;
  std::size_t max_subst_len = 3;
  std::size_t max_nodes = 200'000;
};

struct DerivationStep {
  Word word;              // result of the step
  std::size_t axiom = 0;  // index into the presentation
  bool reversed = false;  // rhs -> lhs
  std::size_t position = 0;
};

struct Derivation {
  Word start;
  std::vector<DerivationStep> steps;
};

struct CounterModel {
  FiniteSemigroup model;
  std::vector<std::pair<VarIndex, unsigned>> assignment;
  unsigned lhs_value = 0;
  unsigned rhs_value = 0;
};

struct BudgetReport {
  std::size_t nodes_visited = 0;
  bool node_budget_exhausted = false;
  std::size_t rewrites_pruned_by_length = 0;
  unsigned max_order_searched = 0;
  std::size_t models_checked = 0;
};

struct Verdict {
  Status status = Status::Unknown;
  Identity goal;
  std::optional<Derivation> derivation;       // Proved
  std::optional<CounterModel> counter_model;  // Disproved
  BudgetReport used;
};

/// Breadth-first search from goal.lhs under single-step rewrites by axiom
/// instances (both orientations). Returns Proved with a trace or Unknown.
Verdict derive(const Presentation& pres, const Identity& goal, const Budget& budget = {});

/// Words reachable from `start` within the budget, in BFS order.
std::vector<Word> reachable_words(const Presentation& pres, const Word& start,
                                  const Budget& budget = {});

/// As above, but stops after the first word accepted by `stop` (inclusive).
std::vector<Word> reachable_words(const Presentation& pres, const Word& start,
                                  const Budget& budget,
                                  const std::function<bool(const Word&)>& stop);

/// Searches labelled models up to max_order for one that satisfies every
/// axiom but not the goal. Returns Disproved with a witness or Unknown.
Verdict refute(const Presentation& pres, const Identity& goal,
               unsigned max_order = kMaxModelOrder);

/// derive, then refute on Unknown.
Verdict decide(const Presentation& pres, const Identity& goal, const Budget& budget = {},
               unsigned max_order = kMaxModelOrder);

/// True when every assignment satisfies the identity in the model.
bool satisfies(const FiniteSemigroup& s, const Identity& id);

}  // namespace hypsub

#endif  // HYPSUB_SEMIGROUP_HPP
