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

#include <algorithm>
#include <array>
#include <optional>
#include <mutex>

#include "hypsub/error.hpp"
#include "hypsub/semigroup.hpp"

namespace hypsub {

FiniteSemigroup::FiniteSemigroup(unsigned order, std::vector<std::uint8_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || order_ > 255) detail::fail<ValidationError>("bad semigroup order ", order_);
  if (table_.size() != std::size_t{order_} * order_)
    detail::fail<ValidationError>("table of order ", order_, " needs ", order_ * order_,
                                  " entries, got ", table_.size());
  for (auto e : table_)
    if (e >= order_) detail::fail<ValidationError>("table entry ", int{e}, " out of range");
  for (unsigned a = 0; a < order_; ++a)
    for (unsigned b = 0; b < order_; ++b)
      for (unsigned c = 0; c < order_; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          detail::fail<ValidationError>("table is not associative at (", a, ",", b, ",", c, ")");
}

namespace {

constexpr int kUnset = -1;

// Backtracking over row-major cells; a partial table is kept only while every
// fully determined associativity triple agrees.
class TableSearch {
 public:
  explicit TableSearch(unsigned n) : n_(n), cells_(n * n, kUnset) {}

  std::vector<FiniteSemigroup> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  int at(int a, int b) const { return cells_[a * n_ + b]; }

  bool consistent() const {
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b) {
        int ab = at(a, b);
        if (ab == kUnset) continue;
        for (unsigned c = 0; c < n_; ++c) {
          int bc = at(b, c);
          if (bc == kUnset) continue;
          int left = at(ab, c);
          int right = at(a, bc);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == cells_.size()) {
      std::vector<std::uint8_t> table(cells_.begin(), cells_.end());
      found_.emplace_back(n_, std::move(table));
      return;
    }
    for (unsigned v = 0; v < n_; ++v) {
      cells_[cell] = static_cast<int>(v);
      if (consistent()) fill(cell + 1);
    }
    cells_[cell] = kUnset;
  }

  unsigned n_;
  std::vector<int> cells_;
  std::vector<FiniteSemigroup> found_;
};

const std::vector<FiniteSemigroup>& semigroups_of_order(unsigned n) {
  static std::mutex mutex;
  static std::array<std::optional<std::vector<FiniteSemigroup>>, kMaxModelOrder + 1> cache;
  std::lock_guard lock(mutex);
  if (n < cache.size()) {
    if (!cache[n]) cache[n] = TableSearch(n).run();
    return *cache[n];
  }
  // Orders above the default cap are recomputed on every call.
  static thread_local std::vector<FiniteSemigroup> scratch;
  scratch = TableSearch(n).run();
  return scratch;
}

}  // namespace

std::vector<FiniteSemigroup> enumerate_finite_semigroups(unsigned max_order, unsigned cap) {
  if (max_order > cap)
    detail::fail<CapExceeded>("model order ", max_order, " exceeds cap ", cap);
  std::vector<FiniteSemigroup> out;
  for (unsigned n = 1; n <= max_order; ++n) {
    const auto& models = semigroups_of_order(n);
    out.insert(out.end(), models.begin(), models.end());
  }
  return out;
}

unsigned evaluate(const FiniteSemigroup& s, const Word& w, std::span<const unsigned> assignment) {
  auto letters = w.letters();
  unsigned acc = assignment[letters[0]];
  for (std::size_t i = 1; i < letters.size(); ++i) acc = s.multiply(acc, assignment[letters[i]]);
  return acc;
}

namespace {

// Calls visit(assignment) for each assignment of `vars` into the model in
// lexicographic order (first variable slowest); stops when visit returns true.
template <typename Visit>
bool for_each_assignment(const FiniteSemigroup& s, const std::vector<VarIndex>& vars,
                         Visit&& visit) {
  VarIndex top = 0;
  for (auto v : vars) top = std::max(top, v);
  std::vector<unsigned> assignment(top + 1, 0);
  while (true) {
    if (visit(assignment)) return true;
    std::size_t k = vars.size();
    while (k > 0 && ++assignment[vars[k - 1]] == s.order()) assignment[vars[--k]] = 0;
    if (k == 0) return false;
  }
}

std::vector<VarIndex> identity_variables(const Identity& id) {
  auto vars = id.lhs.variables();
  auto rhs = id.rhs.variables();
  vars.insert(rhs.begin(), rhs.end());
  return {vars.begin(), vars.end()};
}

}  // namespace

bool satisfies(const FiniteSemigroup& s, const Identity& id) {
  return !for_each_assignment(s, identity_variables(id), [&](const std::vector<unsigned>& a) {
    return evaluate(s, id.lhs, a) != evaluate(s, id.rhs, a);
  });
}

namespace {

// Which models of order n satisfy the axioms. The last presentation seen on
// this thread is remembered, since solidity checks refute many goals against
// one presentation.
const std::vector<char>& model_mask(const Presentation& pres, unsigned n) {
  struct Cache {
    std::vector<Identity> axioms;
    std::vector<std::vector<char>> masks;  // by order
  };
  static thread_local Cache cache;
  const auto axioms = pres.axioms();
  if (!std::equal(axioms.begin(), axioms.end(), cache.axioms.begin(), cache.axioms.end())) {
    cache.axioms.assign(axioms.begin(), axioms.end());
    cache.masks.clear();
  }
  if (cache.masks.size() <= n) cache.masks.resize(n + 1);
  auto& mask = cache.masks[n];
  const auto& models = semigroups_of_order(n);
  if (mask.size() != models.size()) {
    mask.clear();
    for (const auto& model : models)
      mask.push_back(std::all_of(axioms.begin(), axioms.end(),
                                 [&](const Identity& ax) { return satisfies(model, ax); }));
  }
  return mask;
}

}  // namespace

Verdict refute(const Presentation& pres, const Identity& goal, unsigned max_order) {
  Verdict verdict;
  verdict.goal = goal;
  verdict.status = Status::Unknown;
  const auto goal_vars = identity_variables(goal);
  for (unsigned n = 1; n <= max_order; ++n) {
    verdict.used.max_order_searched = n;
    const auto& models = semigroups_of_order(n);
    const auto& mask = model_mask(pres, n);
    for (std::size_t i = 0; i < models.size(); ++i) {
      const auto& model = models[i];
      ++verdict.used.models_checked;
      if (!mask[i]) continue;
      std::vector<unsigned> witness;
      bool violated = for_each_assignment(model, goal_vars, [&](const std::vector<unsigned>& a) {
        if (evaluate(model, goal.lhs, a) == evaluate(model, goal.rhs, a)) return false;
        witness = a;
        return true;
      });
      if (!violated) continue;
      CounterModel cm{model, {}, evaluate(model, goal.lhs, witness),
                      evaluate(model, goal.rhs, witness)};
      for (auto v : goal_vars) cm.assignment.emplace_back(v, witness[v]);
      verdict.status = Status::Disproved;
      verdict.counter_model = std::move(cm);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace hypsub
