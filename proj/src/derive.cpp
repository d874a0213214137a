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
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

#include "hypsub/semigroup.hpp"

namespace hypsub {

namespace {

using Letters = std::u32string;

Letters to_letters(const Word& w) {
  Letters out;
  for (auto v : w.letters()) out.push_back(static_cast<char32_t>(v));
  return out;
}

Word to_word(const Letters& s) {
  return Word(std::vector<VarIndex>(s.begin(), s.end()));
}

struct Rule {
  Letters pattern;
  Letters result;
  std::vector<VarIndex> free;  // result variables not bound by the pattern
  std::size_t axiom;
  bool reversed;
};

std::vector<Rule> make_rules(const Presentation& pres) {
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < pres.axioms().size(); ++i) {
    const auto& ax = pres.axioms()[i];
    for (bool reversed : {false, true}) {
      if (reversed && ax.lhs == ax.rhs) continue;
      const Word& from = reversed ? ax.rhs : ax.lhs;
      const Word& to = reversed ? ax.lhs : ax.rhs;
      Rule r{to_letters(from), to_letters(to), {}, i, reversed};
      auto bound = from.variables();
      for (auto v : to.variables())
        if (!bound.contains(v)) r.free.push_back(v);
      rules.push_back(std::move(r));
    }
  }
  return rules;
}

struct Node {
  Letters word;
  std::size_t parent;
  DerivationStep step;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

/// Breadth-first rewriting closure. `on_new` sees each newly discovered node
/// id and returns true to stop the search. Several rewriters may share one
/// node counter so that they draw on a common budget.
class Rewriter {
 public:
  Rewriter(const Presentation& pres, const Budget& budget, std::vector<VarIndex> alphabet,
           std::size_t* shared_count = nullptr)
      : rules_(make_rules(pres)), budget_(budget),
        count_(shared_count ? shared_count : &own_count_) {
    // Instantiation words for free variables: by length, then lexicographic.
    std::vector<Letters> layer{Letters{}};
    for (std::size_t len = 1; len <= budget_.max_subst_len; ++len) {
      std::vector<Letters> next;
      for (const auto& prefix : layer)
        for (auto a : alphabet) next.push_back(prefix + static_cast<char32_t>(a));
      fillers_.push_back(next);
      layer = std::move(next);
    }
  }

  template <typename OnNew>
  void run(const Letters& start, OnNew&& on_new) {
    seed(start, on_new);
    while (expand_next(on_new)) {
    }
  }

  template <typename OnNew>
  void seed(const Letters& start, OnNew& on_new) {
    if (add(start, kRoot, {}) && on_new(0)) stopped_ = true;
  }

  /// Expands the next queued node; false once stopped or the queue is empty.
  template <typename OnNew>
  bool expand_next(OnNew& on_new) {
    if (stopped_ || head_ >= nodes_.size()) return false;
    expand(head_++, on_new);
    return !stopped_;
  }

  std::optional<std::size_t> find(const Letters& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }
  std::size_t pruned() const { return pruned_; }

 private:
  bool add(const Letters& word, std::size_t parent, DerivationStep step) {
    if (index_.contains(word)) return false;
    if (*count_ >= budget_.max_nodes) {
      exhausted_ = true;
      stopped_ = true;
      return false;
    }
    index_.emplace(word, nodes_.size());
    nodes_.push_back({word, parent, std::move(step)});
    ++*count_;
    return true;
  }

  template <typename OnNew>
  void expand(std::size_t id, OnNew& on_new) {
    const Letters subject = nodes_[id].word;
    for (std::size_t pos = 0; pos < subject.size() && !stopped_; ++pos) {
      for (const auto& rule : rules_) {
        if (stopped_) return;
        // Matches that agree on the span and on the result's bound variables
        // produce the same rewrites.
        std::set<std::pair<std::size_t, Letters>> seen;
        std::unordered_map<char32_t, Letters> binding;
        match(rule, subject, pos, 0, pos, binding, [&](std::size_t end) {
          Letters key;
          for (auto c : rule.result)
            if (auto it = binding.find(c); it != binding.end()) key += it->second + U'\0';
          if (seen.emplace(end, std::move(key)).second)
            emit(rule, subject, pos, end, binding, id, on_new);
        });
      }
    }
  }

  template <typename Found>
  void match(const Rule& rule, const Letters& subject, std::size_t start, std::size_t p,
             std::size_t cur, std::unordered_map<char32_t, Letters>& binding, Found&& found) {
    if (stopped_) return;
    if (p == rule.pattern.size()) {
      found(cur);
      return;
    }
    const char32_t letter = rule.pattern[p];
    if (auto it = binding.find(letter); it != binding.end()) {
      const Letters& block = it->second;
      if (cur + block.size() <= subject.size() &&
          subject.compare(cur, block.size(), block) == 0)
        match(rule, subject, start, p + 1, cur + block.size(), binding, found);
      return;
    }
    const std::size_t longest = std::min(budget_.max_subst_len, subject.size() - cur);
    for (std::size_t len = 1; len <= longest; ++len) {
      binding[letter] = subject.substr(cur, len);
      match(rule, subject, start, p + 1, cur + len, binding, found);
      binding.erase(letter);
      if (stopped_) return;
    }
  }

  template <typename OnNew>
  void emit(const Rule& rule, const Letters& subject, std::size_t start, std::size_t end,
            std::unordered_map<char32_t, Letters>& binding, std::size_t parent,
            OnNew& on_new) {
    std::size_t fixed = subject.size() - (end - start);
    std::unordered_map<char32_t, std::size_t> occurrences;
    for (auto c : rule.result) {
      if (auto it = binding.find(c); it != binding.end()) fixed += it->second.size();
      else ++occurrences[c];
    }
    if (fixed > budget_.max_word_len) {
      ++pruned_;
      return;
    }
    instantiate(rule, subject, start, end, binding, occurrences, 0,
                budget_.max_word_len - fixed, parent, on_new);
  }

  template <typename OnNew>
  void instantiate(const Rule& rule, const Letters& subject, std::size_t start,
                   std::size_t end, std::unordered_map<char32_t, Letters>& binding,
                   const std::unordered_map<char32_t, std::size_t>& occurrences,
                   std::size_t k, std::size_t room, std::size_t parent, OnNew& on_new) {
    if (stopped_) return;
    if (k == rule.free.size()) {
      Letters next = subject.substr(0, start);
      for (auto c : rule.result) next += binding.at(c);
      next += subject.substr(end);
      DerivationStep step{Word(), rule.axiom, rule.reversed, start};
      if (add(next, parent, std::move(step)) && on_new(nodes_.size() - 1)) stopped_ = true;
      return;
    }
    const char32_t var = static_cast<char32_t>(rule.free[k]);
    const std::size_t count = occurrences.at(var);
    const std::size_t remaining_min = [&] {
      std::size_t m = 0;
      for (std::size_t j = k + 1; j < rule.free.size(); ++j)
        m += occurrences.at(static_cast<char32_t>(rule.free[j]));
      return m;
    }();
    bool placed = false;
    for (std::size_t len = 1; len <= fillers_.size(); ++len) {
      if (count * len + remaining_min > room) break;
      for (const auto& filler : fillers_[len - 1]) {
        placed = true;
        binding[var] = filler;
        instantiate(rule, subject, start, end, binding, occurrences, k + 1, room - count * len,
                    parent, on_new);
        if (stopped_) break;
      }
      if (stopped_) break;
    }
    binding.erase(var);
    if (!placed) ++pruned_;
  }

  std::vector<Rule> rules_;
  Budget budget_;
  std::size_t own_count_ = 0;
  std::size_t* count_;
  std::size_t head_ = 0;
  std::vector<std::vector<Letters>> fillers_;
  std::vector<Node> nodes_;
  std::unordered_map<Letters, std::size_t> index_;
  bool exhausted_ = false;
  bool stopped_ = false;
  std::size_t pruned_ = 0;
};

std::vector<VarIndex> alphabet_of(const Word& a, const Word& b) {
  auto vars = a.variables();
  auto more = b.variables();
  vars.insert(more.begin(), more.end());
  return {vars.begin(), vars.end()};
}

}  // namespace

Verdict derive(const Presentation& pres, const Identity& goal, const Budget& budget) {
  Verdict verdict;
  verdict.goal = goal;
  if (goal.lhs == goal.rhs) {
    verdict.status = Status::Proved;
    verdict.derivation = Derivation{goal.lhs, {}};
    verdict.used.nodes_visited = 1;
    return verdict;
  }
  // Both ends of a derivation are subject to the word length cap.
  if (goal.lhs.length() > budget.max_word_len || goal.rhs.length() > budget.max_word_len) {
    verdict.status = Status::Unknown;
    verdict.used.rewrites_pruned_by_length = 1;
    return verdict;
  }
  // Variables outside the goal can always be renamed into it, so free
  // variables are instantiated over the goal's own letters. The search runs
  // from both sides at once and stops where the two closures meet.
  const auto alphabet = alphabet_of(goal.lhs, goal.rhs);
  std::size_t count = 0;
  Rewriter forward(pres, budget, alphabet, &count);
  Rewriter backward(pres, budget, alphabet, &count);
  std::optional<std::pair<std::size_t, std::size_t>> meet;
  auto on_forward = [&](std::size_t id) {
    if (auto other = backward.find(forward.nodes()[id].word)) meet.emplace(id, *other);
    return meet.has_value();
  };
  auto on_backward = [&](std::size_t id) {
    if (auto other = forward.find(backward.nodes()[id].word)) meet.emplace(*other, id);
    return meet.has_value();
  };
  forward.seed(to_letters(goal.lhs), on_forward);
  backward.seed(to_letters(goal.rhs), on_backward);
  // A side whose queue runs dry holds its full bounded closure, so the
  // search can end there.
  while (!meet && forward.expand_next(on_forward) && !meet &&
         backward.expand_next(on_backward)) {
  }
  verdict.used.nodes_visited = count;
  verdict.used.node_budget_exhausted = forward.exhausted() || backward.exhausted();
  verdict.used.rewrites_pruned_by_length = forward.pruned() + backward.pruned();
  if (!meet) {
    verdict.status = Status::Unknown;
    return verdict;
  }
  std::vector<DerivationStep> steps;
  for (std::size_t id = meet->first; forward.nodes()[id].parent != kRoot;
       id = forward.nodes()[id].parent) {
    DerivationStep step = forward.nodes()[id].step;
    step.word = to_word(forward.nodes()[id].word);
    steps.push_back(std::move(step));
  }
  std::reverse(steps.begin(), steps.end());
  // Backward steps are replayed in the opposite orientation.
  for (std::size_t id = meet->second; backward.nodes()[id].parent != kRoot;
       id = backward.nodes()[id].parent) {
    DerivationStep step = backward.nodes()[id].step;
    step.reversed = !step.reversed;
    step.word = to_word(backward.nodes()[backward.nodes()[id].parent].word);
    steps.push_back(std::move(step));
  }
  verdict.status = Status::Proved;
  verdict.derivation = Derivation{goal.lhs, std::move(steps)};
  return verdict;
}

std::vector<Word> reachable_words(const Presentation& pres, const Word& start,
                                  const Budget& budget) {
  return reachable_words(pres, start, budget, [](const Word&) { return false; });
}

std::vector<Word> reachable_words(const Presentation& pres, const Word& start,
                                  const Budget& budget,
                                  const std::function<bool(const Word&)>& stop) {
  Rewriter rewriter(pres, budget, alphabet_of(start, start));
  rewriter.run(to_letters(start),
               [&](std::size_t id) { return stop(to_word(rewriter.nodes()[id].word)); });
  std::vector<Word> out;
  out.reserve(rewriter.nodes().size());
  for (const auto& n : rewriter.nodes()) out.push_back(to_word(n.word));
  return out;
}

Verdict decide(const Presentation& pres, const Identity& goal, const Budget& budget,
               unsigned max_order) {
  Verdict proved = derive(pres, goal, budget);
  if (proved.status == Status::Proved) return proved;
  Verdict refuted = refute(pres, goal, max_order);
  refuted.used.nodes_visited = proved.used.nodes_visited;
  refuted.used.node_budget_exhausted = proved.used.node_budget_exhausted;
  refuted.used.rewrites_pruned_by_length = proved.used.rewrites_pruned_by_length;
  return refuted;
}

}  // namespace hypsub
