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

#include "hypsub/solidity.hpp"

#include <algorithm>
#include <map>

#include "hypsub/error.hpp"

namespace hypsub {

std::string_view solidity_name(SolidityStatus s) {
  switch (s) {
    case SolidityStatus::Supported: return "Supported";
    case SolidityStatus::Violated: return "Violated";
    case SolidityStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view trigger_name(Trigger t) {
  switch (t) {
    case Trigger::Triggered: return "triggered";
    case Trigger::NotTriggered: return "not triggered";
    case Trigger::Unsettled: return "unsettled";
  }
  return "unsettled";
}

std::string_view conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::Supported: return "Supported";
    case Conclusion::NotSupported: return "NotSupported";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

SolidityReport check_rho_solidity(const Presentation& pres, RhoKind kind,
                                  std::span<const Hypersubstitution> hyps,
                                  std::span<const Identity> sample, const Budget& budget,
                                  unsigned max_order) {
  const Signature sig = semigroup_signature();
  for (const auto& h : hyps)
    if (!(h.signature() == sig))
      detail::fail<ValidationError>("rho-solidity needs hypersubstitutions of type (2)");

  SolidityReport report;
  const Identity associativity{word_of_range(1, 3), word_of_range(1, 3)};
  report.identities_checked.push_back(associativity);
  for (const auto& id : sample)
    if (std::find(report.identities_checked.begin(), report.identities_checked.end(), id) ==
        report.identities_checked.end())
      report.identities_checked.push_back(id);

  // Keyed on the unordered pair of sides.
  std::map<std::pair<Word, Word>, Verdict> cache;
  auto lookup = [&](const Identity& goal) -> const Verdict& {
    auto key = goal.lhs < goal.rhs ? std::pair{goal.lhs, goal.rhs} : std::pair{goal.rhs, goal.lhs};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, decide(pres, goal, budget, max_order)).first;
    return it->second;
  };

  for (const auto& id : report.identities_checked) {
    const auto lefts = bracketings(id.lhs);
    const auto rights = bracketings(id.rhs);
    for (const auto& bl : lefts) {
      for (const auto& br : rights) {
        for (std::size_t h = 0; h < hyps.size(); ++h) {
          ++report.checks;
          Identity image{term_to_word(apply_rho(kind, hyps[h], bl), sig),
                         term_to_word(apply_rho(kind, hyps[h], br), sig)};
          if (image.lhs == image.rhs) continue;
          const Verdict& v = lookup(image);
          if (v.status == Status::Disproved) {
            Verdict oriented = v;
            if (!(v.goal == image)) {
              oriented.goal = image;
              if (oriented.counter_model)
                std::swap(oriented.counter_model->lhs_value, oriented.counter_model->rhs_value);
            }
            report.status = SolidityStatus::Violated;
            report.witness = SolidityWitness{h, hyps[h], id, bl, br, image, std::move(oriented)};
            return report;
          }
          if (v.status == Status::Unknown) {
            ++report.unknown;
            if (!report.first_unknown) report.first_unknown = image;
          }
        }
      }
    }
  }
  report.status = report.unknown == 0 ? SolidityStatus::Supported : SolidityStatus::Inconclusive;
  return report;
}

Identity gamma_solidity_identity(unsigned n) {
  return {word_of_range(1, n + 1), word_of_range(n + 2, 2 * n + 2)};
}

Verdict classify_gamma_solid(const Presentation& pres, unsigned n, const Budget& budget,
                             unsigned max_order) {
  if (n == 0) detail::fail<ValidationError>("gamma-solidity classification needs n >= 1");
  return decide(pres, gamma_solidity_identity(n), budget, max_order);
}

namespace {

bool balanced(const Identity& id) {
  std::vector<VarIndex> a(id.lhs.letters().begin(), id.lhs.letters().end());
  std::vector<VarIndex> b(id.rhs.letters().begin(), id.rhs.letters().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool fires(const Word& s, const Word& t, std::size_t width) {
  if (s.length() != width || s.variable_count() != width) return false;
  return t.length() != width || t.variable_count() != width || t.variables() != s.variables();
}

CriteriaReport check_criteria(const Presentation& pres, std::size_t width,
                              const Identity& condition_ii_goal, const Budget& budget,
                              unsigned max_order) {
  CriteriaReport report;
  const Identity condition_i_goal{word_of_range(1, 3), Word({3, 1, 2})};
  report.condition_i = decide(pres, condition_i_goal, budget, max_order);

  for (const auto& ax : pres.axioms()) {
    report.scanned_axioms.push_back(ax);
    if (report.trigger_witness) continue;
    if (fires(ax.lhs, ax.rhs, width)) report.trigger_witness = ax;
    else if (fires(ax.rhs, ax.lhs, width)) report.trigger_witness = Identity{ax.rhs, ax.lhs};
  }

  report.closure_start = word_of_range(1, static_cast<VarIndex>(width));
  // The closure is explored only while no trigger is known.
  const Word& start = report.closure_start;
  const bool scan = !report.trigger_witness;
  report.closure = reachable_words(pres, start, budget, [&](const Word& w) {
    return !scan || fires(start, w, width);
  });
  if (scan && fires(start, report.closure.back(), width))
    report.trigger_witness = Identity{start, report.closure.back()};

  if (report.trigger_witness) {
    report.trigger = Trigger::Triggered;
  } else if (std::all_of(pres.axioms().begin(), pres.axioms().end(), balanced)) {
    // Balanced axioms only derive balanced identities, which never fire.
    report.trigger = Trigger::NotTriggered;
  } else {
    report.trigger = Trigger::Unsettled;
  }
  if (report.trigger != Trigger::NotTriggered)
    report.condition_ii = decide(pres, condition_ii_goal, budget, max_order);

  const Status first = report.condition_i.status;
  const Status second = report.condition_ii ? report.condition_ii->status : Status::Proved;
  if (first == Status::Disproved ||
      (report.trigger == Trigger::Triggered && second == Status::Disproved)) {
    report.conclusion = Conclusion::NotSupported;
  } else if (first == Status::Proved && second == Status::Proved) {
    report.conclusion = Conclusion::Supported;
  } else {
    report.conclusion = Conclusion::Inconclusive;
  }
  return report;
}

}  // namespace

CriteriaReport check_bij2_sa_criteria(const Presentation& pres, const Budget& budget,
                                      unsigned max_order) {
  return check_criteria(pres, 3, Identity{word_of_range(1, 3), Word({1, 3, 2})}, budget,
                        max_order);
}

CriteriaReport check_bij2_fa_criteria(const Presentation& pres, const Budget& budget,
                                      unsigned max_order) {
  return check_criteria(pres, 2, Identity{word_of_range(1, 2), Word({2, 1})}, budget,
                        max_order);
}

}  // namespace hypsub
