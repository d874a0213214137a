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

#ifndef HYPSUB_SOLIDITY_HPP
#define HYPSUB_SOLIDITY_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hypsub/hypersubstitution.hpp"
#include "hypsub/rho.hpp"
#include "hypsub/semigroup.hpp"

namespace hypsub {

enum class SolidityStatus { Supported, Violated, Inconclusive };
std::string_view solidity_name(SolidityStatus s);

struct SolidityWitness {
  std::size_t hyp_index = 0;
  Hypersubstitution sigma;
  Identity source;  // sample identity whose bracketings were mapped
  Term lhs_bracketing;
  Term rhs_bracketing;
  Identity image;  // flattened rho-images
  Verdict verdict;  // Disproved, with the counter-model
};

struct SolidityReport {
  SolidityStatus status = SolidityStatus::Inconclusive;
  std::optional<SolidityWitness> witness;
  std::vector<Identity> identities_checked;  // associativity first
  std::size_t checks = 0;
  std::size_t unknown = 0;
  std::optional<Identity> first_unknown;
};

/// For every sample identity (associativity xyz = xyz is always added first),
/// every pair of bracketings of its sides and every sigma: maps both terms by
/// rho, flattens and decides the resulting identity. Returns the first
/// Disproved check as Violated, Supported when every check is Proved, and
/// Inconclusive otherwise.
SolidityReport check_rho_solidity(const Presentation& pres, RhoKind kind,
                                  std::span<const Hypersubstitution> hyps,
                                  std::span<const Identity> sample, const Budget& budget = {},
                                  unsigned max_order = kMaxModelOrder);

/// Decides x1...x_{n+1} = x_{n+2}...x_{2n+2}; for n >= 1 this holds exactly
/// when the variety is gamma_n-solid.
Verdict classify_gamma_solid(const Presentation& pres, unsigned n, const Budget& budget = {},
                             unsigned max_order = kMaxModelOrder);

/// Identity x1...x_{n+1} = x_{n+2}...x_{2n+2}.
Identity gamma_solidity_identity(unsigned n);

enum class Trigger { Triggered, NotTriggered, Unsettled };
enum class Conclusion { Supported, NotSupported, Inconclusive };
std::string_view trigger_name(Trigger t);
std::string_view conclusion_name(Conclusion c);

struct CriteriaReport {
  Verdict condition_i;                     // xyz = zxy
  Trigger trigger = Trigger::Unsettled;
  std::optional<Identity> trigger_witness;
  std::optional<Verdict> condition_ii;     // decided unless NotTriggered
  std::vector<Identity> scanned_axioms;
  Word closure_start;
  std::vector<Word> closure;  // explored from closure_start until a trigger
  Conclusion conclusion = Conclusion::Inconclusive;
};

/// Membership criteria for Bij(2)-sa-solidity. Condition (ii) fires on an
/// identity s = t with cv(s) = c(s) = 3 whose other side differs in length,
/// content size or variable set; it is searched for among the axioms and the
/// bounded closure of x1x2x3. It is settled as not firing only when every
/// axiom is balanced (same letters with multiplicity on both sides).
CriteriaReport check_bij2_sa_criteria(const Presentation& pres, const Budget& budget = {},
                                      unsigned max_order = kMaxModelOrder);

/// Same shape for Bij(2)-fa-solidity with width 2 and xy = yx.
CriteriaReport check_bij2_fa_criteria(const Presentation& pres, const Budget& budget = {},
                                      unsigned max_order = kMaxModelOrder);

}  // namespace hypsub

#endif  // HYPSUB_SOLIDITY_HPP
