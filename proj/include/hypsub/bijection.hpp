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

#ifndef HYPSUB_BIJECTION_HPP
#define HYPSUB_BIJECTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypsub/hypersubstitution.hpp"

namespace hypsub {

/// Witness that a hypersubstitution has the form
///   sigma(f_i) = h(f_i)(x_{p(i)(1)}, ..., x_{p(i)(n_i)})
/// with h an arity-preserving bijection of the symbols and each p(i) a
/// permutation of 1..n_i.
struct BijCertificate {
  std::vector<SymbolIndex> symbol_map;            // h
  std::vector<std::vector<VarIndex>> permutations;  // p(i), 1-based values

  bool operator==(const BijCertificate&) const = default;
};

/// Present exactly when sigma's extension is a bijection on all terms.
std::optional<BijCertificate> bij_certificate(const Hypersubstitution& sigma);

/// Throws ValidationError if sigma is not bijective.
Hypersubstitution invert(const Hypersubstitution& sigma);

/// All bijective hypersubstitutions: h ranges over products of per-arity-class
/// permutations (outer loop), then per-symbol variable permutations with the
/// last symbol varying fastest.
std::vector<Hypersubstitution> enumerate_bijective(const Signature& sig,
                                                   std::size_t cap = 1'000'000);

std::string render_certificate(const BijCertificate& cert, const Signature& sig);

// Bounded oracle -------------------------------------------------------------

struct ConsistentWithBijective {};
struct InjectivityViolated {
  Term first;
  Term second;
  Term common_image;
};
struct SurjectivityGapWithinBound {
  Term target;
};

using OracleVerdict =
    std::variant<ConsistentWithBijective, InjectivityViolated, SurjectivityGapWithinBound>;

/// Applies the extension of sigma to the bounded term universe, depth by depth.
/// A collision is reported as an injectivity violation (first pair in
/// canonical order); a target of depth <= d - D (D = image depth) with no
/// preimage in the depth-d universe is reported as a surjectivity gap.
/// "Consistent" is inconclusive; violations are not.
OracleVerdict oracle_bijectivity_bounded(const Hypersubstitution& sigma,
                                         unsigned max_depth, VarIndex max_var,
                                         std::size_t cap = kDefaultTermCap);

}  // namespace hypsub

#endif  // HYPSUB_BIJECTION_HPP
