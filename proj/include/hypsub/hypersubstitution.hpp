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

#ifndef HYPSUB_HYPERSUBSTITUTION_HPP
#define HYPSUB_HYPERSUBSTITUTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hypsub/term.hpp"

namespace hypsub {

/// A total map from the symbols of a signature to terms, where the image of
/// an n-ary symbol only uses x1..xn. Images may be bare variables.
class Hypersubstitution {
 public:
  /// Validates totality, variable bounds and symbol membership.
  Hypersubstitution(Signature sig, std::vector<Term> images);

  const Signature& signature() const { return sig_; }
  const Term& image(SymbolIndex i) const { return images_.at(i); }
  std::span<const Term> images() const { return images_; }

  /// Largest height among the images.
  unsigned image_depth() const;

  bool operator==(const Hypersubstitution&) const = default;

 private:
  Signature sig_;
  std::vector<Term> images_;
};

inline Hypersubstitution make_hypersubstitution(Signature sig,
                                                std::vector<Term> images) {
  return Hypersubstitution(std::move(sig), std::move(images));
}

/// epsilon: f_i -> f_i(x1,...,x_{n_i}).
Hypersubstitution identity_hyp(const Signature& sig);

/// The extension of `sigma` to all terms.
Term extend_apply(const Hypersubstitution& sigma, const Term& t);

/// (s1 o_h s2)(f) = extension of s1 applied to s2(f).
Hypersubstitution compose(const Hypersubstitution& s1, const Hypersubstitution& s2);

bool hyp_equal(const Hypersubstitution& s1, const Hypersubstitution& s2);

/// Parses `<symbol> -> <term>` lines, one per symbol.
Hypersubstitution parse_hypersubstitution(std::string_view text, const Signature& sig);

/// Inverse of parse_hypersubstitution; symbols in declaration order.
std::string render_hypersubstitution(const Hypersubstitution& sigma);

/// All hypersubstitutions whose images are terms of height <= max_image_depth,
/// in canonical order of the image tuples.
std::vector<Hypersubstitution> enumerate_hypersubstitutions(
    const Signature& sig, unsigned max_image_depth,
    std::size_t cap = 1'000'000);

}  // namespace hypsub

#endif  // HYPSUB_HYPERSUBSTITUTION_HPP
