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

#ifndef HYPSUB_RHO_HPP
#define HYPSUB_RHO_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypsub/hypersubstitution.hpp"

namespace hypsub {

/// Which term map a hypersubstitution induces.
struct RhoKind {
  enum class Tag { Extension, Fa, Sa, Gamma };

  Tag tag = Tag::Extension;
  unsigned levels = 0;  // Gamma only

  static RhoKind extension() { return {Tag::Extension, 0}; }
  static RhoKind fa() { return {Tag::Fa, 0}; }
  static RhoKind sa() { return {Tag::Sa, 0}; }
  static RhoKind gamma(unsigned n) { return {Tag::Gamma, n}; }

  bool operator==(const RhoKind&) const = default;
};

/// Accepts `ext`, `fa`, `sa`, `gamma:<n>`.
RhoKind parse_rho(std::string_view text);
std::string render_rho(RhoKind kind);

/// fa superposes sigma's image at the root over sa-images of the children;
/// sa keeps the root symbol and maps the children through fa. gamma(n) keeps
/// the top n levels and applies the extension below. All kinds fix variables.
Term apply_rho(RhoKind kind, const Hypersubstitution& sigma, const Term& t);

struct TermIdentity {
  Term lhs;
  Term rhs;

  bool operator==(const TermIdentity&) const = default;
};

inline constexpr VarIndex kDefaultPadding = 4;

/// F_0 = { f(f(x,y),z) = f(x,f(y,z)) };
/// F_{m+1} = { f(s,w) = f(t,w) } followed by { f(w,s) = f(w,t) } over F_m.
std::vector<TermIdentity> generate_F(unsigned m, VarIndex padding = kDefaultPadding,
                                     unsigned cap_exponent = 20);

/// Checks gamma_n(s1 o_h s2)(t) == gamma_n(s1)(gamma_n(s2)(t)) on the sample.
bool check_gamma_homomorphism(const Hypersubstitution& s1, const Hypersubstitution& s2,
                              unsigned n, std::span<const Term> sample);

/// t_0 = f_i(x1,...,xn), t_{p+1} = f_i(t_p, x2, ..., xn).
Term gamma_witness(const Signature& sig, SymbolIndex symbol, unsigned p);

}  // namespace hypsub

#endif  // HYPSUB_RHO_HPP
