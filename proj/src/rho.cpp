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

#include "hypsub/rho.hpp"

#include <charconv>

#include "hypsub/error.hpp"

namespace hypsub {

RhoKind parse_rho(std::string_view text) {
  if (text == "ext") return RhoKind::extension();
  if (text == "fa") return RhoKind::fa();
  if (text == "sa") return RhoKind::sa();
  constexpr std::string_view prefix = "gamma:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size())
      return RhoKind::gamma(n);
  }
  detail::fail<ParseError>("unknown rho kind '", text, "' (expected ext|fa|sa|gamma:<n>)");
}

std::string render_rho(RhoKind kind) {
  switch (kind.tag) {
    case RhoKind::Tag::Extension: return "ext";
    case RhoKind::Tag::Fa: return "fa";
    case RhoKind::Tag::Sa: return "sa";
    case RhoKind::Tag::Gamma: return "gamma:" + std::to_string(kind.levels);
  }
  return {};
}

namespace {

enum class Parity { First, Second };

// fa at Parity::First, sa at Parity::Second; each level flips.
Term alternate(const Hypersubstitution& sigma, const Term& t, Parity parity) {
  if (t.is_var()) return t;
  const Parity below = parity == Parity::First ? Parity::Second : Parity::First;
  std::vector<Term> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(alternate(sigma, c, below));
  if (parity == Parity::First) return superpose(sigma.image(t.symbol()), children);
  return Term::app(t.symbol(), std::move(children));
}

Term gamma(const Hypersubstitution& sigma, const Term& t, unsigned n) {
  if (n == 0) return extend_apply(sigma, t);
  if (t.is_var()) return t;
  std::vector<Term> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(gamma(sigma, c, n - 1));
  return Term::app(t.symbol(), std::move(children));
}

}  // namespace

Term apply_rho(RhoKind kind, const Hypersubstitution& sigma, const Term& t) {
  switch (kind.tag) {
    case RhoKind::Tag::Extension: return extend_apply(sigma, t);
    case RhoKind::Tag::Fa: return alternate(sigma, t, Parity::First);
    case RhoKind::Tag::Sa: return alternate(sigma, t, Parity::Second);
    case RhoKind::Tag::Gamma: return gamma(sigma, t, kind.levels);
  }
  return t;
}

std::vector<TermIdentity> generate_F(unsigned m, VarIndex padding, unsigned cap_exponent) {
  if (m > cap_exponent)
    detail::fail<CapExceeded>("F_", m, " has 2^", m, " identities, above the cap 2^",
                              cap_exponent);
  auto f = [](Term a, Term b) { return Term::app(0, {std::move(a), std::move(b)}); };
  const Term x = Term::var(1), y = Term::var(2), z = Term::var(3), w = Term::var(padding);
  std::vector<TermIdentity> current{{f(f(x, y), z), f(x, f(y, z))}};
  for (unsigned k = 0; k < m; ++k) {
    std::vector<TermIdentity> next;
    next.reserve(current.size() * 2);
    for (const auto& id : current) next.push_back({f(id.lhs, w), f(id.rhs, w)});
    for (const auto& id : current) next.push_back({f(w, id.lhs), f(w, id.rhs)});
    current = std::move(next);
  }
  return current;
}

bool check_gamma_homomorphism(const Hypersubstitution& s1, const Hypersubstitution& s2,
                              unsigned n, std::span<const Term> sample) {
  const auto composed = compose(s1, s2);
  const auto kind = RhoKind::gamma(n);
  for (const auto& t : sample) {
    if (!(apply_rho(kind, composed, t) == apply_rho(kind, s1, apply_rho(kind, s2, t))))
      return false;
  }
  return true;
}

Term gamma_witness(const Signature& sig, SymbolIndex symbol, unsigned p) {
  const unsigned arity = sig.arity(symbol);
  std::vector<Term> vars;
  for (VarIndex k = 1; k <= arity; ++k) vars.push_back(Term::var(k));
  Term t = Term::app(symbol, vars);
  for (unsigned i = 0; i < p; ++i) {
    auto children = vars;
    children[0] = t;
    t = Term::app(symbol, std::move(children));
  }
  return t;
}

}  // namespace hypsub
