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

#include "hypsub/hypersubstitution.hpp"

#include <algorithm>
#include <cctype>

#include "hypsub/error.hpp"

namespace hypsub {

namespace {

void check_symbols(const Term& t, const Signature& sig, const std::string& owner) {
  if (t.is_var()) return;
  if (t.symbol() >= sig.size())
    detail::fail<ValidationError>("image of '", owner, "' uses a symbol outside the signature");
  if (t.children().size() != sig.arity(t.symbol()))
    detail::fail<ValidationError>("image of '", owner, "' has an arity mismatch at '",
                                  sig[t.symbol()].name, "'");
  for (const auto& c : t.children()) check_symbols(c, sig, owner);
}

}  // namespace

Hypersubstitution::Hypersubstitution(Signature sig, std::vector<Term> images)
    : sig_(std::move(sig)), images_(std::move(images)) {
  if (images_.size() != sig_.size())
    detail::fail<ValidationError>("hypersubstitution must assign an image to each of ",
                                  sig_.size(), " symbols, got ", images_.size());
  for (SymbolIndex i = 0; i < sig_.size(); ++i) {
    check_symbols(images_[i], sig_, sig_[i].name);
    if (max_variable(images_[i]) > sig_.arity(i))
      detail::fail<ValidationError>("image of '", sig_[i].name, "' uses x",
                                    max_variable(images_[i]), " but the arity is ",
                                    sig_.arity(i));
  }
}

unsigned Hypersubstitution::image_depth() const {
  unsigned d = 0;
  for (const auto& t : images_) d = std::max(d, t.height());
  return d;
}

Hypersubstitution identity_hyp(const Signature& sig) {
  std::vector<Term> images;
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    std::vector<Term> vars;
    for (VarIndex k = 1; k <= sig.arity(i); ++k) vars.push_back(Term::var(k));
    images.push_back(Term::app(i, std::move(vars)));
  }
  return Hypersubstitution(sig, std::move(images));
}

Term extend_apply(const Hypersubstitution& sigma, const Term& t) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(extend_apply(sigma, c));
  return superpose(sigma.image(t.symbol()), args);
}

Hypersubstitution compose(const Hypersubstitution& s1, const Hypersubstitution& s2) {
  if (!(s1.signature() == s2.signature()))
    detail::fail<ValidationError>("cannot compose hypersubstitutions of different types");
  std::vector<Term> images;
  images.reserve(s2.images().size());
  for (const auto& img : s2.images()) images.push_back(extend_apply(s1, img));
  return Hypersubstitution(s1.signature(), std::move(images));
}

bool hyp_equal(const Hypersubstitution& s1, const Hypersubstitution& s2) {
  return s1 == s2;
}

Hypersubstitution parse_hypersubstitution(std::string_view text, const Signature& sig) {
  std::vector<std::optional<Term>> images(sig.size());
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      detail::fail<ParseError>("line ", line_no, ": expected '<symbol> -> <term>'");
    auto lhs = line.substr(0, arrow);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.front())))
      lhs.remove_prefix(1);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back())))
      lhs.remove_suffix(1);
    auto sym = sig.find(lhs);
    if (!sym) detail::fail<ParseError>("line ", line_no, ": unknown symbol '", lhs, "'");
    if (images[*sym])
      detail::fail<ParseError>("line ", line_no, ": symbol '", lhs, "' assigned twice");
    images[*sym] = parse_term(line.substr(arrow + 2), sig);
  }
  std::vector<Term> out;
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    if (!images[i])
      detail::fail<ValidationError>("no image given for symbol '", sig[i].name, "'");
    out.push_back(*images[i]);
  }
  return Hypersubstitution(sig, std::move(out));
}

std::string render_hypersubstitution(const Hypersubstitution& sigma) {
  std::string out;
  const auto& sig = sigma.signature();
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    out += sig[i].name;
    out += " -> ";
    out += render_term(sigma.image(i), sig);
    out += '\n';
  }
  return out;
}

std::vector<Hypersubstitution> enumerate_hypersubstitutions(const Signature& sig,
                                                            unsigned max_image_depth,
                                                            std::size_t cap) {
  std::vector<std::vector<Term>> choices;
  std::size_t total = 1;
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    choices.push_back(enumerate_terms(sig, max_image_depth, sig.arity(i), cap));
    if (total > cap / choices.back().size())
      detail::fail<CapExceeded>("hypersubstitution enumeration exceeds cap ", cap);
    total *= choices.back().size();
  }
  std::vector<Hypersubstitution> out;
  out.reserve(total);
  std::vector<std::size_t> idx(sig.size(), 0);
  while (true) {
    std::vector<Term> images;
    for (SymbolIndex i = 0; i < sig.size(); ++i) images.push_back(choices[i][idx[i]]);
    out.emplace_back(sig, std::move(images));
    std::size_t k = sig.size();
    while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace hypsub
