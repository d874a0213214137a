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

#include "hypsub/bijection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "hypsub/error.hpp"

namespace hypsub {

std::optional<BijCertificate> bij_certificate(const Hypersubstitution& sigma) {
  const auto& sig = sigma.signature();
  BijCertificate cert;
  std::vector<bool> hit(sig.size(), false);
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    const Term& img = sigma.image(i);
    if (img.is_var()) return std::nullopt;
    const SymbolIndex j = img.symbol();
    if (sig.arity(j) != sig.arity(i) || hit[j]) return std::nullopt;
    hit[j] = true;
    std::vector<VarIndex> perm;
    std::vector<bool> used(sig.arity(i) + 1, false);
    for (const auto& c : img.children()) {
      if (!c.is_var() || used[c.var_index()]) return std::nullopt;
      used[c.var_index()] = true;
      perm.push_back(c.var_index());
    }
    cert.symbol_map.push_back(j);
    cert.permutations.push_back(std::move(perm));
  }
  return cert;
}

Hypersubstitution invert(const Hypersubstitution& sigma) {
  auto cert = bij_certificate(sigma);
  if (!cert) detail::fail<ValidationError>("hypersubstitution is not bijective");
  const auto& sig = sigma.signature();
  std::vector<std::optional<Term>> images(sig.size());
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    const auto& p = cert->permutations[i];
    std::vector<Term> children(p.size(), Term::var(1));
    for (std::size_t k = 0; k < p.size(); ++k)
      children[p[k] - 1] = Term::var(static_cast<VarIndex>(k + 1));
    images[cert->symbol_map[i]] = Term::app(i, std::move(children));
  }
  std::vector<Term> out;
  for (auto& img : images) out.push_back(std::move(*img));
  return Hypersubstitution(sig, std::move(out));
}

std::vector<Hypersubstitution> enumerate_bijective(const Signature& sig, std::size_t cap) {
  // Arity classes in order of first occurrence.
  std::vector<std::vector<SymbolIndex>> classes;
  std::map<unsigned, std::size_t> class_of_arity;
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    auto [it, fresh] = class_of_arity.try_emplace(sig.arity(i), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(i);
  }

  std::size_t total = 1;
  auto multiply_factorial = [&](std::size_t n) {
    for (std::size_t k = 2; k <= n; ++k) {
      if (total > cap / k)
        detail::fail<CapExceeded>("Bij enumeration exceeds cap ", cap);
      total *= k;
    }
  };
  for (const auto& c : classes) multiply_factorial(c.size());
  for (const auto& s : sig.symbols()) multiply_factorial(s.arity);

  std::vector<Hypersubstitution> out;
  out.reserve(total);

  std::vector<std::vector<SymbolIndex>> class_perm = classes;
  std::vector<std::vector<VarIndex>> var_perm(sig.size());

  auto emit = [&] {
    std::vector<SymbolIndex> h(sig.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t k = 0; k < classes[c].size(); ++k)
        h[classes[c][k]] = class_perm[c][k];
    std::vector<Term> images;
    for (SymbolIndex i = 0; i < sig.size(); ++i) {
      std::vector<Term> children;
      for (VarIndex v : var_perm[i]) children.push_back(Term::var(v));
      images.push_back(Term::app(h[i], std::move(children)));
    }
    out.emplace_back(sig, std::move(images));
  };

  auto reset_vars = [&](SymbolIndex from) {
    for (SymbolIndex i = from; i < sig.size(); ++i) {
      var_perm[i].resize(sig.arity(i));
      std::iota(var_perm[i].begin(), var_perm[i].end(), VarIndex{1});
    }
  };

  // Odometers: classes (first class outermost), then symbols (last fastest).
  while (true) {
    reset_vars(0);
    while (true) {
      emit();
      std::size_t k = sig.size();
      while (k > 0 && !std::next_permutation(var_perm[k - 1].begin(), var_perm[k - 1].end()))
        --k;
      if (k == 0) break;
    }
    std::size_t c = classes.size();
    while (c > 0 && !std::next_permutation(class_perm[c - 1].begin(), class_perm[c - 1].end()))
      --c;
    if (c == 0) break;
  }
  return out;
}

std::string render_certificate(const BijCertificate& cert, const Signature& sig) {
  std::string out = "h:";
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    out += ' ';
    out += sig[i].name;
    out += "->";
    out += sig[cert.symbol_map[i]].name;
  }
  out += '\n';
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    out += "p(" + sig[i].name + "):";
    for (VarIndex v : cert.permutations[i]) out += ' ' + std::to_string(v);
    out += '\n';
  }
  return out;
}

OracleVerdict oracle_bijectivity_bounded(const Hypersubstitution& sigma,
                                         unsigned max_depth, VarIndex max_var,
                                         std::size_t cap) {
  const auto& sig = sigma.signature();
  const unsigned image_depth = sigma.image_depth();
  std::unordered_map<Term, Term, TermHash> preimage;
  std::size_t processed = 0;

  for (unsigned d = 0; d <= max_depth; ++d) {
    // Universes are prefixes of each other in canonical order.
    const auto universe = enumerate_terms(sig, d, max_var, cap);
    for (; processed < universe.size(); ++processed) {
      const Term& s = universe[processed];
      Term image = extend_apply(sigma, s);
      auto [it, fresh] = preimage.try_emplace(image, s);
      if (!fresh) return InjectivityViolated{it->second, s, image};
    }
    if (d < image_depth) continue;
    const unsigned target_depth = d - image_depth;
    for (const auto& target : universe) {
      if (target.height() > target_depth) break;
      if (!preimage.contains(target)) return SurjectivityGapWithinBound{target};
    }
  }
  return ConsistentWithBijective{};
}

}  // namespace hypsub
