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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "fixtures.hpp"
#include "hypsub/bijection.hpp"
#include "hypsub/error.hpp"

using namespace hypsub;
using fixtures::hyp;
using fixtures::term;

namespace {

bool is_violation(const OracleVerdict& v) {
  return !std::holds_alternative<ConsistentWithBijective>(v);
}

// Checks that the extension permutes the universe while keeping depth,
// length and variable set.
void require_bijection_on_universe(const Hypersubstitution& sigma, unsigned depth,
                                   VarIndex vars) {
  const auto universe = enumerate_terms(sigma.signature(), depth, vars);
  std::unordered_set<Term, TermHash> members(universe.begin(), universe.end());
  std::unordered_set<Term, TermHash> images;
  for (const auto& t : universe) {
    const Term u = extend_apply(sigma, t);
    const auto mt = metrics(t);
    const auto mu = metrics(u);
    REQUIRE(mu.depth == mt.depth);
    REQUIRE(mu.length == mt.length);
    REQUIRE(mu.varset == mt.varset);
    REQUIRE(members.contains(u));
    images.insert(u);
  }
  REQUIRE(images.size() == universe.size());
}

}  // namespace

TEST_CASE("bij_certificate") {
  auto cd = bij_certificate(fixtures::sigma_d());
  REQUIRE(cd);
  CHECK(cd->symbol_map == std::vector<SymbolIndex>{0});
  CHECK(cd->permutations == std::vector<std::vector<VarIndex>>{{2, 1}});

  CHECK_FALSE(bij_certificate(fixtures::sigma_x()));
  CHECK_FALSE(bij_certificate(hyp("f -> f(x1,x1)")));
  CHECK_FALSE(bij_certificate(hyp("f -> f(f(x1,x2),x2)")));

  const auto sig22 = fixtures::type22();
  auto c7 = bij_certificate(fixtures::bij22_table()[6]);
  REQUIRE(c7);
  CHECK(c7->symbol_map == std::vector<SymbolIndex>{1, 0});
  CHECK(c7->permutations == std::vector<std::vector<VarIndex>>{{2, 1}, {1, 2}});
  CHECK(render_certificate(*c7, sig22) == "h: f->g g->f\np(f): 2 1\np(g): 1 2\n");

  // Both symbols sent to g: not a bijection on symbols.
  CHECK_FALSE(bij_certificate(hyp("f -> g(x1,x2)\ng -> g(x2,x1)", sig22)));
  // Arity must be preserved by h.
  const auto sig21 = parse_signature("f 2\ng 1");
  CHECK_FALSE(bij_certificate(hyp("f -> f(x1,x2)\ng -> f(x1,x1)", sig21)));
}

TEST_CASE("invert") {
  const auto eps = identity_hyp(fixtures::type2());
  CHECK(invert(eps) == eps);
  CHECK(invert(fixtures::sigma_d()) == fixtures::sigma_d());

  const auto s3 = fixtures::type_n(3);
  const auto cycle = hyp("f -> f(x2,x3,x1)", s3);
  const auto inv = invert(cycle);
  CHECK(inv == hyp("f -> f(x3,x1,x2)", s3));
  CHECK(compose(inv, cycle) == identity_hyp(s3));

  const auto table = fixtures::bij22_table();
  CHECK(invert(table[6]) == hyp("f -> g(x1,x2)\ng -> f(x2,x1)", fixtures::type22()));

  CHECK_THROWS_AS(invert(fixtures::sigma_x()), ValidationError);
}

TEST_CASE("enumerate_bijective") {
  const auto b2 = enumerate_bijective(fixtures::type2());
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == identity_hyp(fixtures::type2()));
  CHECK(b2[1] == fixtures::sigma_d());

  CHECK(enumerate_bijective(fixtures::type22()) == fixtures::bij22_table());
  CHECK(enumerate_bijective(fixtures::type_n(3)).size() == 6);
  CHECK(enumerate_bijective(fixtures::type_n(4)).size() == 24);
  // (2,2,1): 2! * 1! classes, 2*2*1 permutations.
  CHECK(enumerate_bijective(parse_signature("f 2\ng 2\nh 1")).size() == 8);
  // (2,3,2): class {f,h} of arity 2 and {g} of arity 3.
  CHECK(enumerate_bijective(parse_signature("f 2\ng 3\nh 2")).size() == 2 * 2 * 6 * 2);
  CHECK_THROWS_AS(enumerate_bijective(fixtures::type_n(4), 10), CapExceeded);

  for (const auto& sig : {fixtures::type2(), fixtures::type22(), fixtures::type_n(3)}) {
    const auto all = enumerate_bijective(sig);
    std::set<std::string> rendered;
    for (const auto& s : all) {
      REQUIRE(bij_certificate(s));
      rendered.insert(render_hypersubstitution(s));
    }
    CHECK(rendered.size() == all.size());
  }
}

TEST_CASE("oracle_bijectivity_bounded examples") {
  CHECK(std::holds_alternative<ConsistentWithBijective>(
      oracle_bijectivity_bounded(fixtures::sigma_d(), 3, 3)));

  auto diag = oracle_bijectivity_bounded(hyp("f -> f(x1,x1)"), 2, 2);
  auto* inj = std::get_if<InjectivityViolated>(&diag);
  REQUIRE(inj);
  CHECK(inj->first == term("f(x1,x1)"));
  CHECK(inj->second == term("f(x1,x2)"));
  CHECK(inj->common_image == term("f(x1,x1)"));

  auto proj = oracle_bijectivity_bounded(fixtures::sigma_x(), 2, 2);
  auto* pinj = std::get_if<InjectivityViolated>(&proj);
  REQUIRE(pinj);
  CHECK(pinj->first == term("x1"));
  CHECK(pinj->second == term("f(x1,x1)"));
  CHECK(pinj->common_image == term("x1"));

  // Injective but misses f(x1,x2).
  auto deep = oracle_bijectivity_bounded(hyp("f -> f(f(x1,x2),x2)"), 3, 2);
  auto* gap = std::get_if<SurjectivityGapWithinBound>(&deep);
  REQUIRE(gap);
  CHECK(gap->target == term("f(x1,x1)"));
}

TEST_CASE("certificate soundness on bounded universes") {
  for (const auto& s : enumerate_bijective(fixtures::type2())) require_bijection_on_universe(s, 3, 3);
  for (const auto& s : enumerate_bijective(fixtures::type_n(3))) require_bijection_on_universe(s, 2, 3);
  for (const auto& s : enumerate_bijective(fixtures::type22())) require_bijection_on_universe(s, 2, 3);
}

TEST_CASE("inverse law") {
  for (const auto& sig : {fixtures::type2(), fixtures::type22(), fixtures::type_n(3)}) {
    const auto eps = identity_hyp(sig);
    for (const auto& s : enumerate_bijective(sig)) {
      const auto inv = invert(s);
      REQUIRE(compose(inv, s) == eps);
      REQUIRE(compose(s, inv) == eps);
    }
  }
}

TEST_CASE("Bij is closed under composition") {
  for (const auto& sig : {fixtures::type2(), fixtures::type22(), fixtures::type_n(3)}) {
    const auto all = enumerate_bijective(sig);
    for (const auto& a : all)
      for (const auto& b : all) REQUIRE(bij_certificate(compose(a, b)));
  }
}

TEST_CASE("certificate agrees with the oracle for type (2), image depth <= 2") {
  std::size_t certified = 0;
  for (const auto& s : enumerate_hypersubstitutions(fixtures::type2(), 2)) {
    if (bij_certificate(s)) {
      ++certified;
      REQUIRE_FALSE(is_violation(oracle_bijectivity_bounded(s, 3, 3)));
    } else {
      REQUIRE(is_violation(oracle_bijectivity_bounded(s, 4, 2)));
    }
  }
  CHECK(certified == 2);
}
