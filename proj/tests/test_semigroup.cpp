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

#include "fixtures.hpp"
#include "hypsub/error.hpp"
#include "hypsub/semigroup.hpp"
#include "oracles.hpp"

using namespace hypsub;
using fixtures::identity;
using fixtures::pres;
using fixtures::term;
using fixtures::word;

namespace {

bool holds_in_all_models(const Presentation& p, const Identity& goal, unsigned order) {
  for (const auto& m : enumerate_finite_semigroups(order)) {
    const bool model = std::all_of(p.axioms().begin(), p.axioms().end(),
                                   [&](const Identity& ax) { return satisfies(m, ax); });
    if (model && !satisfies(m, goal)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_word and render_word") {
  CHECK(word("xyz").letters().size() == 3);
  CHECK(render_word(word("xyz")) == "x1x2x3");
  CHECK(word("xy^2") == word("x1 x2 x2"));
  CHECK(word("x1x2x2") == word("xyy"));
  CHECK(word("x10 x2") == Word(std::vector<VarIndex>{10, 2}));
  CHECK(word("t") == word("u"));
  CHECK(word_of_range(2, 4) == word("yzu"));
  CHECK(word("xyx").variable_count() == 2);
  CHECK_THROWS_AS(word(""), ParseError);
  CHECK_THROWS_AS(word("xq"), ParseError);
  CHECK_THROWS_AS(word("x^0"), ParseError);
  CHECK_THROWS_AS(word("^2"), ParseError);
  CHECK_THROWS_AS(Word(std::vector<VarIndex>{}), ValidationError);
}

TEST_CASE("parse_identity and parse_presentation") {
  CHECK(identity("xy = zt") == Identity{word("xy"), word("zu")});
  CHECK(identity("xy ≈ yx") == identity("xy ~ yx"));
  CHECK(render_identity(identity("xz=xy")) == "x1x3 = x1x2");
  CHECK_THROWS_AS(identity("xy"), ParseError);
  CHECK_THROWS_AS(identity("x = y = z"), ParseError);

  const auto p = pres("# bands\nxx = x\n\nx = xx\nxy = yx  # commutative\n");
  REQUIRE(p.axioms().size() == 2);
  CHECK(p.axioms()[0] == identity("xx = x"));
  CHECK(pres("").empty());
  CHECK_THROWS_AS(pres("xx = x\nxx"), ParseError);
}

TEST_CASE("term_to_word") {
  const auto sig = fixtures::type2();
  CHECK(term_to_word(term("f(f(x,y),z)"), sig) == word("xyz"));
  CHECK(term_to_word(term("f(x,f(y,z))"), sig) == word("xyz"));
  CHECK(term_to_word(term("x"), sig) == word("x"));
  CHECK_THROWS_AS(term_to_word(term("f(x,y)", fixtures::type22()), fixtures::type22()),
                  ValidationError);
}

TEST_CASE("bracketings") {
  const auto sig = fixtures::type2();
  const auto b3 = bracketings(word("xyz"));
  REQUIRE(b3.size() == 2);
  CHECK(b3[0] == term("f(f(x,y),z)"));
  CHECK(b3[1] == term("f(x,f(y,z))"));
  CHECK(bracketings(word("xyzu")).size() == 5);
  CHECK(bracketings(word("x")) == std::vector<Term>{Term::var(1)});
  CHECK_THROWS_AS(bracketings(word("x1x2x3x4x5x6x7")), CapExceeded);

  for (std::size_t n = 1; n <= 6; ++n) {
    const Word w = word_of_range(1, static_cast<VarIndex>(n));
    const auto all = bracketings(w);
    REQUIRE(all.size() == oracle::catalan(n - 1));
    for (const auto& t : all) REQUIRE(term_to_word(t, sig) == w);
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
  for (const auto& t : bracketings(word("xyxx"))) CHECK(term_to_word(t, sig) == word("xyxx"));
}

TEST_CASE("FiniteSemigroup validation") {
  CHECK_NOTHROW(FiniteSemigroup(2, {0, 0, 1, 1}));
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 1, 0}), ValidationError);
  CHECK_THROWS_AS(FiniteSemigroup(0, {}), ValidationError);

  const FiniteSemigroup left_zero(2, {0, 0, 1, 1});
  CHECK(satisfies(left_zero, identity("xy = x")));
  CHECK(satisfies(left_zero, identity("xx = x")));
  CHECK_FALSE(satisfies(left_zero, identity("xy = yx")));
  const std::vector<unsigned> assignment{0, 1, 0};
  CHECK(evaluate(left_zero, word("xy"), assignment) == 1);
  CHECK(evaluate(left_zero, word("yx"), assignment) == 0);
}

TEST_CASE("enumerate_finite_semigroups matches the exhaustive filter") {
  const auto upto3 = enumerate_finite_semigroups(3);
  std::size_t counts[4] = {};
  for (const auto& s : upto3) ++counts[s.order()];
  for (unsigned n = 1; n <= 3; ++n) CHECK(counts[n] == oracle::brute_force_semigroup_count(n));
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 8);
  CHECK(counts[3] == 113);
  CHECK(enumerate_finite_semigroups(4).size() == 1 + 8 + 113 + 3492);
  CHECK_THROWS_AS(enumerate_finite_semigroups(5), CapExceeded);

  // Order, then row-major table.
  for (std::size_t i = 1; i < upto3.size(); ++i) {
    const auto& a = upto3[i - 1];
    const auto& b = upto3[i];
    REQUIRE((a.order() < b.order() ||
             (a.order() == b.order() &&
              std::lexicographical_compare(a.table().begin(), a.table().end(),
                                           b.table().begin(), b.table().end()))));
  }
}

TEST_CASE("derive") {
  const auto z = pres("xy = zt");
  auto v = derive(z, identity("xz = xy"));
  REQUIRE(v.status == Status::Proved);
  REQUIRE(v.derivation);
  CHECK(v.derivation->steps.size() == 1);
  CHECK(v.derivation->steps.back().word == word("xy"));

  auto cyc = derive(pres("xyz = zxy"), identity("yxz = xzy"));
  REQUIRE(cyc.status == Status::Proved);
  CHECK(cyc.derivation->steps.size() <= 2);

  for (const auto& np : fixtures::standard_presentations()) {
    auto r = derive(np.pres, identity("xyx = xyx"));
    REQUIRE(r.status == Status::Proved);
    CHECK(r.derivation->steps.empty());
  }

  auto unknown = derive(pres("xyz = zxy"), identity("xyz = xzy"));
  CHECK(unknown.status == Status::Unknown);
  CHECK_FALSE(unknown.derivation);
  // Both sides close off after their three rotations.
  CHECK(unknown.used.nodes_visited == 6);
  CHECK_FALSE(unknown.used.node_budget_exhausted);

  auto starved = derive(pres("xx = x"), identity("xyx = xyxyx"), Budget{8, 3, 2});
  CHECK(starved.status == Status::Unknown);
  CHECK(starved.used.node_budget_exhausted);
}

TEST_CASE("derivation traces replay") {
  const auto p = pres("xz = xy\nyz = xz");
  auto v = derive(p, identity("yz = xt"));
  REQUIRE(v.status == Status::Proved);
  const auto& d = *v.derivation;
  CHECK(d.start == word("yz"));
  REQUIRE(d.steps.size() == 2);
  CHECK(d.steps[0].word == word("xz"));
  CHECK(d.steps[0].axiom == 1);
  CHECK_FALSE(d.steps[0].reversed);
  CHECK(d.steps[1].word == word("xt"));
  CHECK(d.steps[1].axiom == 0);
  CHECK(d.steps[1].reversed);

  // Every step is an equality in any model of the axioms.
  for (const auto& m : enumerate_finite_semigroups(3)) {
    if (!satisfies(m, p.axioms()[0]) || !satisfies(m, p.axioms()[1])) continue;
    Word prev = d.start;
    for (const auto& step : d.steps) {
      REQUIRE(satisfies(m, Identity{prev, step.word}));
      prev = step.word;
    }
  }
}

TEST_CASE("reachable_words") {
  const auto r = reachable_words(pres("xyz = zxy"), word("xyz"));
  CHECK(r.size() == 3);
  CHECK(r.front() == word("xyz"));
  CHECK(std::find(r.begin(), r.end(), word("zxy")) != r.end());
  CHECK(std::find(r.begin(), r.end(), word("yzx")) != r.end());
  CHECK(reachable_words(pres(""), word("xy")) == std::vector<Word>{word("xy")});
}

TEST_CASE("refute") {
  auto bands = refute(pres("xx = x"), identity("xy = yx"));
  REQUIRE(bands.status == Status::Disproved);
  REQUIRE(bands.counter_model);
  CHECK(bands.counter_model->model == FiniteSemigroup(2, {0, 0, 1, 1}));
  CHECK(bands.counter_model->lhs_value != bands.counter_model->rhs_value);

  auto zero = refute(pres("xy = zt"), identity("x = y"));
  REQUIRE(zero.status == Status::Disproved);
  CHECK(zero.counter_model->model == FiniteSemigroup(2, {0, 0, 0, 0}));

  for (const char* g : fixtures::regression_goals()) {
    auto tr = refute(pres("x = y"), identity(g));
    REQUIRE(tr.status == Status::Unknown);
    CHECK(tr.used.max_order_searched == kMaxModelOrder);
  }

  auto low = refute(pres("xyz = zxy"), identity("xy = yx"), 3);
  CHECK(low.status == Status::Unknown);
}

TEST_CASE("decide") {
  CHECK(decide(pres("xy = zt"), identity("xz = xy")).status == Status::Proved);
  CHECK(decide(pres("xx = x"), identity("xy = yx")).status == Status::Disproved);

  // Regression baseline: the first refuting model has order 4.
  auto cyc = decide(pres("xyz = zxy"), identity("xy = yx"));
  REQUIRE(cyc.status == Status::Disproved);
  CHECK(cyc.counter_model->model.order() == 4);
  CHECK(decide(pres("xyz = zxy"), identity("xy = yx"), {}, 3).status == Status::Unknown);

  auto zero_trace = decide(pres("xy = zt"), identity("yz = xt"));
  CHECK(zero_trace.status == Status::Proved);
}

TEST_CASE("derive is sound against every order-3 model") {
  for (const auto& np : fixtures::standard_presentations())
    for (const char* g : fixtures::regression_goals()) {
      const auto goal = identity(g);
      const auto v = derive(np.pres, goal);
      if (v.status == Status::Proved) REQUIRE(holds_in_all_models(np.pres, goal, 3));
    }
}

TEST_CASE("decide never returns conflicting statuses across budgets") {
  const std::pair<Budget, unsigned> settings[] = {
      {{4, 1, 10}, 2}, {{4, 1, 10}, 4}, {{6, 2, 1000}, 2}, {{6, 2, 1000}, 3}, {{}, 4}};
  for (const auto& np : fixtures::standard_presentations())
    for (const char* g : fixtures::regression_goals()) {
      const auto goal = identity(g);
      bool proved = false, disproved = false;
      for (const auto& [budget, order] : settings) {
        const auto s = decide(np.pres, goal, budget, order).status;
        proved |= s == Status::Proved;
        disproved |= s == Status::Disproved;
      }
      INFO(np.name << " / " << g);
      REQUIRE_FALSE((proved && disproved));
    }
}
