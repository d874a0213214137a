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

#include "fixtures.hpp"
#include "hypsub/bijection.hpp"
#include "hypsub/error.hpp"
#include "hypsub/rho.hpp"
#include "hypsub/semigroup.hpp"

using namespace hypsub;
using fixtures::term;
using fixtures::word;

namespace {

Word flat(RhoKind kind, const Hypersubstitution& sigma, const char* t) {
  return term_to_word(apply_rho(kind, sigma, term(t)), fixtures::type2());
}

const RhoKind kKinds[] = {RhoKind::extension(), RhoKind::fa(), RhoKind::sa(),
                          RhoKind::gamma(0), RhoKind::gamma(1), RhoKind::gamma(2),
                          RhoKind::gamma(3)};

}  // namespace

TEST_CASE("parse_rho") {
  CHECK(parse_rho("ext") == RhoKind::extension());
  CHECK(parse_rho("fa") == RhoKind::fa());
  CHECK(parse_rho("sa") == RhoKind::sa());
  CHECK(parse_rho("gamma:3") == RhoKind::gamma(3));
  for (const auto& k : kKinds) CHECK(parse_rho(render_rho(k)) == k);
  CHECK_THROWS_AS(parse_rho("gamma"), ParseError);
  CHECK_THROWS_AS(parse_rho("gamma:x"), ParseError);
  CHECK_THROWS_AS(parse_rho("beta"), ParseError);
}

TEST_CASE("sa and fa on the bracketings of xyz") {
  const auto d = fixtures::sigma_d();
  CHECK(apply_rho(RhoKind::sa(), d, term("f(f(x,y),z)")) == term("f(f(y,x),z)"));
  CHECK(apply_rho(RhoKind::sa(), d, term("f(x,f(y,z))")) == term("f(x,f(z,y))"));
  CHECK(flat(RhoKind::sa(), d, "f(f(x,y),z)") == word("yxz"));
  CHECK(flat(RhoKind::sa(), d, "f(x,f(y,z))") == word("xzy"));

  CHECK(apply_rho(RhoKind::fa(), d, term("f(f(x,y),z)")) == term("f(z,f(x,y))"));
  CHECK(apply_rho(RhoKind::fa(), d, term("f(x,f(y,z))")) == term("f(f(y,z),x)"));
  CHECK(flat(RhoKind::fa(), d, "f(f(x,y),z)") == word("zxy"));
  CHECK(flat(RhoKind::fa(), d, "f(x,f(y,z))") == word("yzx"));

  const auto x = fixtures::sigma_x();
  CHECK(apply_rho(RhoKind::fa(), x, term("f(f(x,y),z)")) == term("f(x,y)"));
  CHECK(apply_rho(RhoKind::fa(), x, term("f(x,f(y,z))")) == term("x"));
}

TEST_CASE("gamma on the bracketings of xyz") {
  const auto x = fixtures::sigma_x();
  CHECK(apply_rho(RhoKind::gamma(1), x, term("f(f(x,y),z)")) == term("f(x,z)"));
  CHECK(apply_rho(RhoKind::gamma(1), x, term("f(x,f(y,z))")) == term("f(x,y)"));
  const auto y = fixtures::sigma_y();
  CHECK(apply_rho(RhoKind::gamma(1), y, term("f(f(x,y),z)")) == term("f(y,z)"));
  CHECK(apply_rho(RhoKind::gamma(1), y, term("f(x,f(y,z))")) == term("f(x,z)"));
  CHECK(apply_rho(RhoKind::gamma(2), x, term("f(f(f(x,y),z),u)")) ==
        term("f(f(x,z),u)"));
}

TEST_CASE("generate_F") {
  const auto f0 = generate_F(0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].lhs == term("f(f(x,y),z)"));
  CHECK(f0[0].rhs == term("f(x,f(y,z))"));

  const auto f1 = generate_F(1);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].lhs == term("f(f(f(x,y),z),x4)"));
  CHECK(f1[0].rhs == term("f(f(x,f(y,z)),x4)"));
  CHECK(f1[1].lhs == term("f(x4,f(f(x,y),z))"));
  CHECK(f1[1].rhs == term("f(x4,f(x,f(y,z)))"));

  CHECK(generate_F(3).size() == 8);
  CHECK(generate_F(10).size() == 1024);
  CHECK(generate_F(1, 7)[0].lhs == term("f(f(f(x,y),z),x7)"));
  CHECK_THROWS_AS(generate_F(5, 4, 4), CapExceeded);

  // Each member is an instance of associativity: both sides flatten equally.
  for (unsigned m = 0; m <= 4; ++m)
    for (const auto& id : generate_F(m)) {
      REQUIRE(term_to_word(id.lhs, fixtures::type2()) == term_to_word(id.rhs, fixtures::type2()));
      REQUIRE(metrics(id.lhs).depth == m + 2);
    }
}

TEST_CASE("gamma homomorphism") {
  const auto hyps = enumerate_hypersubstitutions(fixtures::type2(), 1);
  const auto depth3 = enumerate_terms(fixtures::type2(), 3, 2);
  for (const auto& a : hyps)
    for (const auto& b : hyps) REQUIRE(check_gamma_homomorphism(a, b, 0, depth3));

  const auto depth4 = enumerate_terms(fixtures::type2(), 4, 1);
  const auto d = fixtures::sigma_d();
  const auto x = fixtures::sigma_x();
  CHECK(check_gamma_homomorphism(d, x, 2, depth4));
  CHECK(check_gamma_homomorphism(x, d, 2, depth4));
  CHECK(check_gamma_homomorphism(d, x, 2, depth3));

  // Composing in the wrong order breaks the law for non-commuting pairs.
  REQUIRE_FALSE(compose(x, d) == compose(d, x));
  bool distinguished = false;
  for (unsigned n = 0; n <= 2; ++n)
    for (const auto& t : depth3)
      if (!(apply_rho(RhoKind::gamma(n), compose(d, x), t) ==
            apply_rho(RhoKind::gamma(n), x, apply_rho(RhoKind::gamma(n), d, t))))
        distinguished = true;
  CHECK(distinguished);
}

TEST_CASE("rho invariants on the depth-4 universe") {
  const auto universe = enumerate_terms(fixtures::type2(), 4, 1);
  const auto small = enumerate_terms(fixtures::type2(), 3, 3);
  const auto eps = identity_hyp(fixtures::type2());
  for (unsigned n = 0; n <= 4; ++n)
    for (const auto& t : universe) REQUIRE(apply_rho(RhoKind::gamma(n), eps, t) == t);

  for (const auto& sigma : enumerate_hypersubstitutions(fixtures::type2(), 2)) {
    for (const auto& t : small) {
      REQUIRE(apply_rho(RhoKind::gamma(0), sigma, t) == extend_apply(sigma, t));
      const unsigned h = t.height();
      for (unsigned n = h; n <= 4; ++n) REQUIRE(apply_rho(RhoKind::gamma(n), sigma, t) == t);
    }
    for (const auto& k : kKinds)
      for (VarIndex v = 1; v <= 3; ++v) REQUIRE(apply_rho(k, sigma, Term::var(v)) == Term::var(v));
  }
}

TEST_CASE("sa and fa are involutions for the dual hypersubstitution") {
  const auto d = fixtures::sigma_d();
  for (VarIndex vars : {1u, 2u}) {
    const auto universe = enumerate_terms(fixtures::type2(), vars == 1 ? 4 : 3, vars);
    for (const auto& t : universe) {
      REQUIRE(apply_rho(RhoKind::sa(), d, apply_rho(RhoKind::sa(), d, t)) == t);
      REQUIRE(apply_rho(RhoKind::fa(), d, apply_rho(RhoKind::fa(), d, t)) == t);
    }
  }
}

TEST_CASE("sa and fa preserve length and variables for bijective hypersubstitutions") {
  for (const auto& sig : {fixtures::type2(), fixtures::type22()}) {
    const auto universe = enumerate_terms(sig, sig.size() == 1 ? 3 : 2, 3);
    for (const auto& sigma : enumerate_bijective(sig))
      for (const auto& t : universe)
        for (auto k : {RhoKind::sa(), RhoKind::fa()}) {
          const auto mt = metrics(t);
          const auto mu = metrics(apply_rho(k, sigma, t));
          REQUIRE(mu.length == mt.length);
          REQUIRE(mu.varset == mt.varset);
        }
  }
}

TEST_CASE("gamma_n separates distinct hypersubstitutions") {
  const auto sig = fixtures::type2();
  CHECK(gamma_witness(sig, 0, 0) == term("f(x1,x2)"));
  CHECK(gamma_witness(sig, 0, 2) == term("f(f(f(x1,x2),x2),x2)"));
  CHECK(gamma_witness(fixtures::type_n(3), 0, 1) == term("f(f(x1,x2,x3),x2,x3)", fixtures::type_n(3)));

  const auto hyps = enumerate_hypersubstitutions(sig, 1);
  for (unsigned n = 0; n <= 3; ++n) {
    const auto kind = RhoKind::gamma(n);
    const auto witness = gamma_witness(sig, 0, n);
    for (const auto& a : hyps)
      for (const auto& b : hyps) {
        const bool same = apply_rho(kind, a, witness) == apply_rho(kind, b, witness);
        REQUIRE(same == (a == b));
      }
  }
}
