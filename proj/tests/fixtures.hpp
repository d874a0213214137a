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

#ifndef HYPSUB_TESTS_FIXTURES_HPP
#define HYPSUB_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "hypsub/hypersubstitution.hpp"
#include "hypsub/semigroup.hpp"

namespace fixtures {

inline hypsub::Signature type2() { return hypsub::parse_signature("f 2"); }
inline hypsub::Signature type22() { return hypsub::parse_signature("f 2\ng 2"); }
inline hypsub::Signature type_n(unsigned n) {
  return hypsub::parse_signature("f " + std::to_string(n));
}

inline hypsub::Term term(const std::string& text, const hypsub::Signature& sig = type2()) {
  return hypsub::parse_term(text, sig);
}

inline hypsub::Hypersubstitution hyp(const std::string& text,
                                     const hypsub::Signature& sig = type2()) {
  return hypsub::parse_hypersubstitution(text, sig);
}

inline hypsub::Hypersubstitution sigma_d() { return hyp("f -> f(x2,x1)"); }
inline hypsub::Hypersubstitution sigma_x() { return hyp("f -> x1"); }
inline hypsub::Hypersubstitution sigma_y() { return hyp("f -> x2"); }

inline hypsub::Presentation pres(const std::string& text) {
  return hypsub::parse_presentation(text);
}

inline hypsub::Identity identity(const std::string& text) {
  return hypsub::parse_identity(text);
}

inline hypsub::Word word(const std::string& text) { return hypsub::parse_word(text); }

struct NamedPresentation {
  std::string name;
  hypsub::Presentation pres;
};

/// TR, Z, bands, commutative, left-zero law, {xyz=zxy}, {x1x2x3=y1y2y3}, empty.
inline std::vector<NamedPresentation> standard_presentations() {
  return {
      {"TR", pres("x = y")},
      {"Z", pres("xy = zt")},
      {"bands", pres("xx = x")},
      {"commutative", pres("xy = yx")},
      {"left-zero", pres("xy = x")},
      {"cyclic3", pres("xyz = zxy")},
      {"nil3", pres("x1x2x3 = x4x5x6")},
      {"empty", pres("")},
  };
}

/// Goals used for regression and soundness sweeps.
inline std::vector<const char*> regression_goals() {
  return {
      "xy = yx",   "xyz = zxy", "xyz = xzy", "xz = xy",         "yz = xz",
      "yz = xt",   "xy = zt",   "x = y",     "xx = x",          "xy = x",
      "xyx = x",   "xyz = yxz", "xxy = xyy", "x1x2x3 = x4x5x6", "x1x2 = x2x1x2",
  };
}

/// The eight members of Bij((2,2)) in reference order.
inline std::vector<hypsub::Hypersubstitution> bij22_table() {
  const auto sig = type22();
  const char* rows[][2] = {
      {"f(x1,x2)", "g(x1,x2)"}, {"f(x1,x2)", "g(x2,x1)"}, {"f(x2,x1)", "g(x1,x2)"},
      {"f(x2,x1)", "g(x2,x1)"}, {"g(x1,x2)", "f(x1,x2)"}, {"g(x1,x2)", "f(x2,x1)"},
      {"g(x2,x1)", "f(x1,x2)"}, {"g(x2,x1)", "f(x2,x1)"},
  };
  std::vector<hypsub::Hypersubstitution> out;
  for (auto& r : rows)
    out.push_back(hyp(std::string("f -> ") + r[0] + "\ng -> " + r[1], sig));
  return out;
}

}  // namespace fixtures

#endif  // HYPSUB_TESTS_FIXTURES_HPP
