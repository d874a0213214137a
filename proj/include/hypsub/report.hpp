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

#ifndef HYPSUB_REPORT_HPP
#define HYPSUB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hypsub/bijection.hpp"
#include "hypsub/semigroup.hpp"
#include "hypsub/solidity.hpp"

namespace hypsub {

/// Limits a verdict was computed under, echoed next to what was consumed.
struct Limits {
  Budget budget;
  unsigned max_order = kMaxModelOrder;
};

// Every structured report has the top-level keys "status", "witness" and
// "budget_used".
nlohmann::json verdict_json(const Verdict& v, const Limits& limits);
nlohmann::json solidity_json(const SolidityReport& r, const Limits& limits);
nlohmann::json criteria_json(const CriteriaReport& r, const Limits& limits);
nlohmann::json hypersubstitution_json(const Hypersubstitution& sigma);
nlohmann::json certificate_json(const std::optional<BijCertificate>& cert,
                                const Signature& sig);

std::string verdict_text(const Verdict& v, const Limits& limits);
std::string solidity_text(const SolidityReport& r, const Limits& limits);
std::string criteria_text(const CriteriaReport& r, const Limits& limits);
std::string model_text(const FiniteSemigroup& s);

}  // namespace hypsub

#endif  // HYPSUB_REPORT_HPP
