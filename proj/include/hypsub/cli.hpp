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

#ifndef HYPSUB_CLI_HPP
#define HYPSUB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "hypsub/semigroup.hpp"
#include "hypsub/solidity.hpp"

namespace hypsub::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInputError = 3;

int exit_code(Status s);
int exit_code(SolidityStatus s);
int exit_code(Conclusion c);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypsub::cli

#endif  // HYPSUB_CLI_HPP
