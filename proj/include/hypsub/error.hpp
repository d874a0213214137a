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

#ifndef HYPSUB_ERROR_HPP
#define HYPSUB_ERROR_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace hypsub {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text input (signature, term, hypersubstitution, word files).
class ParseError : public Error {
  using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
  using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public Error {
  using Error::Error;
};

namespace detail {

template <typename E, typename... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream message;
  (message << ... << parts);
  throw E(message.str());
}

}  // namespace detail
}  // namespace hypsub

#endif  // HYPSUB_ERROR_HPP
