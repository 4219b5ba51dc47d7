// Copyright 2026 The entswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace entswap {

/// Steps called out of order, or malformed messages between the parties.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A combination the attack models do not define (e.g. type II against
/// non-phi+ channels).
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace entswap
