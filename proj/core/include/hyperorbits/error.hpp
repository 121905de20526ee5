// Copyright 2026 The hyperorbits Authors
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

#ifndef HYPERORBITS_ERROR_HPP
#define HYPERORBITS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperorbits {

/// Input violates an operation's precondition (malformed data, point off the
/// curve, degenerate form where a nondegenerate one is required, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured work budget. Never signals a
/// wrong answer, only a refusal to answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reduction of a form modulo p vanishes identically.
class ZeroForm : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace hyperorbits

#endif  // HYPERORBITS_ERROR_HPP
