// Copyright 2026 The ShareFair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHAREFAIR_ERROR_HPP_
#define SHAREFAIR_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sharefair {

// Base of every error the library throws. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of two objects disagree (allocation vs instance, matrix vs n x m).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Text that should have been an instance file is not one.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A model variant the operation does not handle (e.g. set-dependent costs in
// the oracles).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// No allocation satisfies the constraint set (e.g. cardinality budgets too
// small to cover the goods).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed OracleBudget::max_states. Never accompanied by a
// partial answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t limit, const std::string& what)
      : Error("oracle state budget of " + std::to_string(limit) +
              " exceeded: " + what),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

// An internal invariant of an algorithm failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sharefair

#endif  // SHAREFAIR_ERROR_HPP_
