// Copyright 2026 The chipfire Authors
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

#ifndef CHIPFIRE_ERRORS_HPP_
#define CHIPFIRE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chipfire {

// Base class of every error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& id)
      : Error("unknown vertex '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Rank, reduction and equivalence all assume a connected graph.
class DisconnectedGraphError : public Error {
 public:
  explicit DisconnectedGraphError(const std::string& op)
      : Error(op + ": graph is not connected") {}
};

class GraphMismatchError : public Error {
 public:
  explicit GraphMismatchError(const std::string& op)
      : Error(op + ": divisors are bound to different graphs") {}
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t count,
                      std::uint64_t budget)
      : Error(what + ": " + std::to_string(count) +
              " candidates exceed the budget of " + std::to_string(budget)),
        count_(count),
        budget_(budget) {}
  std::uint64_t count() const { return count_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t count_;
  std::uint64_t budget_;
};

// A loop guard fired. Indicates a bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chipfire

#endif  // CHIPFIRE_ERRORS_HPP_
