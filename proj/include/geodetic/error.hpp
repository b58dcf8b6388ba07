// Copyright 2026 The Authors.
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

#ifndef GEODETIC_ERROR_HPP_
#define GEODETIC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodetic {

// Every error raised by the library derives from Error. The command-line
// front end maps each concrete class to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to a library call (out-of-range id, wrong carrier type, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line() is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a type invariant or an operation's
// precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Shortest-path based operations need a connected graph.
class DisconnectedGraph : public ValidationError {
 public:
  DisconnectedGraph() : ValidationError("graph is disconnected") {}
  explicit DisconnectedGraph(const std::string& what) : ValidationError(what) {}
};

// Exhaustive search hit its node budget before proving optimality.
class ResourceExhausted : public Error {
 public:
  explicit ResourceExhausted(unsigned long long budget)
      : Error("node budget of " + std::to_string(budget) + " exhausted"),
        budget_(budget) {}
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long budget_;
};

// The input broke a structural assumption an algorithm relies on, e.g. the
// ladder walk of the solid-grid corner detection.
class StructuralError : public Error {
 public:
  StructuralError(int vertex, const std::string& what)
      : Error("vertex " + std::to_string(vertex) + ": " + what),
        vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

}  // namespace geodetic

#endif  // GEODETIC_ERROR_HPP_
