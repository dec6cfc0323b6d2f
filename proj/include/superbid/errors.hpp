/*
 * Copyright 2026 The superbid Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SUPERBID_ERRORS_HPP_
#define SUPERBID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace superbid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A similarity score outside [0, 1].
class OutOfRangeError : public Error {
 public:
  OutOfRangeError(int row, int col, double value)
      : Error("similarity out of [0,1] at row " + std::to_string(row) +
              ", col " + std::to_string(col) + ": " + std::to_string(value)),
        row(row), col(col), value(value) {}
  int row;
  int col;
  double value;
};

class EmptyMatrixError : public Error {
 public:
  EmptyMatrixError() : Error("similarity matrix has zero rows or columns") {}
};

class RaggedRowsError : public Error {
 public:
  explicit RaggedRowsError(int line)
      : Error("CSV row length mismatch at line " + std::to_string(line)),
        line(line) {}
  int line;
};

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ", col " +
              std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

class NonFiniteError : public Error {
 public:
  NonFiniteError() : Error("weight matrix contains NaN or infinity") {}
};

class NotDecomposableError : public Error {
 public:
  NotDecomposableError()
      : Error("bidding/reviewer-gain pair does not factor into "
              "similarity and position terms") {}
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& what) : Error(what) {}
};

class DivisibilityError : public Error {
 public:
  explicit DivisibilityError(const std::string& what) : Error(what) {}
};

class NoiselessOnlyError : public Error {
 public:
  NoiselessOnlyError()
      : Error("analytic optimum is defined for the noiseless model only") {}
};

class InvalidScenarioError : public Error {
 public:
  explicit InvalidScenarioError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace superbid

#endif  // SUPERBID_ERRORS_HPP_
