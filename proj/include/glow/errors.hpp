/* Copyright 2026 The GLOW Router Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace glow {

/// Invalid device/model parameters (e.g. tau_e <= tau_o).
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line and column of the fault.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column), detail_(what) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  int line_;
  int column_;
  std::string detail_;
};

class PlacementError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Routing failed; `links()` names the links that could not be placed.
class RoutingError : public std::runtime_error {
public:
  RoutingError(const std::string& what, std::vector<int> links)
    : std::runtime_error(what), links_(std::move(links)) {}
  const std::vector<int>& links() const noexcept { return links_; }

private:
  std::vector<int> links_;
};

class LegalizationError : public RoutingError {
public:
  using RoutingError::RoutingError;
};

/// An Assignment or model broke one of its structural invariants.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The ILP solver hit its time limit without any incumbent.
class TimeoutError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace glow
