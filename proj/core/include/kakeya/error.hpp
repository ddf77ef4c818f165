// Copyright 2026 The Kakeya Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kakeya {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The shape has no interior (point, segment, coplanar vertex set) but the
/// operation requires one.
struct DegenerateShape : Error {
  using Error::Error;
};

/// A direction vector was zero where a nonzero one is required.
struct InvalidDirection : Error {
  using Error::Error;
};

/// Operands live in different ambient dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A scalar or integer argument is outside its admissible range.
struct InvalidParameter : Error {
  using Error::Error;
};

/// The polygon has an edge normal that matches no normal of the regular
/// mu-gon.
struct NotAMuPolygon : Error {
  using Error::Error;
};

/// The edge-length vector does not close up into a polygon.
struct NotClosed : Error {
  using Error::Error;
};

/// The solver lost too much precision or exceeded its iteration budget.
struct NumericalFailure : Error {
  using Error::Error;
};

/// The linear program or polytope is unbounded.
struct Unbounded : Error {
  using Error::Error;
};

/// Sweep certification was requested in a setting where no rigorous
/// certificate exists (d = 3).
struct UnsupportedCertification : Error {
  using Error::Error;
};

/// Unknown reproduction scenario name.
struct UnknownScenario : Error {
  using Error::Error;
};

/// Malformed input text; byte_offset points at the first offending byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace kakeya
