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

#include <filesystem>
#include <string>

#include "kakeya/experiments.hpp"
#include "kakeya/mu_polygon.hpp"
#include "kakeya/shape.hpp"

namespace kakeya {

// JSON shape encoding.  Types: "polygon" {vertices}, "hpolytope"
// {normals, offsets}, "vpolytope3" {vertices}, "ball" {center, radius},
// "mu_polygon" {mu, lengths}.  Numbers are decimal and round-trip exactly
// (shortest representation that re-parses to the same double).

/// Parses a shape document.  "mu_polygon" inputs decode to the polygon they
/// represent.  Throws ParseError (with the byte offset) on malformed JSON
/// and the usual shape errors on semantically invalid data.
Shape parse_shape(const std::string& text);

/// Parses a "mu_polygon" document as the raw edge-length vector.
MuVector parse_mu_vector(const std::string& text);

std::string to_json(const Shape& s);
std::string to_json(const MuVector& v);
std::string to_json(const ExperimentReport& report);

/// details rows as CSV: trial, digest, failed, then one column per quantity.
std::string to_csv(const ExperimentReport& report);

Shape load_shape(const std::filesystem::path& path);

/// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace kakeya
