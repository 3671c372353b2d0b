// Copyright 2026 The bridgevario Authors
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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bridgevario::cli {

/// Rectangular table of reals with a header row. Missing entries are written
/// as empty fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Shortest form that parses back to the same double: printf "%.17g".
std::string format_number(double value);

/// Throws Error(kInvalidArgument) for non-rectangular tables.
void write_csv(std::ostream& out, const CsvTable& table);

/// Parses comma-separated text written by write_csv (or by hand). Blank lines
/// are skipped. Throws Error(kInvalidArgument) on malformed numbers or ragged
/// rows.
CsvTable read_csv(std::istream& in);

}  // namespace bridgevario::cli
