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

#include "csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "bridgevario/error.hpp"

namespace bridgevario::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  const std::size_t width = table.header.size();
  for (std::size_t c = 0; c < width; ++c) {
    out << (c ? "," : "") << table.header[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != width) {
      throw Error(ErrorKind::kInvalidArgument, "CSV row width differs from header");
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (c) out << ',';
      if (row[c]) out << format_number(*row[c]);
    }
    out << '\n';
  }
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      std::ostringstream msg;
      msg << "line " << line_no << " has " << fields.size()
          << " fields, header has " << table.header.size();
      throw Error(ErrorKind::kInvalidArgument, msg.str());
    }
    std::vector<std::optional<double>> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      if (f.empty()) {
        row.emplace_back();
        continue;
      }
      errno = 0;
      char* end = nullptr;
      const double value = std::strtod(f.c_str(), &end);
      if (end != f.c_str() + f.size() ||
          (errno == ERANGE && std::isinf(value))) {
        std::ostringstream msg;
        msg << "line " << line_no << ": cannot parse '" << f << "' as a number";
        throw Error(ErrorKind::kInvalidArgument, msg.str());
      }
      row.emplace_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorKind::kInvalidArgument, "empty CSV input");
  return table;
}

}  // namespace bridgevario::cli
