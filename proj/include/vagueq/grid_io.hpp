/*   Copyright 2026 The vagueq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "vagueq/fuzzy_core.hpp"
#include "vagueq/text.hpp"

namespace vagueq {

/// Reads the `x,value` CSV format. The header line is required and the x
/// column must be uniformly spaced within 1e-9 relative to the span.
inline GridFunction read_grid_csv(std::istream& in) {
  const auto lines = text::content_lines(in);
  if (lines.empty()) throw Error("grid CSV is empty");
  const auto header = text::split(lines.front().content, ',');
  if (header.size() != 2 || text::trim(header[0]) != "x" || text::trim(header[1]) != "value") {
    throw Error("grid CSV must start with the header 'x,value'");
  }
  std::vector<double> xs;
  std::vector<double> values;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto fields = text::split(lines[k].content, ',');
    if (fields.size() != 2) {
      throw Error("line " + std::to_string(lines[k].number) + ": expected 'x,value'");
    }
    xs.push_back(text::parse_real(fields[0], "x"));
    values.push_back(text::parse_real(fields[1], "value"));
  }
  if (xs.size() < 2) throw Error("grid CSV needs at least 2 rows");
  const double x_min = xs.front();
  const double x_max = xs.back();
  const double span = x_max - x_min;
  if (!(span > 0.0)) throw Error("grid CSV x column must be increasing");
  const auto n = static_cast<double>(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double expected = x_min + span * static_cast<double>(i) / n;
    if (std::abs(xs[i] - expected) > 1e-9 * span) {
      throw Error("grid CSV x column is not uniformly spaced at row " + std::to_string(i + 1));
    }
  }
  return GridFunction(x_min, x_max, std::move(values));
}

inline GridFunction read_grid_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_grid_csv(in);
}

inline void write_grid_csv(std::ostream& out, const GridFunction& f) {
  out << "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << text::exact(f.node(i)) << ',' << text::exact(f.samples()[i]) << '\n';
  }
}

}  // namespace vagueq
