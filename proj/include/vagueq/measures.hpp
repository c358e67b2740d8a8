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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/interval_set.hpp"
#include "vagueq/quadrature.hpp"
#include "vagueq/text.hpp"

namespace vagueq {

/// Labels drawn from a finite universe. Order and repetition are irrelevant.
using Subset = std::vector<std::string>;

/// Bitmask representation of subsets of a finite universe; bit i is universe[i].
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxTableUniverse = 12;

inline constexpr double kUnitMassTolerance = 1e-6;
inline constexpr double kUnitHeightTolerance = 1e-9;

enum class MeasureKind { additive_density, possibilistic, table };

/// Whether an additive density must carry unit mass.
enum class MassPolicy { require_unit, allow_unnormalized };

struct AdditiveDensity {
  GridFunction density;
  double mass;
  bool normalized;
};

struct GridPossibility {
  GridFunction distribution;
};

struct FinitePossibility {
  FiniteFuzzySet distribution;
};

/// Explicit set function; values[mask] is the measure of the subset `mask`.
struct SetFunctionTable {
  std::vector<std::string> universe;
  std::vector<double> values;
};

/// Describes the first axiom violation of a set-function table, if any.
inline std::optional<std::string> table_violation(std::span<const std::string> universe,
                                                  std::span<const double> values) {
  if (universe.size() > kMaxTableUniverse) {
    return "table universe has " + std::to_string(universe.size()) + " elements (limit " +
           std::to_string(kMaxTableUniverse) + ")";
  }
  const std::size_t count = std::size_t{1} << universe.size();
  if (values.size() != count) {
    return "table has " + std::to_string(values.size()) + " entries, expected " + std::to_string(count);
  }
  auto name = [&](SubsetMask mask) {
    if (mask == 0) return std::string("{}");
    std::string out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask & (SubsetMask{1} << i)) {
        if (!out.empty()) out += '|';
        out += universe[i];
      }
    }
    return out;
  };
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!std::isfinite(values[mask]) || values[mask] < 0.0) {
      return "measure of " + name(static_cast<SubsetMask>(mask)) + " is " + text::exact(values[mask]);
    }
  }
  if (std::abs(values[0]) > 1e-12) return "measure of the empty set is " + text::exact(values[0]) + ", not 0";
  if (std::abs(values[count - 1] - 1.0) > 1e-12) {
    return "measure of the whole universe is " + text::exact(values[count - 1]) + ", not 1";
  }
  // Checking every single-element removal covers all inclusions by transitivity.
  for (std::size_t mask = 1; mask < count; ++mask) {
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (!(mask & bit)) continue;
      const auto smaller = static_cast<SubsetMask>(mask & ~bit);
      if (values[smaller] > values[mask] + 1e-12) {
        return "not monotone: mu(" + name(smaller) + ") = " + text::exact(values[smaller]) + " > mu(" +
               name(static_cast<SubsetMask>(mask)) + ") = " + text::exact(values[mask]);
      }
    }
  }
  return std::nullopt;
}

/// A monotone measure: additive from a density, possibilistic from a
/// distribution with height 1, or an explicit finite table.
class MeasureSpec {
 public:
  using Payload = std::variant<AdditiveDensity, GridPossibility, FinitePossibility, SetFunctionTable>;

  static MeasureSpec additive(GridFunction density, MassPolicy policy = MassPolicy::require_unit) {
    const double mass = lebesgue_integral(density, full_domain(density));
    const bool normalized = std::abs(mass - 1.0) <= kUnitMassTolerance;
    if (!normalized && policy == MassPolicy::require_unit) {
      throw Error("density integrates to " + text::exact(mass) +
                  ", not 1 (pass allow_unnormalized to analyze it anyway)");
    }
    return MeasureSpec(AdditiveDensity{std::move(density), mass, normalized});
  }

  static MeasureSpec possibility(GridFunction distribution) {
    require_unit_height(height_grid(distribution));
    return MeasureSpec(GridPossibility{std::move(distribution)});
  }

  static MeasureSpec possibility(FiniteFuzzySet distribution) {
    require_unit_height(height(distribution).value());
    return MeasureSpec(FinitePossibility{std::move(distribution)});
  }

  static MeasureSpec table(std::vector<std::string> universe, std::vector<double> values) {
    require_unique_labels(universe);
    if (auto why = table_violation(universe, values)) throw Error("invalid measure table: " + *why);
    return MeasureSpec(SetFunctionTable{std::move(universe), std::move(values)});
  }

  MeasureKind kind() const noexcept {
    switch (payload_.index()) {
      case 0: return MeasureKind::additive_density;
      case 3: return MeasureKind::table;
      default: return MeasureKind::possibilistic;
    }
  }

  bool is_finite() const noexcept {
    return std::holds_alternative<FinitePossibility>(payload_) ||
           std::holds_alternative<SetFunctionTable>(payload_);
  }

  /// Universe of a finite measure; throws for grid measures.
  const std::vector<std::string>& universe() const {
    if (const auto* p = std::get_if<FinitePossibility>(&payload_)) return p->distribution.universe();
    if (const auto* t = std::get_if<SetFunctionTable>(&payload_)) return t->universe;
    throw Error("measure is defined on a grid, not a finite universe");
  }

  /// Density or distribution of a grid measure; throws for finite measures.
  const GridFunction& grid() const {
    if (const auto* a = std::get_if<AdditiveDensity>(&payload_)) return a->density;
    if (const auto* p = std::get_if<GridPossibility>(&payload_)) return p->distribution;
    throw Error("measure is defined on a finite universe, not a grid");
  }

  const Payload& payload() const noexcept { return payload_; }

 private:
  explicit MeasureSpec(Payload payload) : payload_(std::move(payload)) {}

  static void require_unit_height(double h) {
    if (std::abs(h - 1.0) > kUnitHeightTolerance) {
      throw Error("possibility distribution has height " + text::exact(h) +
                  ", expected 1 (no fully plausible element)");
    }
  }

  Payload payload_;
};

constexpr std::string_view to_string(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::additive_density: return "additive_density";
    case MeasureKind::possibilistic: return "possibilistic";
    case MeasureKind::table: return "table";
  }
  return "table";
}

inline SubsetMask subset_mask(std::span<const std::string> universe, const Subset& subset) {
  SubsetMask mask = 0;
  for (const auto& label : subset) {
    const auto it = std::find(universe.begin(), universe.end(), label);
    if (it == universe.end()) throw Error("label '" + label + "' not in the measure's universe");
    mask |= SubsetMask{1} << static_cast<unsigned>(it - universe.begin());
  }
  return mask;
}

/// Parses `e1|e2|...`; `{}` or an empty string is the empty subset.
inline Subset parse_subset(std::string_view s) {
  s = text::trim(s);
  if (s.empty() || s == "{}") return {};
  Subset out;
  for (auto part : text::split(s, '|')) {
    const auto label = text::trim(part);
    if (label.empty()) throw Error("empty label in subset '" + std::string(s) + "'");
    out.emplace_back(label);
  }
  return out;
}

/// Measure of a subset given as a mask over the measure's own universe.
inline double measure_of_mask(const MeasureSpec& m, SubsetMask mask) {
  if (const auto* t = std::get_if<SetFunctionTable>(&m.payload())) return t->values.at(mask);
  if (const auto* p = std::get_if<FinitePossibility>(&m.payload())) {
    double best = 0.0;
    for (std::size_t i = 0; i < p->distribution.size(); ++i) {
      if (mask & (SubsetMask{1} << i)) best = std::max(best, p->distribution.grade(i).value());
    }
    return best;
  }
  throw Error("measure is defined on a grid; pass an interval set");
}

inline double measure_of(const MeasureSpec& m, const Subset& subset) {
  if (!m.is_finite()) throw Error("measure is defined on a grid; pass an interval set");
  return measure_of_mask(m, subset_mask(m.universe(), subset));
}

inline double measure_of(const MeasureSpec& m, const IntervalSet& a) {
  if (const auto* d = std::get_if<AdditiveDensity>(&m.payload())) return lebesgue_integral(d->density, a);
  if (const auto* p = std::get_if<GridPossibility>(&m.payload())) return interval_sup(p->distribution, a);
  throw Error("measure is defined on a finite universe; pass a subset");
}

/// Checks pi(union of parts) == max of pi(part) within 1e-12.
inline bool check_possibility_union_axiom(const MeasureSpec& m, std::span<const IntervalSet> parts) {
  if (m.kind() != MeasureKind::possibilistic || m.is_finite()) {
    throw Error("union axiom check requires a possibilistic grid measure");
  }
  IntervalSet all;
  double best = 0.0;
  for (const auto& part : parts) {
    all = all.unite(part);
    best = std::max(best, measure_of(m, part));
  }
  return std::abs(measure_of(m, all) - best) <= 1e-12;
}

/// Checks mu(union of disjoint parts) == sum of mu(part) within tol.
inline bool check_additivity(const MeasureSpec& m, std::span<const IntervalSet> parts, double tol) {
  if (m.kind() != MeasureKind::additive_density) throw Error("additivity check requires an additive measure");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (parts[i].overlaps(parts[j])) {
        throw Error("parts " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  IntervalSet all;
  double sum = 0.0;
  for (const auto& part : parts) {
    all = all.unite(part);
    sum += measure_of(m, part);
  }
  return std::abs(measure_of(m, all) - sum) <= tol;
}

/// Scales f so that its height is 1.
inline GridFunction normalize_to_possibility(const GridFunction& f) {
  const double h = height_grid(f);
  if (!(h > 0.0)) throw Error("cannot build a possibility distribution from an identically zero function");
  std::vector<double> out(f.samples().begin(), f.samples().end());
  for (double& v : out) v /= h;
  return GridFunction(f.x_min(), f.x_max(), std::move(out));
}

// ---------------------------------------------------------------------------
// Table text format: `e1|e2|...,value`, empty subset spelled `{}`.

/// Structurally parsed table; axioms are not checked yet.
struct RawTable {
  std::vector<std::string> universe;
  std::vector<double> values;
};

inline RawTable read_table(std::istream& in) {
  std::vector<std::string> universe;
  std::vector<std::pair<Subset, double>> rows;
  for (const auto& line : text::content_lines(in)) {
    const auto comma = line.content.rfind(',');
    if (comma == std::string::npos) {
      throw Error("line " + std::to_string(line.number) + ": expected 'subset,value'");
    }
    auto subset = parse_subset(std::string_view(line.content).substr(0, comma));
    const double value = text::parse_real(std::string_view(line.content).substr(comma + 1), "measure value");
    for (const auto& label : subset) {
      if (std::find(universe.begin(), universe.end(), label) == universe.end()) universe.push_back(label);
    }
    rows.emplace_back(std::move(subset), value);
  }
  if (universe.size() > kMaxTableUniverse) {
    throw Error("table universe has " + std::to_string(universe.size()) + " elements (limit " +
                std::to_string(kMaxTableUniverse) + ")");
  }
  const std::size_t count = std::size_t{1} << universe.size();
  std::vector<double> values(count, 0.0);
  std::vector<bool> seen(count, false);
  for (const auto& [subset, value] : rows) {
    const SubsetMask mask = subset_mask(universe, subset);
    if (seen[mask]) throw Error("subset listed twice in measure table");
    seen[mask] = true;
    values[mask] = value;
  }
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (seen[mask]) continue;
    std::string name;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask & (std::size_t{1} << i)) name += (name.empty() ? "" : "|") + universe[i];
    }
    throw Error("measure table is missing subset " + (name.empty() ? std::string("{}") : name));
  }
  return {std::move(universe), std::move(values)};
}

inline MeasureSpec read_table_measure(std::istream& in) {
  auto raw = read_table(in);
  return MeasureSpec::table(std::move(raw.universe), std::move(raw.values));
}

inline MeasureSpec read_table_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_table_measure(in);
}

}  // namespace vagueq
