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
#include <cmath>
#include <compare>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vagueq/error.hpp"
#include "vagueq/text.hpp"

namespace vagueq {

/// Values this close outside [0,1] are clamped; anything further is rejected.
inline constexpr double kGradeSlack = 1e-12;

/// Degree of membership in [0,1].
class Grade {
 public:
  constexpr Grade() = default;
  explicit Grade(double v) : value_(checked(v)) {}

  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Grade, Grade) = default;
  friend constexpr auto operator<=>(Grade, Grade) = default;

 private:
  static double checked(double v) {
    if (!std::isfinite(v) || v < -kGradeSlack || v > 1.0 + kGradeSlack) {
      throw Error("grade " + text::exact(v) + " outside [0,1]");
    }
    return std::clamp(v, 0.0, 1.0);
  }

  double value_ = 0.0;
};

// ---------------------------------------------------------------------------
// t-norms and their dual t-conorms

enum class TNormKind { minimum, product, lukasiewicz };

constexpr double t_norm(TNormKind kind, double a, double b) noexcept {
  switch (kind) {
    case TNormKind::minimum: return std::min(a, b);
    case TNormKind::product: return a * b;
    case TNormKind::lukasiewicz: return std::max(0.0, a + b - 1.0);
  }
  return std::min(a, b);
}

/// maximum / probabilistic sum / bounded sum.
constexpr double t_conorm(TNormKind kind, double a, double b) noexcept {
  switch (kind) {
    case TNormKind::minimum: return std::max(a, b);
    case TNormKind::product: return a + b - a * b;
    case TNormKind::lukasiewicz: return std::min(1.0, a + b);
  }
  return std::max(a, b);
}

inline TNormKind parse_tnorm(std::string_view name) {
  if (name == "min" || name == "minimum") return TNormKind::minimum;
  if (name == "product" || name == "prod") return TNormKind::product;
  if (name == "lukasiewicz" || name == "luk") return TNormKind::lukasiewicz;
  throw Error("unknown t-norm '" + std::string(name) + "' (expected min, product or lukasiewicz)");
}

constexpr std::string_view to_string(TNormKind kind) noexcept {
  switch (kind) {
    case TNormKind::minimum: return "minimum";
    case TNormKind::product: return "product";
    case TNormKind::lukasiewicz: return "lukasiewicz";
  }
  return "minimum";
}

// ---------------------------------------------------------------------------
// Fuzzy sets over a finite, ordered universe

inline void require_unique_labels(std::span<const std::string> labels) {
  std::vector<std::string_view> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw Error("duplicate label '" + std::string(*dup) + "' in universe");
}

class FiniteFuzzySet {
 public:
  FiniteFuzzySet() = default;

  FiniteFuzzySet(std::vector<std::string> universe, std::vector<Grade> grades)
      : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (universe_.size() != grades_.size()) {
      throw Error("fuzzy set has " + std::to_string(universe_.size()) + " labels but " +
                  std::to_string(grades_.size()) + " grades");
    }
    require_unique_labels(universe_);
  }

  FiniteFuzzySet(std::vector<std::string> universe, std::span<const double> grades)
      : FiniteFuzzySet(std::move(universe), to_grades(grades)) {}

  FiniteFuzzySet(std::vector<std::string> universe, std::initializer_list<double> grades)
      : FiniteFuzzySet(std::move(universe), std::span<const double>(grades.begin(), grades.size())) {}

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::span<const Grade> grades() const noexcept { return grades_; }
  std::size_t size() const noexcept { return universe_.size(); }
  bool empty() const noexcept { return universe_.empty(); }

  Grade grade(std::size_t i) const { return grades_.at(i); }

  Grade grade(std::string_view label) const {
    if (auto i = index_of(label)) return grades_[*i];
    throw Error("label '" + std::string(label) + "' not in universe");
  }

  std::optional<std::size_t> index_of(std::string_view label) const noexcept {
    const auto it = std::find(universe_.begin(), universe_.end(), label);
    if (it == universe_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - universe_.begin());
  }

  friend bool operator==(const FiniteFuzzySet&, const FiniteFuzzySet&) = default;

 private:
  static std::vector<Grade> to_grades(std::span<const double> values) {
    std::vector<Grade> out;
    out.reserve(values.size());
    for (double v : values) out.emplace_back(v);
    return out;
  }

  std::vector<std::string> universe_;
  std::vector<Grade> grades_;
};

namespace detail {

inline void require_same_labels(std::span<const std::string> ua, std::span<const std::string> ub) {
  const std::size_t n = std::min(ua.size(), ub.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ua[i] != ub[i]) {
      throw Error("universe mismatch at position " + std::to_string(i) + ": '" + ua[i] + "' vs '" +
                  ub[i] + "'");
    }
  }
  if (ua.size() != ub.size()) {
    const auto& longer = ua.size() > ub.size() ? ua : ub;
    throw Error("universe mismatch at position " + std::to_string(n) + ": '" + longer[n] +
                "' present on one side only");
  }
}

inline void require_same_universe(const FiniteFuzzySet& a, const FiniteFuzzySet& b) {
  require_same_labels(a.universe(), b.universe());
}

template <typename Op>
FiniteFuzzySet pointwise(const FiniteFuzzySet& a, const FiniteFuzzySet& b, Op op) {
  require_same_universe(a, b);
  std::vector<Grade> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.emplace_back(op(a.grade(i).value(), b.grade(i).value()));
  }
  return FiniteFuzzySet(a.universe(), std::move(out));
}

}  // namespace detail

inline FiniteFuzzySet fuzzy_union(const FiniteFuzzySet& a, const FiniteFuzzySet& b,
                                  TNormKind kind = TNormKind::minimum) {
  return detail::pointwise(a, b, [kind](double x, double y) { return t_conorm(kind, x, y); });
}

inline FiniteFuzzySet fuzzy_intersection(const FiniteFuzzySet& a, const FiniteFuzzySet& b,
                                         TNormKind kind = TNormKind::minimum) {
  return detail::pointwise(a, b, [kind](double x, double y) { return t_norm(kind, x, y); });
}

inline FiniteFuzzySet fuzzy_complement(const FiniteFuzzySet& a) {
  std::vector<Grade> out;
  out.reserve(a.size());
  for (Grade g : a.grades()) out.emplace_back(1.0 - g.value());
  return FiniteFuzzySet(a.universe(), std::move(out));
}

inline Grade height(const FiniteFuzzySet& a) {
  if (a.empty()) throw Error("height of a fuzzy set over an empty universe");
  return *std::max_element(a.grades().begin(), a.grades().end());
}

inline bool is_normalized(const FiniteFuzzySet& a, double tol = 0.0) {
  if (tol < 0.0) throw Error("normalization tolerance must be non-negative");
  return !a.empty() && height(a).value() >= 1.0 - tol;
}

// ---------------------------------------------------------------------------
// `label,grade` text format

inline FiniteFuzzySet read_fuzzy_set(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<Grade> grades;
  for (const auto& line : text::content_lines(in)) {
    const auto comma = line.content.rfind(',');
    if (comma == std::string::npos) {
      throw Error("line " + std::to_string(line.number) + ": expected 'label,grade'");
    }
    const auto label = text::trim(std::string_view(line.content).substr(0, comma));
    if (label.empty()) throw Error("line " + std::to_string(line.number) + ": empty label");
    const double g = text::parse_real(std::string_view(line.content).substr(comma + 1), "grade");
    labels.emplace_back(label);
    try {
      grades.emplace_back(g);
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return FiniteFuzzySet(std::move(labels), std::move(grades));
}

inline FiniteFuzzySet read_fuzzy_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_fuzzy_set(in);
}

inline void write_fuzzy_set(std::ostream& out, const FiniteFuzzySet& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << a.universe()[i] << ',' << text::exact(a.grade(i).value()) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Nonnegative functions sampled on a uniform grid, read as piecewise linear

class GridFunction {
 public:
  GridFunction(double x_min, double x_max, std::vector<double> samples)
      : x_min_(x_min), x_max_(x_max), samples_(std::move(samples)) {
    if (!std::isfinite(x_min_) || !std::isfinite(x_max_) || !(x_min_ < x_max_)) {
      throw Error("grid requires finite x_min < x_max");
    }
    if (samples_.size() < 2) throw Error("grid requires at least 2 samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      const double v = samples_[i];
      if (!std::isfinite(v) || v < 0.0) {
        throw Error("grid sample " + std::to_string(i) + " is " + text::exact(v) +
                    " (must be finite and nonnegative)");
      }
    }
  }

  template <typename F>
  static GridFunction sample(double x_min, double x_max, std::size_t n, F&& fn) {
    if (n < 2) throw Error("grid requires at least 2 samples");
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = fn(node_of(x_min, x_max, n, i));
    return GridFunction(x_min, x_max, std::move(values));
  }

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }
  double spacing() const noexcept { return (x_max_ - x_min_) / static_cast<double>(size() - 1); }

  double node(std::size_t i) const noexcept { return node_of(x_min_, x_max_, size(), i); }

  /// Slack for "inside the grid span" checks.
  double span_slack() const noexcept { return 1e-12 * std::max(1.0, x_max_ - x_min_); }

  bool covers(double lo, double hi) const noexcept {
    return lo >= x_min_ - span_slack() && hi <= x_max_ + span_slack();
  }

  /// Index i of a cell [node(i), node(i+1)] containing x (x clamped to the span).
  std::size_t cell_of(double x) const noexcept {
    const std::size_t last = size() - 2;
    x = std::clamp(x, x_min_, x_max_);
    const double pos = (x - x_min_) / (x_max_ - x_min_) * static_cast<double>(size() - 1);
    auto i = static_cast<std::size_t>(std::min(std::floor(pos), static_cast<double>(last)));
    while (i > 0 && x < node(i)) --i;
    while (i < last && x > node(i + 1)) ++i;
    return i;
  }

  /// Piecewise-linear interpolant; exact at nodes, monotone within a cell.
  double operator()(double x) const noexcept {
    x = std::clamp(x, x_min_, x_max_);
    const std::size_t i = cell_of(x);
    const double left = node(i);
    const double right = node(i + 1);
    const double t = std::clamp((x - left) / (right - left), 0.0, 1.0);
    return std::lerp(samples_[i], samples_[i + 1], t);
  }

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  static double node_of(double x_min, double x_max, std::size_t n, std::size_t i) noexcept {
    if (i + 1 == n) return x_max;
    return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(n - 1);
  }

  double x_min_;
  double x_max_;
  std::vector<double> samples_;
};

inline double height_grid(const GridFunction& f) {
  return *std::max_element(f.samples().begin(), f.samples().end());
}

}  // namespace vagueq
