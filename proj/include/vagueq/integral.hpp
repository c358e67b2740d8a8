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
#include <numeric>
#include <string>
#include <vector>

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/interval_set.hpp"
#include "vagueq/measures.hpp"
#include "vagueq/quadrature.hpp"

namespace vagueq {

/// Superlevel set F_alpha = {x | f(x) >= alpha}, or {x | f(x) > alpha} when strict.
struct AlphaCut {
  double alpha;
  bool strict;
  IntervalSet cut;
};

namespace detail {

inline void require_alpha(double alpha) {
  if (!(alpha >= 0.0) || std::isnan(alpha)) throw Error("alpha must be >= 0, got " + text::exact(alpha));
}

}  // namespace detail

/// Cut boundaries are the linear-interpolation crossings of f with the level.
/// An isolated point where f touches alpha has zero length and is dropped.
inline AlphaCut alpha_cut(const GridFunction& f, double alpha, bool strict = false) {
  detail::require_alpha(alpha);
  const auto s = f.samples();
  auto in = [&](double v) { return strict ? v > alpha : v >= alpha; };
  auto crossing = [&](std::size_t i) {
    const double t = (alpha - s[i]) / (s[i + 1] - s[i]);
    return std::clamp(f.node(i) + t * (f.node(i + 1) - f.node(i)), f.node(i), f.node(i + 1));
  };
  std::vector<Interval> pieces;
  auto add = [&](double lo, double hi) {
    if (!(lo < hi)) return;
    if (!pieces.empty() && pieces.back().hi == lo) {
      pieces.back().hi = hi;
    } else {
      pieces.push_back({lo, hi});
    }
  };
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const bool left = in(s[i]);
    const bool right = in(s[i + 1]);
    if (left && right) {
      add(f.node(i), f.node(i + 1));
    } else if (left) {
      add(f.node(i), crossing(i));
    } else if (right) {
      add(crossing(i), f.node(i + 1));
    }
  }
  return {alpha, strict, IntervalSet(std::move(pieces))};
}

/// Finite-universe cut, in universe order.
inline Subset alpha_cut(const FiniteFuzzySet& f, double alpha, bool strict = false) {
  detail::require_alpha(alpha);
  Subset out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = f.grade(i).value();
    if (strict ? v > alpha : v >= alpha) out.push_back(f.universe()[i]);
  }
  return out;
}

/// Declared accuracy of grid Sugeno integrals: max(1e-6, 2 h sup|f'|).
inline double grid_tolerance(const GridFunction& f) {
  const auto s = f.samples();
  double steepest = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) steepest = std::max(steepest, std::abs(s[i + 1] - s[i]));
  return std::max(1e-6, 2.0 * steepest);
}

struct SugenoResult {
  double value;
  double tolerance;
};

/// Sugeno integral over a finite universe by the sorted-value formula:
/// sort a by f descending and take max_i min(f(x_(i)), mu({x_(1)..x_(i)})).
inline double sugeno_integral(const FiniteFuzzySet& f, const Subset& a, const MeasureSpec& m) {
  if (!m.is_finite()) throw Error("finite Sugeno integral needs a measure over a finite universe");
  detail::require_same_labels(f.universe(), m.universe());
  const SubsetMask domain = subset_mask(m.universe(), a);

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (domain & (SubsetMask{1} << i)) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return f.grade(x) > f.grade(y); });

  double best = 0.0;
  SubsetMask prefix = 0;
  for (std::size_t i : order) {
    prefix |= SubsetMask{1} << i;
    best = std::max(best, std::min(f.grade(i).value(), measure_of_mask(m, prefix)));
  }
  return best;
}

/// Sugeno integral of a grid function over an interval set.
///
/// g(alpha) = mu(a intersect F_alpha) is non-increasing, so alpha - g(alpha) is
/// non-decreasing and the supremum of min(alpha, g(alpha)) sits where the two
/// cross. The crossing is bracketed between consecutive candidate levels (0,
/// the node values inside a, and the interpolated values at a's endpoints) and
/// then refined by bisection to 1e-10.
inline SugenoResult sugeno_integral(const GridFunction& f, const IntervalSet& a, const MeasureSpec& m) {
  if (m.is_finite()) throw Error("grid Sugeno integral needs a measure defined on a grid");
  detail::require_within(f, a);
  detail::require_within(m.grid(), a);
  const double tolerance = grid_tolerance(f);
  if (a.empty()) return {0.0, tolerance};

  auto g = [&](double alpha) { return measure_of(m, a.intersect(alpha_cut(f, alpha).cut)); };

  std::vector<double> levels{0.0};
  for (const auto& iv : a.intervals()) {
    levels.push_back(f(iv.lo));
    levels.push_back(f(iv.hi));
    for (std::size_t i = f.cell_of(iv.lo); i < f.size(); ++i) {
      const double x = f.node(i);
      if (x > iv.hi) break;
      if (x >= iv.lo) levels.push_back(f.samples()[i]);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Largest candidate with alpha <= g(alpha); levels[0] = 0 always qualifies.
  std::size_t good = 0;
  std::size_t bad = levels.size();
  while (bad - good > 1) {
    const std::size_t mid = good + (bad - good) / 2;
    if (levels[mid] <= g(levels[mid])) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  if (bad == levels.size()) return {levels[good], tolerance};

  double lo = levels[good];
  double hi = levels[bad];
  double best = std::max(lo, g(hi));
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (mid <= gm) {
      lo = mid;
      best = std::max(best, mid);
    } else {
      hi = mid;
      best = std::max(best, gm);
    }
  }
  return {best, tolerance};
}

}  // namespace vagueq
