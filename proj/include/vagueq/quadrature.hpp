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

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/interval_set.hpp"

namespace vagueq {

namespace detail {

inline void require_within(const GridFunction& f, const IntervalSet& a) {
  for (const auto& iv : a.intervals()) {
    if (!f.covers(iv.lo, iv.hi)) {
      throw Error("interval [" + text::exact(iv.lo) + ", " + text::exact(iv.hi) +
                  ") outside grid domain [" + text::exact(f.x_min()) + ", " + text::exact(f.x_max()) +
                  "]");
    }
  }
}

// Exact integral of the piecewise-linear interpolant over [lo, hi].
inline double integrate_piece(const GridFunction& f, double lo, double hi) {
  lo = std::clamp(lo, f.x_min(), f.x_max());
  hi = std::clamp(hi, f.x_min(), f.x_max());
  if (!(lo < hi)) return 0.0;
  const auto s = f.samples();
  const std::size_t first = f.cell_of(lo);
  const std::size_t last = f.cell_of(hi);
  if (first == last) return 0.5 * (f(lo) + f(hi)) * (hi - lo);

  double total = 0.5 * (f(lo) + s[first + 1]) * (f.node(first + 1) - lo);
  for (std::size_t i = first + 1; i < last; ++i) {
    total += 0.5 * (s[i] + s[i + 1]) * (f.node(i + 1) - f.node(i));
  }
  total += 0.5 * (s[last] + f(hi)) * (hi - f.node(last));
  return total;
}

// Max of the interpolant over the closure [lo, hi]; attained at an endpoint or a node.
inline double sup_piece(const GridFunction& f, double lo, double hi) {
  lo = std::clamp(lo, f.x_min(), f.x_max());
  hi = std::clamp(hi, f.x_min(), f.x_max());
  double best = std::max(f(lo), f(hi));
  const auto s = f.samples();
  for (std::size_t i = f.cell_of(lo); i <= f.cell_of(hi) + 1 && i < f.size(); ++i) {
    const double x = f.node(i);
    if (x >= lo && x <= hi) best = std::max(best, s[i]);
  }
  return best;
}

}  // namespace detail

/// Composite trapezoid integral of f over a, with linearly interpolated
/// values at cut points that fall between grid nodes.
inline double lebesgue_integral(const GridFunction& f, const IntervalSet& a) {
  detail::require_within(f, a);
  double total = 0.0;
  for (const auto& iv : a.intervals()) total += detail::integrate_piece(f, iv.lo, iv.hi);
  return total;
}

/// Supremum of the interpolant over the closure of a; 0 for the empty set.
inline double interval_sup(const GridFunction& f, const IntervalSet& a) {
  detail::require_within(f, a);
  double best = 0.0;
  for (const auto& iv : a.intervals()) best = std::max(best, detail::sup_piece(f, iv.lo, iv.hi));
  return best;
}

inline IntervalSet full_domain(const GridFunction& f) { return IntervalSet::single(f.x_min(), f.x_max()); }

}  // namespace vagueq
