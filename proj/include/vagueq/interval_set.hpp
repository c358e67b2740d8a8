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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vagueq/error.hpp"
#include "vagueq/text.hpp"

namespace vagueq {

/// Half-open interval [lo, hi).
struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of sorted, pairwise disjoint half-open intervals.
class IntervalSet {
 public:
  IntervalSet() = default;

  explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      const auto& iv = intervals_[i];
      if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi)) {
        throw Error("interval [" + text::exact(iv.lo) + ", " + text::exact(iv.hi) +
                    ") must satisfy lo < hi");
      }
      if (i > 0 && intervals_[i - 1].hi > iv.lo) {
        throw Error("intervals must be sorted and disjoint: [" + text::exact(intervals_[i - 1].lo) +
                    ", " + text::exact(intervals_[i - 1].hi) + ") overlaps [" + text::exact(iv.lo) +
                    ", " + text::exact(iv.hi) + ")");
      }
    }
  }

  static IntervalSet single(double lo, double hi) { return IntervalSet({{lo, hi}}); }

  /// Sorts, drops empty pieces and merges overlapping or touching intervals.
  static IntervalSet from_unsorted(std::vector<Interval> pieces) {
    std::erase_if(pieces, [](const Interval& iv) { return !(iv.lo < iv.hi); });
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : pieces) {
      if (!merged.empty() && iv.lo <= merged.back().hi) {
        merged.back().hi = std::max(merged.back().hi, iv.hi);
      } else {
        merged.push_back(iv);
      }
    }
    return IntervalSet(std::move(merged));
  }

  std::span<const Interval> intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t size() const noexcept { return intervals_.size(); }

  double length() const noexcept {
    double total = 0.0;
    for (const auto& iv : intervals_) total += iv.length();
    return total;
  }

  IntervalSet unite(const IntervalSet& other) const {
    std::vector<Interval> all(intervals_);
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return from_unsorted(std::move(all));
  }

  IntervalSet intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < intervals_.size() && j < other.intervals_.size()) {
      const auto& a = intervals_[i];
      const auto& b = other.intervals_[j];
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (lo < hi) out.push_back({lo, hi});
      if (a.hi < b.hi) {
        ++i;
      } else {
        ++j;
      }
    }
    return IntervalSet(std::move(out));
  }

  /// True iff `other` is a subset of this set.
  bool contains(const IntervalSet& other) const {
    for (const auto& piece : other.intervals_) {
      const bool inside = std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
        return iv.lo <= piece.lo && piece.hi <= iv.hi;
      });
      if (!inside) return false;
    }
    return true;
  }

  bool overlaps(const IntervalSet& other) const { return !intersect(other).empty(); }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Parses `lo,hi;lo,hi;...`; `{}` or an empty string is the empty set.
/// Pieces may be given in any order and are merged.
inline IntervalSet parse_interval_set(std::string_view s) {
  s = text::trim(s);
  if (s.empty() || s == "{}") return {};
  std::vector<Interval> pieces;
  for (auto part : text::split(s, ';')) {
    const auto fields = text::split(text::trim(part), ',');
    if (fields.size() != 2) {
      throw Error("interval '" + std::string(part) + "' must be written as lo,hi");
    }
    const double lo = text::parse_real(fields[0], "interval bound");
    const double hi = text::parse_real(fields[1], "interval bound");
    if (!(lo < hi)) {
      throw Error("interval [" + text::exact(lo) + ", " + text::exact(hi) + ") is empty (need lo < hi)");
    }
    pieces.push_back({lo, hi});
  }
  return IntervalSet::from_unsorted(std::move(pieces));
}

inline std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& iv : s.intervals()) {
    if (!out.empty()) out += ';';
    out += text::exact(iv.lo) + "," + text::exact(iv.hi);
  }
  return out;
}

}  // namespace vagueq
