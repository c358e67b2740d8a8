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
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/text.hpp"

namespace vagueq::lang {

/// Reduced fraction with a positive denominator.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// A fuzzy subset of S*: every finite string over the alphabet has a grade.
class FuzzyLanguage {
 public:
  using GradeFn = std::function<double(std::string_view)>;

  FuzzyLanguage(std::string alphabet, GradeFn fn)
      : alphabet_(std::move(alphabet)), fn_(std::make_shared<const GradeFn>(std::move(fn))) {
    std::string sorted = alphabet_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("alphabet '" + alphabet_ + "' repeats a symbol");
    }
  }

  const std::string& alphabet() const noexcept { return alphabet_; }

  void require_word(std::string_view w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (alphabet_.find(w[i]) == std::string::npos) {
        throw Error("symbol '" + std::string(1, w[i]) + "' at position " + std::to_string(i) +
                    " is not in the alphabet '" + alphabet_ + "'");
      }
    }
  }

  Grade grade(std::string_view w) const {
    require_word(w);
    return Grade((*fn_)(w));
  }

 private:
  std::string alphabet_;
  std::shared_ptr<const GradeFn> fn_;
};

/// Grade of w in the language {0^i 1^j | i != j, i, j > 0}: j/i if i > j,
/// i/j otherwise. Strings outside the language grade 0.
inline Rational zero_one_grade_exact(std::string_view w) {
  const auto i = static_cast<std::int64_t>(w.find_first_not_of('0') == std::string_view::npos
                                               ? w.size()
                                               : w.find_first_not_of('0'));
  const auto rest = w.substr(static_cast<std::size_t>(i));
  const auto j = static_cast<std::int64_t>(rest.size());
  if (i == 0 || j == 0 || i == j || rest.find_first_not_of('1') != std::string_view::npos) return {0, 1};
  return i > j ? Rational(j, i) : Rational(i, j);
}

inline FuzzyLanguage zero_one_language() {
  return FuzzyLanguage("01", [](std::string_view w) { return zero_one_grade_exact(w).to_double(); });
}

/// Finite-support language; words missing from the table grade 0.
inline FuzzyLanguage table_language(std::string alphabet, std::map<std::string, double> table) {
  FuzzyLanguage probe(alphabet, [](std::string_view) { return 0.0; });
  for (const auto& [word, g] : table) {
    probe.require_word(word);
    static_cast<void>(Grade(g));
  }
  return FuzzyLanguage(std::move(alphabet), [table = std::move(table)](std::string_view w) {
    const auto it = table.find(std::string(w));
    return it == table.end() ? 0.0 : it->second;
  });
}

namespace detail {

inline void require_same_alphabet(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  if (a.alphabet() != b.alphabet()) {
    throw Error("alphabet mismatch: '" + a.alphabet() + "' vs '" + b.alphabet() + "'");
  }
}

}  // namespace detail

inline FuzzyLanguage language_union(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  detail::require_same_alphabet(a, b);
  return FuzzyLanguage(a.alphabet(), [a, b](std::string_view w) {
    return std::max(a.grade(w).value(), b.grade(w).value());
  });
}

inline FuzzyLanguage language_intersection(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  detail::require_same_alphabet(a, b);
  return FuzzyLanguage(a.alphabet(), [a, b](std::string_view w) {
    return std::min(a.grade(w).value(), b.grade(w).value());
  });
}

inline FuzzyLanguage language_complement(const FuzzyLanguage& a) {
  return FuzzyLanguage(a.alphabet(), [a](std::string_view w) { return 1.0 - a.grade(w).value(); });
}

/// `word,grade` lines; the empty word is written `ε` or left blank.
inline FuzzyLanguage read_language_table(std::istream& in, std::string alphabet) {
  std::map<std::string, double> table;
  for (const auto& line : text::content_lines(in)) {
    const auto comma = line.content.rfind(',');
    if (comma == std::string::npos) throw Error("line " + std::to_string(line.number) + ": expected 'word,grade'");
    std::string word(text::trim(std::string_view(line.content).substr(0, comma)));
    if (word == "ε") word.clear();
    const double g = text::parse_real(std::string_view(line.content).substr(comma + 1), "grade");
    if (!table.emplace(word, g).second) {
      throw Error("line " + std::to_string(line.number) + ": word '" + word + "' listed twice");
    }
  }
  return table_language(std::move(alphabet), std::move(table));
}

inline FuzzyLanguage read_language_table_file(const std::string& path, std::string alphabet) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_language_table(in, std::move(alphabet));
}

}  // namespace vagueq::lang
