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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/text.hpp"

namespace vagueq::qm {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kDefaultEntanglementTolerance = 1e-10;
inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

namespace detail {

template <std::size_t N>
void require_normalized(const std::array<Amplitude, N>& amps, std::string_view what) {
  double total = 0.0;
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(std::string(what) + " has a non-finite amplitude");
    }
    total += std::norm(a);
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error(std::string(what) + " is not normalized: sum of |amplitude|^2 = " + text::exact(total));
  }
}

}  // namespace detail

/// a0|0> + a1|1> with |a0|^2 + |a1|^2 = 1.
class QubitState {
 public:
  QubitState(Amplitude a0, Amplitude a1) : amps_{a0, a1} { detail::require_normalized(amps_, "qubit state"); }

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }

  Amplitude a0() const noexcept { return amps_[0]; }
  Amplitude a1() const noexcept { return amps_[1]; }
  const std::array<Amplitude, 2>& amplitudes() const noexcept { return amps_; }
  double norm_squared() const noexcept { return std::norm(amps_[0]) + std::norm(amps_[1]); }

  friend bool operator==(const QubitState&, const QubitState&) = default;

 private:
  std::array<Amplitude, 2> amps_;
};

/// Single-qubit gate as a row-major 2x2 unitary.
class Gate {
 public:
  static Gate hadamard() { return Gate("H", {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}); }
  static Gate pauli_x() { return Gate("X", {0.0, 1.0, 1.0, 0.0}); }
  static Gate pauli_z() { return Gate("Z", {1.0, 0.0, 0.0, -1.0}); }

  /// Arbitrary matrix; U^dagger U = I is checked entrywise within 1e-9.
  static Gate unitary(const std::array<Amplitude, 4>& m, std::string name = "U") {
    for (const auto& z : m) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error("gate has a non-finite entry");
    }
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const Amplitude dot = std::conj(m[r]) * m[c] + std::conj(m[2 + r]) * m[2 + c];
        const Amplitude expected = r == c ? 1.0 : 0.0;
        if (std::abs(dot - expected) > kNormTolerance) throw Error("gate matrix is not unitary");
      }
    }
    return Gate(std::move(name), m);
  }

  static Gate parse(std::string_view s) {
    s = text::trim(s);
    if (s == "H" || s == "h") return hadamard();
    if (s == "X" || s == "x") return pauli_x();
    if (s == "Z" || s == "z") return pauli_z();
    if (s.starts_with("U:") || s.starts_with("u:")) {
      const auto fields = text::split(s.substr(2), ',');
      if (fields.size() != 8) throw Error("custom gate needs 8 numbers: re,im for m00,m01,m10,m11");
      std::array<Amplitude, 4> m;
      for (std::size_t k = 0; k < 4; ++k) {
        m[k] = {text::parse_real(fields[2 * k], "gate entry"), text::parse_real(fields[2 * k + 1], "gate entry")};
      }
      return unitary(m);
    }
    throw Error("unknown gate '" + std::string(s) + "' (expected H, X, Z or U:...)");
  }

  const std::string& name() const noexcept { return name_; }
  const std::array<Amplitude, 4>& matrix() const noexcept { return m_; }

  std::array<Amplitude, 2> act(Amplitude x0, Amplitude x1) const noexcept {
    return {m_[0] * x0 + m_[1] * x1, m_[2] * x0 + m_[3] * x1};
  }

  QubitState apply(const QubitState& s) const {
    const auto [b0, b1] = act(s.a0(), s.a1());
    return {b0, b1};
  }

 private:
  Gate(std::string name, const std::array<Amplitude, 4>& m) : name_(std::move(name)), m_(m) {}

  std::string name_;
  std::array<Amplitude, 4> m_;
};

/// H: a0|0> + a1|1>  ->  ((a0 + a1)/sqrt2)|0> + ((a0 - a1)/sqrt2)|1>.
inline QubitState apply_hadamard(const QubitState& s) {
  return {(s.a0() + s.a1()) * kInvSqrt2, (s.a0() - s.a1()) * kInvSqrt2};
}

// ---------------------------------------------------------------------------
// Fuzzy reading of a qubit

/// Memberships in |0> and |1>. Their sum is unconstrained.
struct FuzzyQubitState {
  Grade mu0;
  Grade mu1;

  /// mu0 + mu1 = 1 within 1e-9, i.e. the memberships also read as Born probabilities.
  bool born_compatible() const noexcept { return std::abs(mu0.value() + mu1.value() - 1.0) <= kNormTolerance; }

  friend bool operator==(const FuzzyQubitState&, const FuzzyQubitState&) = default;
};

inline FuzzyQubitState make_fuzzy_state(double mu0, double mu1) {
  try {
    return {Grade(mu0), Grade(mu1)};
  } catch (const Error& e) {
    throw Error(std::string("membership ") + e.what());
  }
}

/// mu0 = |a0|^2, mu1 = |a1|^2.
inline FuzzyQubitState fuzzify(const QubitState& s) {
  return {Grade(std::min(1.0, std::norm(s.a0()))), Grade(std::min(1.0, std::norm(s.a1())))};
}

/// Two-element fuzzy set over {ket0, ket1}, for use with the set algebra.
inline FiniteFuzzySet as_fuzzy_set(const FuzzyQubitState& s) {
  return FiniteFuzzySet({"ket0", "ket1"}, std::vector<Grade>{s.mu0, s.mu1});
}

enum class Defuzzifier { argmax, born_sample };

inline Defuzzifier parse_defuzzifier(std::string_view name) {
  if (name == "argmax" || name == "max") return Defuzzifier::argmax;
  if (name == "born" || name == "born_sample") return Defuzzifier::born_sample;
  throw Error("unknown defuzzification method '" + std::string(name) + "' (expected argmax or born)");
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

inline double probability_of_zero(const FuzzyQubitState& s) {
  const double total = s.mu0.value() + s.mu1.value();
  if (!(total > 0.0)) throw Error("cannot sample a fuzzy state with zero total membership");
  return s.mu0.value() / total;
}

}  // namespace detail

struct SampleCounts {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  double frequency0() const noexcept {
    const auto n = zeros + ones;
    return n == 0 ? 0.0 : static_cast<double>(zeros) / static_cast<double>(n);
  }
};

/// `shots` Born-rule draws from one generator seeded with `seed`.
inline SampleCounts born_samples(const FuzzyQubitState& s, std::uint64_t shots, std::uint64_t seed) {
  const double p0 = detail::probability_of_zero(s);
  std::mt19937_64 gen(seed);
  SampleCounts counts;
  for (std::uint64_t k = 0; k < shots; ++k) {
    if (detail::unit_uniform(gen) < p0) {
      ++counts.zeros;
    } else {
      ++counts.ones;
    }
  }
  return counts;
}

/// Collapses memberships to a basis label. argmax breaks ties
/// (|mu0 - mu1| <= 1e-12) toward 0; born_sample draws 0 with probability
/// mu0 / (mu0 + mu1).
inline int defuzzify(const FuzzyQubitState& s, Defuzzifier method, std::uint64_t seed = 0) {
  switch (method) {
    case Defuzzifier::argmax:
      return s.mu1.value() - s.mu0.value() > 1e-12 ? 1 : 0;
    case Defuzzifier::born_sample:
      return born_samples(s, 1, seed).zeros == 1 ? 0 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Two qubits

/// Amplitudes ordered |00>, |01>, |10>, |11>.
class TwoQubitState {
 public:
  explicit TwoQubitState(const std::array<Amplitude, 4>& amps) : amps_(amps) {
    detail::require_normalized(amps_, "two-qubit state");
  }

  /// (|00> + |11>) / sqrt2.
  static TwoQubitState bell() { return TwoQubitState({kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }

  const std::array<Amplitude, 4>& amplitudes() const noexcept { return amps_; }
  Amplitude amplitude(int first, int second) const { return amps_.at(2 * first + second); }

  double norm_squared() const noexcept {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
  }

  friend bool operator==(const TwoQubitState&, const TwoQubitState&) = default;

 private:
  std::array<Amplitude, 4> amps_;
};

inline TwoQubitState tensor_product(const QubitState& a, const QubitState& b) {
  return TwoQubitState({a.a0() * b.a0(), a.a0() * b.a1(), a.a1() * b.a0(), a.a1() * b.a1()});
}

/// det of M[i][j] = amplitude of |ij>; zero exactly for product states.
inline Amplitude amplitude_determinant(const TwoQubitState& s) {
  const auto& a = s.amplitudes();
  return a[0] * a[3] - a[1] * a[2];
}

inline bool is_entangled(const TwoQubitState& s, double tol = kDefaultEntanglementTolerance) {
  if (!(tol > 0.0)) throw Error("entanglement tolerance must be positive");
  return std::abs(amplitude_determinant(s)) > tol;
}

enum class Qubit { first, second };

/// Applies a single-qubit gate to one side of a two-qubit state.
inline TwoQubitState apply_local(const Gate& g, const TwoQubitState& s, Qubit which) {
  auto a = s.amplitudes();
  if (which == Qubit::first) {
    for (int j = 0; j < 2; ++j) {
      const auto [x0, x1] = g.act(a[j], a[2 + j]);
      a[j] = x0;
      a[2 + j] = x1;
    }
  } else {
    for (int i = 0; i < 2; ++i) {
      const auto [x0, x1] = g.act(a[2 * i], a[2 * i + 1]);
      a[2 * i] = x0;
      a[2 * i + 1] = x1;
    }
  }
  return TwoQubitState(a);
}

// ---------------------------------------------------------------------------
// State literals: `|0>`, `|1>`, `bell`, `amp re,im,re,im,...`

namespace detail {

template <std::size_t N>
std::array<Amplitude, N> parse_amplitudes(std::string_view body) {
  const auto fields = text::split(text::trim(body), ',');
  if (fields.size() != 2 * N) {
    throw Error("amp literal needs " + std::to_string(2 * N) + " numbers (re,im per basis ket), got " +
                std::to_string(fields.size()));
  }
  std::array<Amplitude, N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = {text::parse_real(fields[2 * k], "amplitude"), text::parse_real(fields[2 * k + 1], "amplitude")};
  }
  return out;
}

inline std::optional<std::string_view> amp_body(std::string_view s) {
  if (s.size() > 3 && s.starts_with("amp") && (s[3] == ' ' || s[3] == ':' || s[3] == '\t')) {
    return s.substr(4);
  }
  return std::nullopt;
}

}  // namespace detail

inline QubitState parse_qubit(std::string_view s) {
  s = text::trim(s);
  if (s == "|0>" || s == "0") return QubitState::zero();
  if (s == "|1>" || s == "1") return QubitState::one();
  if (auto body = detail::amp_body(s)) {
    const auto a = detail::parse_amplitudes<2>(*body);
    return {a[0], a[1]};
  }
  throw Error("unknown qubit literal '" + std::string(s) + "' (expected |0>, |1> or amp re,im,re,im)");
}

inline TwoQubitState parse_two_qubit(std::string_view s) {
  s = text::trim(s);
  if (s == "bell") return TwoQubitState::bell();
  static constexpr std::array<std::string_view, 4> kets{"|00>", "|01>", "|10>", "|11>"};
  for (std::size_t k = 0; k < kets.size(); ++k) {
    if (s == kets[k]) {
      std::array<Amplitude, 4> a{};
      a[k] = 1.0;
      return TwoQubitState(a);
    }
  }
  if (auto body = detail::amp_body(s)) return TwoQubitState(detail::parse_amplitudes<4>(*body));
  throw Error("unknown two-qubit literal '" + std::string(s) + "' (expected bell, |ab> or amp with 8 numbers)");
}

}  // namespace vagueq::qm
