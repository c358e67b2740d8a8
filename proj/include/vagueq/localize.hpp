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
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/grid_io.hpp"
#include "vagueq/integral.hpp"
#include "vagueq/measures.hpp"
#include "vagueq/quadrature.hpp"
#include "vagueq/text.hpp"

namespace vagueq {

inline constexpr std::size_t kDefaultGridPoints = 10001;
inline constexpr std::size_t kMinGridPoints = 101;

struct Gaussian {
  double mu;
  double sigma;
};

/// n-th stationary state of a particle in a box [0, L].
struct BoxEigenstate {
  int n;
  double length;
};

/// |Psi|^2 supplied directly as samples.
struct SampledDensity {
  GridFunction density;
};

/// Where and how a position density |Psi(x,t)|^2 is sampled. Built-in shapes
/// are stationary; `time` is carried into reports as a label only.
struct WavefunctionSpec {
  std::variant<Gaussian, BoxEigenstate, SampledDensity> shape;
  double x_min;
  double x_max;
  std::size_t grid_points;
  double time = 0.0;

  /// Default domain mu +- 8 sigma.
  static WavefunctionSpec gaussian(double mu, double sigma, std::size_t grid = kDefaultGridPoints) {
    return {Gaussian{mu, sigma}, mu - 8.0 * sigma, mu + 8.0 * sigma, grid};
  }

  static WavefunctionSpec box(int n, double length, std::size_t grid = kDefaultGridPoints) {
    return {BoxEigenstate{n, length}, 0.0, length, grid};
  }

  static WavefunctionSpec sampled(GridFunction density) {
    const double lo = density.x_min();
    const double hi = density.x_max();
    const std::size_t n = density.size();
    return {SampledDensity{std::move(density)}, lo, hi, n};
  }
};

inline GridFunction realize_density(const WavefunctionSpec& w) {
  if (const auto* s = std::get_if<SampledDensity>(&w.shape)) return s->density;
  if (w.grid_points < kMinGridPoints) {
    throw Error("grid needs at least " + std::to_string(kMinGridPoints) + " points, got " +
                std::to_string(w.grid_points));
  }
  if (!(w.x_min < w.x_max)) throw Error("domain requires x_min < x_max");
  if (const auto* g = std::get_if<Gaussian>(&w.shape)) {
    if (!(g->sigma > 0.0) || !std::isfinite(g->sigma) || !std::isfinite(g->mu)) {
      throw Error("gaussian requires finite mu and sigma > 0");
    }
    const double scale = 1.0 / (g->sigma * std::sqrt(2.0 * std::numbers::pi));
    return GridFunction::sample(w.x_min, w.x_max, w.grid_points, [&](double x) {
      const double z = (x - g->mu) / g->sigma;
      return scale * std::exp(-0.5 * z * z);
    });
  }
  const auto& b = std::get<BoxEigenstate>(w.shape);
  if (b.n < 1 || b.n > 50) throw Error("box eigenstate index must be in [1, 50], got " + std::to_string(b.n));
  if (!(b.length > 0.0) || !std::isfinite(b.length)) throw Error("box length must be positive");
  if (w.x_min != 0.0 || w.x_max != b.length) throw Error("box eigenstates are sampled on [0, L]");
  return GridFunction::sample(0.0, b.length, w.grid_points, [&](double x) {
    const double s = std::sin(b.n * std::numbers::pi * x / b.length);
    return 2.0 / b.length * s * s;
  });
}

/// Parses `gaussian:mu=0,sigma=1`, `box:n=1,L=1` or `samples:path=FILE`.
/// Domain and grid take their defaults; callers override them afterwards.
inline WavefunctionSpec parse_wavefunction(std::string_view s) {
  s = text::trim(s);
  const auto colon = s.find(':');
  const auto kind = s.substr(0, colon);
  std::vector<std::pair<std::string, std::string>> params;
  if (colon != std::string_view::npos) {
    for (auto field : text::split(s.substr(colon + 1), ',')) {
      const auto eq = field.find('=');
      if (eq == std::string_view::npos) throw Error("wavefunction parameter '" + std::string(field) + "' lacks '='");
      params.emplace_back(text::trim(field.substr(0, eq)), text::trim(field.substr(eq + 1)));
    }
  }
  auto take = [&](std::string_view key) -> std::optional<std::string> {
    for (auto it = params.begin(); it != params.end(); ++it) {
      if (it->first == key) {
        auto value = it->second;
        params.erase(it);
        return value;
      }
    }
    return std::nullopt;
  };
  auto finish = [&](WavefunctionSpec spec) {
    if (!params.empty()) throw Error("unknown wavefunction parameter '" + params.front().first + "'");
    return spec;
  };
  if (kind == "gaussian") {
    const auto mu = take("mu");
    const auto sigma = take("sigma");
    return finish(WavefunctionSpec::gaussian(mu ? text::parse_real(*mu, "mu") : 0.0,
                                             sigma ? text::parse_real(*sigma, "sigma") : 1.0));
  }
  if (kind == "box") {
    const auto n = take("n");
    auto length = take("L");
    if (!length) length = take("length");
    return finish(WavefunctionSpec::box(n ? static_cast<int>(text::parse_integer(*n, "n")) : 1,
                                        length ? text::parse_real(*length, "L") : 1.0));
  }
  if (kind == "samples") {
    const auto path = take("path");
    if (!path) throw Error("samples wavefunction needs path=FILE");
    return finish(WavefunctionSpec::sampled(read_grid_csv_file(*path)));
  }
  throw Error("unknown wavefunction kind '" + std::string(kind) + "' (expected gaussian, box or samples)");
}

struct LocalizationReport {
  double a;
  double b;
  double time;
  double probability;
  double possibility;
  double possibility_sugeno;
  double density_norm;
  double grid_tolerance;
};

/// Probability (integral of the density over [a, b)) next to possibility
/// (sup of the height-normalized density, and its Sugeno integral against
/// its own possibility measure).
inline LocalizationReport localize(const GridFunction& density, double a, double b, double time = 0.0) {
  if (!(a < b)) throw Error("localization interval needs a < b");
  if (!density.covers(a, b)) {
    throw Error("interval [" + text::exact(a) + ", " + text::exact(b) + ") outside domain [" +
                text::exact(density.x_min()) + ", " + text::exact(density.x_max()) + "]");
  }
  const auto interval = IntervalSet::single(a, b);
  const auto pi = normalize_to_possibility(density);
  const auto measure = MeasureSpec::possibility(pi);
  const auto sugeno = sugeno_integral(pi, interval, measure);
  return {a,
          b,
          time,
          lebesgue_integral(density, interval),
          measure_of(measure, interval),
          sugeno.value,
          lebesgue_integral(density, full_domain(density)),
          sugeno.tolerance};
}

inline LocalizationReport localize(const WavefunctionSpec& w, double a, double b) {
  return localize(realize_density(w), a, b, w.time);
}

inline void write_report(std::ostream& out, const LocalizationReport& r) {
  out << "a = " << text::fixed9(r.a) << '\n'
      << "b = " << text::fixed9(r.b) << '\n'
      << "t = " << text::fixed9(r.time) << '\n'
      << "probability = " << text::fixed9(r.probability) << '\n'
      << "possibility = " << text::fixed9(r.possibility) << '\n'
      << "possibility_sugeno = " << text::fixed9(r.possibility_sugeno) << '\n'
      << "density_norm = " << text::fixed9(r.density_norm) << '\n'
      << "grid_tolerance = " << text::fixed9(r.grid_tolerance) << '\n';
}

struct SweepRow {
  double a;
  double b;
  double probability;
  double possibility;
};

/// Windows [x, x + width) stepped by `step` across the density's domain.
inline std::vector<SweepRow> sweep(const GridFunction& density, double width, double step) {
  if (!(width > 0.0) || !(step > 0.0)) throw Error("sweep width and step must be positive");
  const double span = density.x_max() - density.x_min();
  if (width > span + density.span_slack()) throw Error("sweep width exceeds the domain");
  const auto measure = MeasureSpec::possibility(normalize_to_possibility(density));
  std::vector<SweepRow> rows;
  for (std::size_t k = 0;; ++k) {
    const double lo = density.x_min() + static_cast<double>(k) * step;
    const double hi = std::min(lo + width, density.x_max());
    if (lo + width > density.x_max() + density.span_slack()) break;
    const auto interval = IntervalSet::single(lo, hi);
    rows.push_back({lo, hi, lebesgue_integral(density, interval), measure_of(measure, interval)});
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "a,b,probability,possibility\n";
  for (const auto& r : rows) {
    out << text::exact(r.a) << ',' << text::exact(r.b) << ',' << text::exact(r.probability) << ','
        << text::exact(r.possibility) << '\n';
  }
}

}  // namespace vagueq
