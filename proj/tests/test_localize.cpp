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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "vagueq/localize.hpp"

namespace vagueq {
namespace {

const double kOneSigma = std::erf(1.0 / std::numbers::sqrt2);

TEST(RealizeDensity, GaussianPeak) {
  const auto d = realize_density(WavefunctionSpec::gaussian(0.0, 1.0));
  EXPECT_EQ(d.x_min(), -8.0);
  EXPECT_EQ(d.x_max(), 8.0);
  EXPECT_EQ(d.size(), kDefaultGridPoints);
  EXPECT_NEAR(d(0.0), 0.398942, 1e-6);
  EXPECT_NEAR(d(0.0), 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-15);
}

TEST(RealizeDensity, BoxEigenstate) {
  const auto d = realize_density(WavefunctionSpec::box(1, 1.0));
  EXPECT_EQ(d(0.5), 2.0);
  EXPECT_EQ(d(0.0), 0.0);
  for (int n : {2, 7, 50}) {
    const auto dn = realize_density(WavefunctionSpec::box(n, 3.0));
    EXPECT_EQ(dn(0.0), 0.0);
    EXPECT_NEAR(dn(3.0), 0.0, 1e-12);
    EXPECT_NEAR(lebesgue_integral(dn, full_domain(dn)), 1.0, 1e-4);
  }
}

TEST(RealizeDensity, Nonnegative) {
  for (const auto& w : {WavefunctionSpec::gaussian(1.5, 0.3), WavefunctionSpec::box(3, 2.0)}) {
    const auto d = realize_density(w);
    for (double v : d.samples()) EXPECT_GE(v, 0.0);
  }
}

TEST(RealizeDensity, InvalidParameters) {
  EXPECT_THROW(realize_density(WavefunctionSpec::gaussian(0.0, 0.0)), Error);
  EXPECT_THROW(realize_density(WavefunctionSpec::gaussian(0.0, -1.0)), Error);
  EXPECT_THROW(realize_density(WavefunctionSpec::box(0, 1.0)), Error);
  EXPECT_THROW(realize_density(WavefunctionSpec::box(51, 1.0)), Error);
  EXPECT_THROW(realize_density(WavefunctionSpec::box(1, -1.0)), Error);
  EXPECT_THROW(realize_density(WavefunctionSpec::gaussian(0.0, 1.0, 100)), Error);
  auto shifted = WavefunctionSpec::box(1, 1.0);
  shifted.x_min = -0.5;
  EXPECT_THROW(realize_density(shifted), Error);
}

TEST(ParseWavefunction, Forms) {
  const auto g = parse_wavefunction("gaussian:mu=1,sigma=0.5");
  EXPECT_EQ(g.x_min, 1.0 - 4.0);
  EXPECT_EQ(g.x_max, 1.0 + 4.0);
  const auto b = parse_wavefunction("box:n=2,L=3");
  EXPECT_EQ(std::get<BoxEigenstate>(b.shape).n, 2);
  EXPECT_EQ(b.x_max, 3.0);
  EXPECT_THROW(parse_wavefunction("gaussian:mu=0,width=1"), Error);
  EXPECT_THROW(parse_wavefunction("gaussian:mu"), Error);
  EXPECT_THROW(parse_wavefunction("lorentzian"), Error);
  EXPECT_THROW(parse_wavefunction("samples:"), Error);
}

TEST(ParseWavefunction, SamplesFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "vagueq_localize_samples.csv";
  {
    std::ofstream out(path);
    out << "x,value\n0,0\n0.5,1\n1,2\n1.5,1\n2,0\n";
  }
  const auto w = parse_wavefunction("samples:path=" + path.string());
  const auto d = realize_density(w);
  EXPECT_EQ(d.size(), 5u);
  const auto r = localize(w, 0.5, 1.5);
  EXPECT_DOUBLE_EQ(r.probability, 1.5);
  EXPECT_EQ(r.possibility, 1.0);
  EXPECT_DOUBLE_EQ(r.density_norm, 2.0);
  std::filesystem::remove(path);
}

TEST(Localize, OneSigmaGaussian) {
  const auto r = localize(WavefunctionSpec::gaussian(0.0, 1.0), -1.0, 1.0);
  EXPECT_NEAR(r.probability, 0.682689, 1e-4);
  EXPECT_NEAR(r.probability, kOneSigma, 1e-4);
  EXPECT_NEAR(r.possibility, 1.0, 1e-9);
  EXPECT_NEAR(r.possibility_sugeno, r.possibility, r.grid_tolerance);
  EXPECT_NEAR(r.density_norm, 1.0, 1e-6);
}

TEST(Localize, TailInterval) {
  const auto r = localize(WavefunctionSpec::gaussian(0.0, 1.0), 2.0, 3.0);
  EXPECT_NEAR(r.possibility, 0.135335, r.grid_tolerance);
  EXPECT_NEAR(r.possibility, std::exp(-2.0), 1e-9);
  EXPECT_NEAR(r.probability, 0.5 * (std::erf(3.0 / std::numbers::sqrt2) - std::erf(2.0 / std::numbers::sqrt2)), 1e-6);
  EXPECT_NEAR(r.possibility_sugeno, r.possibility, r.grid_tolerance);
}

TEST(Localize, RecordsTime) {
  auto w = WavefunctionSpec::gaussian(0.0, 1.0);
  w.time = 2.5;
  EXPECT_EQ(localize(w, -1.0, 1.0).time, 2.5);
}

TEST(Localize, Errors) {
  const auto w = WavefunctionSpec::gaussian(0.0, 1.0);
  EXPECT_THROW(localize(w, 1.0, 1.0), Error);
  EXPECT_THROW(localize(w, 1.0, -1.0), Error);
  EXPECT_THROW(localize(w, -9.0, 0.0), Error);
  EXPECT_THROW(localize(w, 0.0, 8.5), Error);
}

TEST(Localize, WholeDomainLimits) {
  for (const auto& w : {WavefunctionSpec::gaussian(0.3, 2.0), WavefunctionSpec::box(4, 2.0)}) {
    const auto r = localize(w, w.x_min, w.x_max);
    EXPECT_NEAR(r.probability, r.density_norm, 1e-6);
    EXPECT_NEAR(r.possibility, 1.0, 1e-9);
  }
}

TEST(Localize, MonotoneInInterval) {
  const auto d = realize_density(WavefunctionSpec::box(3, 1.0));
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 4> c{u(rng), u(rng), u(rng), u(rng)};
    std::sort(c.begin(), c.end());
    if (c[1] == c[2]) continue;
    const auto inner = localize(d, c[1], c[2]);
    const auto outer = localize(d, c[0], c[3]);
    EXPECT_LE(inner.probability, outer.probability + 1e-12);
    EXPECT_LE(inner.possibility, outer.possibility + 1e-12);
  }
}

TEST(Localize, IntervalsAroundTheModeAreFullyPossible) {
  const auto d = realize_density(WavefunctionSpec::gaussian(0.7, 0.4));
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> left(d.x_min(), 0.7);
  std::uniform_real_distribution<double> right(0.7, d.x_max());
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_NEAR(localize(d, left(rng), right(rng)).possibility, 1.0, 1e-9);
  }
}

TEST(Localize, SugenoMatchesPossibility) {
  const auto d = realize_density(WavefunctionSpec::gaussian(0.0, 1.0));
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  int checked = 0;
  while (checked < 200) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    const auto r = localize(d, a, b);
    EXPECT_NEAR(r.possibility_sugeno, r.possibility, r.grid_tolerance) << a << ", " << b;
    ++checked;
  }
}

TEST(Localize, ReportFormat) {
  std::ostringstream out;
  write_report(out, localize(WavefunctionSpec::gaussian(0.0, 1.0), -1.0, 1.0));
  const auto s = out.str();
  EXPECT_NE(s.find("a = -1.000000000\n"), std::string::npos);
  EXPECT_NE(s.find("possibility = 1.000000000\n"), std::string::npos);
  EXPECT_NE(s.find("probability = 0.68"), std::string::npos);
  EXPECT_NE(s.find("grid_tolerance = "), std::string::npos);
}

TEST(Sweep, WindowsAndCsv) {
  const auto d = realize_density(WavefunctionSpec::box(1, 1.0));
  const auto rows = sweep(d, 0.25, 0.25);
  ASSERT_EQ(rows.size(), 4u);
  double total = 0.0;
  for (const auto& r : rows) total += r.probability;
  EXPECT_NEAR(total, lebesgue_integral(d, full_domain(d)), 1e-12);
  EXPECT_EQ(rows[1].possibility, 1.0);
  EXPECT_EQ(rows[2].possibility, 1.0);
  EXPECT_LT(rows[0].possibility, 1.0);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, 28), "a,b,probability,possibility\n");
  EXPECT_THROW(sweep(d, 2.0, 0.1), Error);
  EXPECT_THROW(sweep(d, 0.1, 0.0), Error);
}

}  // namespace
}  // namespace vagueq
