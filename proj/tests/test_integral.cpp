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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/random_instances.hpp"
#include "vagueq/integral.hpp"
#include "vagueq/testing/sugeno_oracle.hpp"

namespace vagueq {
namespace {

using testing::random_finite_instance;
using testing::sugeno_bruteforce_oracle;

GridFunction standard_normal() {
  return GridFunction::sample(-8.0, 8.0, 10001, [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  });
}

const FiniteFuzzySet kWorkedF({"x1", "x2", "x3"}, {0.2, 0.5, 0.9});
const FiniteFuzzySet kWorkedPi({"x1", "x2", "x3"}, {1.0, 0.6, 0.3});
const Subset kWorkedAll{"x1", "x2", "x3"};

// ---------------------------------------------------------------- alpha cuts

TEST(AlphaCut, TriangleCrossings) {
  const GridFunction tri(0.0, 2.0, {0.0, 1.0, 0.0});
  const auto c = alpha_cut(tri, 0.5);
  EXPECT_EQ(c.cut, IntervalSet::single(0.5, 1.5));
  EXPECT_FALSE(c.strict);
  EXPECT_EQ(c.alpha, 0.5);
}

TEST(AlphaCut, ZeroLevelIsWholeDomain) {
  const GridFunction tri(0.0, 2.0, {0.0, 1.0, 0.0});
  EXPECT_EQ(alpha_cut(tri, 0.0).cut, IntervalSet::single(0.0, 2.0));
}

TEST(AlphaCut, AboveMaximumIsEmpty) {
  const GridFunction tri(0.0, 2.0, {0.0, 1.0, 0.0});
  EXPECT_TRUE(alpha_cut(tri, 1.5).cut.empty());
}

TEST(AlphaCut, StrictExcludesPlateauAtLevel) {
  const GridFunction plateau(0.0, 3.0, {0.2, 0.5, 0.5, 0.2});
  EXPECT_EQ(alpha_cut(plateau, 0.5).cut, IntervalSet::single(1.0, 2.0));
  EXPECT_TRUE(alpha_cut(plateau, 0.5, true).cut.empty());
  const auto mid = alpha_cut(plateau, 0.35, true).cut;
  ASSERT_EQ(mid.size(), 1u);
  EXPECT_NEAR(mid.intervals()[0].lo, 0.5, 1e-15);
  EXPECT_NEAR(mid.intervals()[0].hi, 2.5, 1e-15);
}

TEST(AlphaCut, SeveralComponents) {
  const GridFunction bumps(0.0, 4.0, {0.0, 1.0, 0.0, 1.0, 0.0});
  EXPECT_EQ(alpha_cut(bumps, 0.5).cut, IntervalSet({{0.5, 1.5}, {2.5, 3.5}}));
}

TEST(AlphaCut, NegativeLevelRejected) {
  EXPECT_THROW(alpha_cut(GridFunction(0, 1, {0, 1}), -0.1), Error);
  EXPECT_THROW(alpha_cut(kWorkedF, -0.1), Error);
}

TEST(AlphaCut, FiniteUniverse) {
  EXPECT_EQ(alpha_cut(kWorkedF, 0.5), (Subset{"x2", "x3"}));
  EXPECT_EQ(alpha_cut(kWorkedF, 0.5, true), (Subset{"x3"}));
}

TEST(AlphaCut, MatchesDenseSamplingOfInterpolant) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> s(12);
    for (double& v : s) v = u(rng);
    const GridFunction f(0.0, 11.0, s);
    const double alpha = u(rng);
    const auto cut = alpha_cut(f, alpha).cut;
    for (int k = 0; k <= 2200; ++k) {
      const double x = 11.0 * k / 2200.0;
      const bool member = std::any_of(cut.intervals().begin(), cut.intervals().end(),
                                      [&](const Interval& iv) { return iv.lo <= x && x <= iv.hi; });
      if (std::abs(f(x) - alpha) > 1e-9) {
        EXPECT_EQ(member, f(x) >= alpha) << "x=" << x << " alpha=" << alpha;
      }
    }
  }
}

// ---------------------------------------------------------------- Lebesgue

TEST(LebesgueIntegral, ConstantOne) {
  EXPECT_EQ(lebesgue_integral(GridFunction(0.0, 1.0, {1.0, 1.0}), IntervalSet::single(0.0, 1.0)), 1.0);
  EXPECT_EQ(lebesgue_integral(GridFunction(0.0, 1.0, {1, 1, 1, 1, 1}), IntervalSet::single(0.0, 1.0)), 1.0);
  EXPECT_EQ(lebesgue_integral(GridFunction(0.0, 1.0, {1.0, 1.0}), IntervalSet{}), 0.0);
}

TEST(LebesgueIntegral, NormalAgainstErf) {
  EXPECT_NEAR(lebesgue_integral(standard_normal(), IntervalSet::single(-1.0, 1.0)),
              std::erf(1.0 / std::numbers::sqrt2), 1e-4);
}

TEST(LebesgueIntegral, OutsideSpanRejected) {
  EXPECT_THROW(lebesgue_integral(GridFunction(0, 1, {1, 1}), IntervalSet::single(0.5, 1.5)), Error);
}

TEST(LebesgueIntegral, PartialCellsIntegrateTheInterpolant) {
  const GridFunction ramp(0.0, 2.0, {0.0, 2.0, 0.0});
  // integral of 2x over [0.25, 0.75] is 0.5; of the peak tent over [0.5, 1.5] is 1.5
  EXPECT_NEAR(lebesgue_integral(ramp, IntervalSet::single(0.25, 0.75)), 0.5, 1e-15);
  EXPECT_NEAR(lebesgue_integral(ramp, IntervalSet::single(0.5, 1.5)), 1.5, 1e-15);
}

TEST(LebesgueIntegral, AdditiveOverDisjointSets) {
  const auto f = standard_normal();
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 4> c{u(rng), u(rng), u(rng), u(rng)};
    std::sort(c.begin(), c.end());
    const auto a = IntervalSet::single(c[0], c[1]);
    const auto b = IntervalSet::single(c[2], c[3]);
    const auto mid = IntervalSet::single(c[1], c[2]);
    EXPECT_NEAR(lebesgue_integral(f, a.unite(b)), lebesgue_integral(f, a) + lebesgue_integral(f, b), 1e-12);
    EXPECT_NEAR(lebesgue_integral(f, a.unite(mid)), lebesgue_integral(f, a) + lebesgue_integral(f, mid), 1e-12);
  }
}

TEST(LebesgueIntegral, SecondOrderConvergence) {
  // sin on [0, 3], integrated over [0.3, 2.1]; exact value cos(0.3) - cos(2.1)
  const double exact = std::cos(0.3) - std::cos(2.1);
  const auto a = IntervalSet::single(0.3, 2.1);
  std::vector<double> errors;
  for (std::size_t n : {31u, 61u, 121u, 241u}) {
    const auto f = GridFunction::sample(0.0, 3.0, n, [](double x) { return std::sin(x); });
    errors.push_back(std::abs(lebesgue_integral(f, a) - exact));
  }
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    EXPECT_NEAR(std::log2(errors[k] / errors[k + 1]), 2.0, 0.15);
  }
}

// ---------------------------------------------------------------- Sugeno, finite

TEST(SugenoFinite, WorkedInstance) {
  const auto m = MeasureSpec::possibility(kWorkedPi);
  EXPECT_EQ(sugeno_integral(kWorkedF, kWorkedAll, m), 0.5);
}

TEST(SugenoFinite, ConstantFunction) {
  const auto m = MeasureSpec::possibility(kWorkedPi);
  const FiniteFuzzySet c({"x1", "x2", "x3"}, {0.35, 0.35, 0.35});
  EXPECT_EQ(sugeno_integral(c, Subset{"x1", "x3"}, m), 0.35);
}

TEST(SugenoFinite, EmptyDomainAndZeroFunction) {
  const auto m = MeasureSpec::possibility(kWorkedPi);
  EXPECT_EQ(sugeno_integral(kWorkedF, Subset{}, m), 0.0);
  EXPECT_EQ(sugeno_integral(FiniteFuzzySet({"x1", "x2", "x3"}, {0, 0, 0}), kWorkedAll, m), 0.0);
}

TEST(SugenoFinite, DomainMismatch) {
  const auto m = MeasureSpec::possibility(kWorkedPi);
  EXPECT_THROW(sugeno_integral(FiniteFuzzySet({"y1", "x2", "x3"}, {0.1, 0.2, 0.3}), kWorkedAll, m), Error);
  EXPECT_THROW(sugeno_integral(kWorkedF, Subset{"q"}, m), Error);
  EXPECT_THROW(sugeno_integral(kWorkedF, kWorkedAll, MeasureSpec::additive(standard_normal())), Error);
}

TEST(SugenoFinite, TableMeasure) {
  // f = (0.8, 0.4), mu({a}) = 0.3, mu({b}) = 0.6: max(min(0.8, 0.3), min(0.4, 1)) = 0.4
  const auto m = MeasureSpec::table({"a", "b"}, {0.0, 0.3, 0.6, 1.0});
  EXPECT_EQ(sugeno_integral(FiniteFuzzySet({"a", "b"}, {0.8, 0.4}), Subset{"a", "b"}, m), 0.4);
  EXPECT_EQ(sugeno_integral(FiniteFuzzySet({"a", "b"}, {0.8, 0.4}), Subset{"a"}, m), 0.3);
}

TEST(SugenoFinite, TiesInFunctionValues) {
  const auto m = MeasureSpec::table({"a", "b", "c"}, {0.0, 0.2, 0.2, 0.7, 0.2, 0.7, 0.7, 1.0});
  EXPECT_EQ(sugeno_integral(FiniteFuzzySet({"a", "b", "c"}, {0.6, 0.6, 0.1}), Subset{"a", "b", "c"}, m), 0.6);
}

TEST(SugenoFinite, PossibilitySelfIntegrationIsSupremum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_finite_instance(rng, 8, 0);
    if (inst.measure.kind() != MeasureKind::possibilistic) continue;
    const auto& pi = std::get<FinitePossibility>(inst.measure.payload()).distribution;
    const double expected = measure_of(inst.measure, inst.domain);
    EXPECT_EQ(sugeno_integral(pi, inst.domain, inst.measure), expected);
    EXPECT_NEAR(sugeno_bruteforce_oracle(pi, inst.domain, inst.measure, 200001), expected, 1e-5);
  }
}

TEST(SugenoFinite, MonotoneInFunctionAndDomain) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = random_finite_instance(rng, 8, 0);
    std::vector<double> higher;
    for (Grade g : inst.f.grades()) higher.push_back(std::min(1.0, g.value() + 0.3 * u(rng)));
    const FiniteFuzzySet g(inst.f.universe(), higher);
    const Subset everything = inst.f.universe();
    EXPECT_LE(sugeno_integral(inst.f, inst.domain, inst.measure),
              sugeno_integral(g, inst.domain, inst.measure) + 1e-12);
    EXPECT_LE(sugeno_integral(inst.f, inst.domain, inst.measure),
              sugeno_integral(inst.f, everything, inst.measure) + 1e-12);
    const double bound = std::min(inst.domain.empty() ? 0.0 : height(inst.f).value(),
                                  measure_of(inst.measure, inst.domain));
    const double value = sugeno_integral(inst.f, inst.domain, inst.measure);
    EXPECT_GE(value, 0.0);
    EXPECT_LE(value, bound + 1e-12);
  }
}

// ---------------------------------------------------------------- brute-force oracle

TEST(SugenoOracle, WorkedInstance) {
  const auto m = MeasureSpec::possibility(kWorkedPi);
  EXPECT_NEAR(sugeno_bruteforce_oracle(kWorkedF, kWorkedAll, m, 10), 0.5, 1e-9);
  EXPECT_NEAR(sugeno_bruteforce_oracle(kWorkedF, kWorkedAll, m, 10), sugeno_integral(kWorkedF, kWorkedAll, m), 1e-9);
}

TEST(SugenoOracle, ZeroFunction) {
  const auto m = MeasureSpec::possibility(kWorkedPi);
  EXPECT_EQ(sugeno_bruteforce_oracle(FiniteFuzzySet({"x1", "x2", "x3"}, {0, 0, 0}), kWorkedAll, m, 100), 0.0);
}

TEST(SugenoOracle, UniverseTooLarge) {
  std::vector<std::string> labels;
  std::vector<double> grades;
  for (int i = 0; i < 17; ++i) {
    labels.push_back("e" + std::to_string(i));
    grades.push_back(1.0);
  }
  const FiniteFuzzySet big(labels, grades);
  EXPECT_THROW(sugeno_bruteforce_oracle(big, {}, MeasureSpec::possibility(big), 10), Error);
}

TEST(SugenoOracle, AgreesOnQuantizedRandomInstances) {
  constexpr int kLevels = 1024;
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    auto inst = random_finite_instance(rng, 8, kLevels);
    const double top = height(inst.f).value();
    const auto grid = static_cast<std::size_t>(std::lround(top * kLevels)) + 1;
    const double fast = sugeno_integral(inst.f, inst.domain, inst.measure);
    const double slow = sugeno_bruteforce_oracle(inst.f, inst.domain, inst.measure, std::max<std::size_t>(grid, 2));
    EXPECT_NEAR(fast, slow, 1e-9) << "trial " << trial;
  }
}

TEST(SugenoOracle, AgreesWithinGridStepOnContinuousInstances) {
  constexpr std::size_t kGrid = 200001;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = random_finite_instance(rng, 6, 0);
    const double step = height(inst.f).value() / (kGrid - 1);
    const double fast = sugeno_integral(inst.f, inst.domain, inst.measure);
    const double slow = sugeno_bruteforce_oracle(inst.f, inst.domain, inst.measure, kGrid);
    EXPECT_LE(slow, fast + 1e-15);
    EXPECT_GE(slow, fast - step - 1e-15);
  }
}

// ---------------------------------------------------------------- Sugeno, grid

TEST(SugenoGrid, ConstantFunctionUnderPossibility) {
  const GridFunction c(0.0, 1.0, std::vector<double>(11, 0.35));
  const auto m = MeasureSpec::possibility(GridFunction(0.0, 1.0, {0.2, 1.0, 0.2}));
  const auto r = sugeno_integral(c, IntervalSet::single(0.2, 0.8), m);
  EXPECT_NEAR(r.value, 0.35, 1e-10);
  EXPECT_EQ(r.tolerance, 1e-6);
}

TEST(SugenoGrid, IdentityUnderLebesgueMeasure) {
  // g(alpha) = 1 - alpha crosses alpha at 1/2
  const GridFunction id(0.0, 1.0, {0.0, 1.0});
  const auto m = MeasureSpec::additive(GridFunction(0.0, 1.0, {1.0, 1.0}));
  EXPECT_NEAR(sugeno_integral(id, IntervalSet::single(0.0, 1.0), m).value, 0.5, 1e-9);
  // over [0, 0.25): sup of f is 0.25, measure of the domain is 0.25; crossing at 0.125
  EXPECT_NEAR(sugeno_integral(id, IntervalSet::single(0.0, 0.25), m).value, 0.125, 1e-9);
}

TEST(SugenoGrid, EmptyDomain) {
  const auto pi = normalize_to_possibility(standard_normal());
  EXPECT_EQ(sugeno_integral(pi, IntervalSet{}, MeasureSpec::possibility(pi)).value, 0.0);
}

TEST(SugenoGrid, Errors) {
  const auto pi = normalize_to_possibility(standard_normal());
  EXPECT_THROW(sugeno_integral(pi, IntervalSet::single(0, 1), MeasureSpec::possibility(kWorkedPi)), Error);
  const auto narrow = MeasureSpec::possibility(GridFunction(-1.0, 1.0, {0.0, 1.0, 0.0}));
  EXPECT_THROW(sugeno_integral(pi, IntervalSet::single(0.0, 2.0), narrow), Error);
}

TEST(SugenoGrid, PossibilityFixedPoint) {
  const auto pi = normalize_to_possibility(standard_normal());
  const auto m = MeasureSpec::possibility(pi);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    const auto domain = IntervalSet::single(a, b);
    const auto r = sugeno_integral(pi, domain, m);
    EXPECT_NEAR(r.value, measure_of(m, domain), r.tolerance) << a << ", " << b;
  }
}

TEST(SugenoGrid, BoundedAndMonotone) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto m = MeasureSpec::possibility(GridFunction::sample(0.0, 4.0, 81, [](double x) {
    return std::exp(-(x - 1.3) * (x - 1.3));
  }));
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> s(41);
    for (double& v : s) v = u(rng);
    std::vector<double> t = s;
    for (double& v : t) v += 0.2 * u(rng);
    const GridFunction f(0.0, 4.0, s);
    const GridFunction g(0.0, 4.0, t);
    double lo = 4.0 * u(rng);
    double hi = 4.0 * u(rng);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) continue;
    const auto inner = IntervalSet::single(lo, hi);
    const auto outer = IntervalSet::single(std::max(0.0, lo - 0.5), std::min(4.0, hi + 0.5));
    const auto rf = sugeno_integral(f, inner, m);
    EXPECT_GE(rf.value, 0.0);
    EXPECT_LE(rf.value, std::min(interval_sup(f, inner), measure_of(m, inner)) + 1e-9);
    EXPECT_LE(rf.value, sugeno_integral(g, inner, m).value + 1e-9);
    EXPECT_LE(rf.value, sugeno_integral(f, outer, m).value + 1e-9);
  }
}

TEST(GridTolerance, FloorAndSlope) {
  EXPECT_EQ(grid_tolerance(GridFunction(0, 1, {0.5, 0.5})), 1e-6);
  EXPECT_DOUBLE_EQ(grid_tolerance(GridFunction(0, 2, {0.0, 0.1, 0.4})), 0.6);
}

}  // namespace
}  // namespace vagueq
