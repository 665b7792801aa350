// Copyright 2026 The sscopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sscopt/metrics/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace sscopt::metrics {
namespace {

std::vector<Vec3> random_front(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::vector<Vec3> out(n);
  for (Vec3& v : out) v = {u(rng), u(rng), u(rng)};
  return out;
}

TEST(GapTest, Identities) {
  EXPECT_EQ(gap(3.5, 3.5), 0.0);
  EXPECT_EQ(gap(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(gap(90.0, 100.0), 0.1);
  EXPECT_DOUBLE_EQ(gap(-1.0, 1.0), 2.0);
}

TEST(GapTest, NegativeValuesUseMagnitudes) {
  EXPECT_NEAR(gap(-9226710432.092, -9263916889.431), 0.004016, 1e-6);
}

TEST(GapTest, SymmetricAndBounded) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng);
    EXPECT_EQ(gap(a, b), gap(b, a));
    EXPECT_GE(gap(a, b), 0.0);
    EXPECT_LE(gap(a, b), 2.0);
  }
}

TEST(GapmTest, SingleCoordinate) {
  EXPECT_EQ(gapm({1, 2, 3}, {1, 2, 3}), 0.0);
  // gap(10, 7) = 0.3 on one axis only.
  EXPECT_DOUBLE_EQ(gapm({10, 2, 3}, {7, 2, 3}), 0.3);
}

TEST(GapmTest, MatchesRecomputation) {
  std::mt19937_64 rng(5);
  for (const Vec3& f : random_front(rng, 50)) {
    const Vec3 ideal{-100, -100, -100};
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = std::abs(f[i] - ideal[i]) / std::max(std::abs(f[i]), std::abs(ideal[i]));
      s += d * d;
    }
    EXPECT_NEAR(gapm(f, ideal), std::sqrt(s), 1e-12);
  }
}

TEST(SpreadTest, HandArithmetic) {
  const Vec3 ideal{10, 10, 10};
  // gapm 0.2 and 0.4: one axis off by 2 and by 4 above 10.
  const std::vector<Vec3> front{{10, 10, 12.5}, {10, 10, 50.0 / 3.0}};
  EXPECT_NEAR(amid(front, ideal), 0.3, 1e-12);
  EXPECT_NEAR(asns(front, ideal), std::sqrt(0.02), 1e-12);
}

TEST(SpreadTest, SingletonAtIdeal) {
  const std::vector<Vec3> front{{1, 2, 3}};
  EXPECT_EQ(amid(front, {1, 2, 3}), 0.0);
  EXPECT_EQ(asns(front, {1, 2, 3}), 0.0);
}

TEST(SpreadTest, EmptyFrontThrows) {
  EXPECT_THROW(amid({}, {0, 0, 0}), EmptyFront);
  EXPECT_THROW(asns({}, {0, 0, 0}), EmptyFront);
  EXPECT_THROW(ideal_point({}), EmptyFront);
}

TEST(SpreadTest, PermutationInvariant) {
  std::mt19937_64 rng(9);
  std::vector<Vec3> front = random_front(rng, 30);
  const Vec3 ideal = ideal_point(front);
  const double a = amid(front, ideal), s = asns(front, ideal);
  std::shuffle(front.begin(), front.end(), rng);
  EXPECT_NEAR(amid(front, ideal), a, 1e-12);
  EXPECT_NEAR(asns(front, ideal), s, 1e-12);
}

TEST(IdealTest, PerObjectiveMinimum) {
  const std::vector<Vec3> a{{1, 5, 3}}, b{{2, 0, 4}};
  EXPECT_EQ(ideal_point(a, b), (Vec3{1, 0, 3}));
}

TEST(WeightsTest, SimplexGridSize) {
  EXPECT_EQ(simplex_weights(13).size(), 105u);
  EXPECT_EQ(weights_for(105).size(), 105u);
  EXPECT_EQ(weights_for(1).size(), 1u);
  for (const Vec3& w : simplex_weights(13)) EXPECT_NEAR(w[0] + w[1] + w[2], 1.0, 1e-12);
}

TEST(R2Test, FrontAgainstItselfIsZero) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const std::vector<Vec3> front = random_front(rng, 20);
    EXPECT_EQ(r2(front, front, ideal_point(front)), 0.0);
  }
}

TEST(R2Test, ShiftedCloneIsWorse) {
  std::mt19937_64 rng(4);
  const std::vector<Vec3> z = random_front(rng, 20);
  std::vector<Vec3> a = z;
  for (Vec3& v : a) {
    for (double& c : v) c += 5.0;
  }
  EXPECT_GT(r2(a, z, ideal_point(a, z)), 0.0);
  EXPECT_LT(r2(z, a, ideal_point(a, z)), 0.0);
}

TEST(ReportTest, JsonFields) {
  const std::vector<Vec3> front{{1, 2, 3}, {2, 1, 3}};
  const Report r = evaluate(front, front, ideal_point(front));
  const nlohmann::json j = r.to_json();
  EXPECT_EQ(j.at("n_points"), 2);
  EXPECT_EQ(j.at("r2"), 0.0);
  EXPECT_EQ(j.at("ideal").at("env"), 1.0);
  EXPECT_TRUE(j.contains("amid") && j.contains("asns"));
}

}  // namespace
}  // namespace sscopt::metrics
