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

#include <algorithm>
#include <cmath>
#include <limits>

namespace sscopt::metrics {

double gap(double a, double b) {
  const double den = std::max(std::abs(a), std::abs(b));
  return den == 0.0 ? 0.0 : std::abs(a - b) / den;
}

double gapm(const Vec3& f, const Vec3& ideal) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double g = gap(f[i], ideal[i]);
    s += g * g;
  }
  return std::sqrt(s);
}

Vec3 ideal_point(std::span<const Vec3> a, std::span<const Vec3> b) {
  if (a.empty() && b.empty()) throw EmptyFront("ideal point of an empty front");
  Vec3 out;
  out.fill(std::numeric_limits<double>::infinity());
  for (auto front : {a, b}) {
    for (const Vec3& f : front) {
      for (int i = 0; i < 3; ++i) out[i] = std::min(out[i], f[i]);
    }
  }
  return out;
}

double amid(std::span<const Vec3> front, const Vec3& ideal) {
  if (front.empty()) throw EmptyFront("aMID of an empty front");
  double s = 0.0;
  for (const Vec3& f : front) s += gapm(f, ideal);
  return s / static_cast<double>(front.size());
}

double asns(std::span<const Vec3> front, const Vec3& ideal) {
  if (front.empty()) throw EmptyFront("aSNS of an empty front");
  if (front.size() == 1) return 0.0;
  const double mean = amid(front, ideal);
  double s = 0.0;
  for (const Vec3& f : front) {
    const double d = gapm(f, ideal) - mean;
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(front.size() - 1));
}

std::vector<Vec3> simplex_weights(int n) {
  std::vector<Vec3> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const int k = n - i - j;
      out.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n, static_cast<double>(k) / n});
    }
  }
  return out;
}

std::vector<Vec3> weights_for(int nweights) {
  if (nweights <= 1) return {{1.0 / 3, 1.0 / 3, 1.0 / 3}};
  int n = 1;
  while ((n + 1) * (n + 2) / 2 < nweights) ++n;
  return simplex_weights(n);
}

double tchebycheff_utility(const Vec3& f, const Vec3& ideal, const Vec3& range, const Vec3& weight) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, weight[i] * std::abs(ideal[i] - f[i]) / std::max(1e-12, range[i]));
  }
  return -worst;
}

double r2(std::span<const Vec3> front_a, std::span<const Vec3> front_z, const Vec3& ideal, int nweights) {
  if (front_a.empty() || front_z.empty()) throw EmptyFront("R2 needs two non-empty fronts");
  Vec3 range{};
  for (auto front : {front_a, front_z}) {
    for (const Vec3& f : front) {
      for (int i = 0; i < 3; ++i) range[i] = std::max(range[i], f[i] - ideal[i]);
    }
  }
  const std::vector<Vec3> weights = weights_for(nweights);
  auto mean_best = [&](std::span<const Vec3> front) {
    double s = 0.0;
    for (const Vec3& w : weights) {
      double best = -std::numeric_limits<double>::infinity();
      for (const Vec3& f : front) best = std::max(best, tchebycheff_utility(f, ideal, range, w));
      s += best;
    }
    return s / static_cast<double>(weights.size());
  };
  return mean_best(front_z) - mean_best(front_a);
}

nlohmann::json Report::to_json() const {
  return {{"amid", amid},
          {"asns", asns},
          {"r2", r2},
          {"n_points", n_points},
          {"ideal", {{"eco", ideal[0]}, {"env", ideal[1]}, {"soc", ideal[2]}}}};
}

Report evaluate(std::span<const Vec3> front, std::span<const Vec3> reference, const Vec3& ideal, int nweights) {
  Report r;
  r.amid = amid(front, ideal);
  r.asns = asns(front, ideal);
  r.r2 = r2(front, reference, ideal, nweights);
  r.n_points = front.size();
  r.ideal = ideal;
  return r;
}

}  // namespace sscopt::metrics
