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

// Front quality measures. Every vector is in minimization sense
// (eco, env, soc).

#ifndef SSCOPT_METRICS_METRICS_HPP_
#define SSCOPT_METRICS_METRICS_HPP_

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace sscopt::metrics {

using Vec3 = std::array<double, 3>;

class EmptyFront : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// |a - b| / max(|a|, |b|), 0 when both are 0. Symmetric, within [0, 2].
double gap(double a, double b);

// Euclidean norm of the per-objective gaps to the ideal point.
double gapm(const Vec3& f, const Vec3& ideal);

// Per-objective minimum over the union of the fronts.
Vec3 ideal_point(std::span<const Vec3> a, std::span<const Vec3> b = {});

// Mean gapm over the front.
double amid(std::span<const Vec3> front, const Vec3& ideal);
// Sample standard deviation of gapm over the front; 0 for a single point.
double asns(std::span<const Vec3> front, const Vec3& ideal);

// Every (i, j, k) / n with i + j + k = n: (n + 1)(n + 2) / 2 vectors.
std::vector<Vec3> simplex_weights(int n);

// Weights for about nweights vectors: the smallest simplex grid with at least
// that many, or the centroid alone when nweights is 1.
std::vector<Vec3> weights_for(int nweights);

// Weighted Tchebycheff utility on range-normalized objectives, to maximize.
double tchebycheff_utility(const Vec3& f, const Vec3& ideal, const Vec3& range, const Vec3& weight);

// Mean best utility of front_z minus mean best utility of front_a, with
// ranges taken over both fronts. Positive when front_a is worse.
double r2(std::span<const Vec3> front_a, std::span<const Vec3> front_z, const Vec3& ideal,
          int nweights = 105);

struct Report {
  double amid = 0.0;
  double asns = 0.0;
  double r2 = 0.0;
  std::size_t n_points = 0;
  Vec3 ideal{};

  nlohmann::json to_json() const;
};

Report evaluate(std::span<const Vec3> front, std::span<const Vec3> reference, const Vec3& ideal,
                int nweights = 105);

}  // namespace sscopt::metrics

#endif  // SSCOPT_METRICS_METRICS_HPP_
