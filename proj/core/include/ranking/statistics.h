// Copyright 2026 The Ranking Concentration Authors.
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

#ifndef RANKING_STATISTICS_H_
#define RANKING_STATISTICS_H_

#include <cstdint>
#include <span>

namespace ranking {

// Standard normal quantile at 0.99: one-sided 99% confidence.
inline constexpr double kZ99 = 2.3263478740408408;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for fewer than two samples
  double min = 0.0;
  double max = 0.0;
  std::int64_t count = 0;

  double StdDev() const;
  double StdError() const;
};

// Welford accumulation in index order.
Moments ComputeMoments(std::span<const double> values);

// Wilson score interval bounds for `successes` out of `trials` at normal
// quantile z. Both lie in [0, 1]; trials must be positive.
double WilsonUpper(std::int64_t successes, std::int64_t trials,
                   double z = kZ99);
double WilsonLower(std::int64_t successes, std::int64_t trials,
                   double z = kZ99);

}  // namespace ranking

#endif  // RANKING_STATISTICS_H_
