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

#include "ranking/statistics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ranking {
namespace {

struct WilsonParts {
  double center;
  double half_width;
};

WilsonParts Wilson(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw std::invalid_argument("Wilson interval needs 0 <= k <= n, n > 0");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {center, half};
}

}  // namespace

double Moments::StdDev() const { return std::sqrt(variance); }

double Moments::StdError() const {
  return count > 0 ? std::sqrt(variance / static_cast<double>(count)) : 0.0;
}

Moments ComputeMoments(std::span<const double> values) {
  Moments m;
  double m2 = 0.0;
  for (double v : values) {
    if (m.count == 0) {
      m.min = m.max = v;
    } else {
      m.min = std::min(m.min, v);
      m.max = std::max(m.max, v);
    }
    ++m.count;
    const double delta = v - m.mean;
    m.mean += delta / static_cast<double>(m.count);
    m2 += delta * (v - m.mean);
  }
  m.variance = m.count > 1 ? m2 / static_cast<double>(m.count - 1) : 0.0;
  return m;
}

double WilsonUpper(std::int64_t successes, std::int64_t trials, double z) {
  const WilsonParts w = Wilson(successes, trials, z);
  return std::min(1.0, w.center + w.half_width);
}

double WilsonLower(std::int64_t successes, std::int64_t trials, double z) {
  const WilsonParts w = Wilson(successes, trials, z);
  return std::max(0.0, w.center - w.half_width);
}

}  // namespace ranking
