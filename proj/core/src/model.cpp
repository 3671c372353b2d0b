// Copyright 2026 The bridgevario Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bridgevario/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bridgevario/error.hpp"

namespace bridgevario {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be finite, got " << value;
    throw Error(ErrorKind::kNonFinite, msg.str());
  }
}

void require_lag(double lag) {
  require_finite(lag, "lag");
  if (lag < 0.0) {
    std::ostringstream msg;
    msg << "lag must be >= 0, got " << lag;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
}

}  // namespace

ModelParams ModelParams::make(double alpha, double beta, double scale,
                              double variance) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(scale, "scale");
  require_finite(variance, "variance");
  std::ostringstream msg;
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    msg << "alpha must lie in (0, 2], got " << alpha;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
  if (beta > 2.0) {
    msg << "beta must satisfy beta <= 2, got " << beta;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
  if (scale <= 0.0) {
    msg << "scale must be > 0, got " << scale;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
  if (variance <= 0.0) {
    msg << "variance must be > 0, got " << variance;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
  return ModelParams(alpha, beta, scale, variance);
}

namespace detail {

double bridge_transform(double delta, double g, double log1p_g) noexcept {
  if (delta == 0.0) return log1p_g / std::numbers::ln2;
  // Exact reduction ((1 + g) - 1) / (2 - 1) = g; keeps the power model
  // bit-exact instead of going through exp(log(.)).
  if (delta == 1.0) return g;
  return std::expm1(delta * log1p_g) / std::expm1(delta * std::numbers::ln2);
}

double log1p_power(double r, double r_pow_alpha, double alpha) noexcept {
  if (std::isinf(r_pow_alpha)) return alpha * std::log(r);
  return std::log1p(r_pow_alpha);
}

}  // namespace detail

double evaluate(const ModelParams& params, double lag) {
  require_lag(lag);
  const double r = lag / params.scale();
  const double t = std::pow(r, params.alpha());
  const double unit = detail::bridge_transform(
      params.exponent(), t, detail::log1p_power(r, t, params.alpha()));
  return params.variance() * unit;
}

double sill(const ModelParams& params) {
  if (params.beta() >= 0.0) return kInf;
  return -params.variance() /
         std::expm1(params.exponent() * std::numbers::ln2);
}

double covariance(const ModelParams& params, double lag) {
  if (params.beta() >= 0.0) {
    std::ostringstream msg;
    msg << "stationary covariance requires beta < 0, got beta = "
        << params.beta();
    throw Error(ErrorKind::kRegime, msg.str());
  }
  require_lag(lag);
  const double q = params.exponent();
  const double r = lag / params.scale();
  const double t = std::pow(r, params.alpha());
  // variance * (1 + r^alpha)^q / (1 - 2^q), without the cancellation of
  // sill - gamma at large lags.
  return -params.variance() *
         std::exp(q * detail::log1p_power(r, t, params.alpha())) /
         std::expm1(q * std::numbers::ln2);
}

RegimeLabel classify_regime(const ModelParams& params) noexcept {
  if (params.beta() < 0.0) return RegimeLabel::kBoundedNonErgodic;
  if (params.beta() == 0.0) return RegimeLabel::kLogGrowthIndeterminate;
  return RegimeLabel::kUnboundedMixing;
}

std::string_view to_string(RegimeLabel label) noexcept {
  switch (label) {
    case RegimeLabel::kBoundedNonErgodic:
      return "BoundedNonErgodic";
    case RegimeLabel::kLogGrowthIndeterminate:
      return "LogGrowthIndeterminate";
    case RegimeLabel::kUnboundedMixing:
      return "UnboundedMixing";
  }
  return "Unknown";
}

}  // namespace bridgevario
