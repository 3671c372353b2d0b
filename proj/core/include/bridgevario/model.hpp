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

#pragma once

#include <string_view>

namespace bridgevario {

/// Parameters of the bridging variogram family
///
///   gamma(h) = variance * ((1 + r^alpha)^(beta/alpha) - 1) / (2^(beta/alpha) - 1),
///   r = |h| / scale,
///
/// with the logarithmic limit variance * log(1 + r^alpha) / log 2 at beta = 0.
/// Valid points satisfy 0 < alpha <= 2, beta <= 2, scale > 0, variance > 0.
/// At scale = variance = 1 the variogram equals 1 at unit lag.
class ModelParams {
 public:
  /// Validating factory. Throws Error(kNonFinite) for NaN or infinite input
  /// and Error(kOutOfRange) naming the violated constraint otherwise.
  static ModelParams make(double alpha, double beta, double scale = 1.0,
                          double variance = 1.0);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double scale() const noexcept { return scale_; }
  double variance() const noexcept { return variance_; }

  /// beta / alpha, the exponent applied to (1 + r^alpha).
  double exponent() const noexcept { return beta_ / alpha_; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(double alpha, double beta, double scale, double variance)
      : alpha_(alpha), beta_(beta), scale_(scale), variance_(variance) {}

  double alpha_;
  double beta_;
  double scale_;
  double variance_;
};

/// Free-function spelling of ModelParams::make.
inline ModelParams make_params(double alpha, double beta, double scale = 1.0,
                               double variance = 1.0) {
  return ModelParams::make(alpha, beta, scale, variance);
}

/// Value of the bridging variogram at a nonnegative lag. Returns +infinity
/// when the value overflows (beta > 0 only), never NaN.
double evaluate(const ModelParams& params, double lag);

/// Limit of evaluate() as lag -> infinity: variance / (1 - 2^(beta/alpha))
/// for beta < 0, +infinity otherwise.
double sill(const ModelParams& params);

/// Stationary covariance sill - gamma(lag) of the bounded (beta < 0) regime.
/// Throws Error(kRegime) when beta >= 0.
double covariance(const ModelParams& params, double lag);

/// Long-range behaviour of the Brown-Resnick field built on the variogram.
///
/// BoundedNonErgodic: beta < 0, the variogram has a finite sill and the
///   max-stable field is not ergodic.
/// LogGrowthIndeterminate: beta = 0, logarithmic growth with asymptotic slope
///   variance * alpha / log 2 in log r. The known mixing criterion (growth
///   faster than 4 log|h|) is established for d = 1 only, so no claim is made.
/// UnboundedMixing: beta > 0, power growth outpaces 4 log|h|.
enum class RegimeLabel {
  kBoundedNonErgodic,
  kLogGrowthIndeterminate,
  kUnboundedMixing,
};

/// Depends on the sign of beta only.
RegimeLabel classify_regime(const ModelParams& params) noexcept;

std::string_view to_string(RegimeLabel label) noexcept;

namespace detail {

/// (exp(delta * log1p_g) - 1) / (2^delta - 1), evaluated through expm1 so
/// that it stays accurate as delta -> 0. delta == 0 gives log1p_g / log 2 and
/// delta == 1 returns g unchanged. `log1p_g` must equal log(1 + g); it is
/// passed separately so callers can supply it when g itself overflows.
double bridge_transform(double delta, double g, double log1p_g) noexcept;

/// log(1 + r^alpha) without overflow for huge r.
double log1p_power(double r, double r_pow_alpha, double alpha) noexcept;

}  // namespace detail

}  // namespace bridgevario
