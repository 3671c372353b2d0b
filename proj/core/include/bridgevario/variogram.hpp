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

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "bridgevario/model.hpp"

namespace bridgevario {

/// An isotropic variogram: a map from nonnegative lag distance to a
/// nonnegative value with gamma(0) = 0. Cheap to copy; instances share an
/// immutable evaluation tree and are safe to use from any thread.
class Variogram {
 public:
  /// The bridging family for validated parameters.
  static Variogram bridging(const ModelParams& params);

  /// variance * (lag / scale)^alpha, 0 < alpha <= 2.
  static Variogram power(double alpha, double scale = 1.0,
                         double variance = 1.0);

  /// Wraps a user function. The caller vouches that `fn` is a variogram;
  /// lag 0 is mapped to 0 without calling it.
  static Variogram custom(std::function<double(double)> fn,
                          std::string label = "custom");

  /// Throws Error(kOutOfRange) for negative lags and Error(kNonFinite) for
  /// NaN or infinite lags.
  double operator()(double lag) const;

  /// Set only for instances built by bridging().
  const std::optional<ModelParams>& params() const noexcept;

  /// Short human-readable description, e.g. for plot legends.
  std::string label() const;

  struct Node;

 private:
  explicit Variogram(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend Variogram compose(double delta, const Variogram& base);
};

/// The combinator g -> ((1 + g)^delta - 1) / (2^delta - 1), with the limit
/// log(1 + g) / log 2 at delta = 0. Maps variograms to variograms for every
/// delta <= 1; Error(kOutOfRange) otherwise. The bridging family is
/// compose(beta / alpha, power(alpha)).
Variogram compose(double delta, const Variogram& base);

}  // namespace bridgevario
