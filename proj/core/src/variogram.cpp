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

#include "bridgevario/variogram.hpp"

#include <cmath>
#include <sstream>
#include <variant>

#include "bridgevario/error.hpp"

namespace bridgevario {
namespace {

struct Bridging {
  ModelParams params;
};

struct Power {
  double alpha;
  double scale;
  double variance;
};

struct Composed {
  double delta;
  std::shared_ptr<const Variogram::Node> base;
};

struct Custom {
  std::function<double(double)> fn;
  std::string label;
};

}  // namespace

struct Variogram::Node {
  std::variant<Bridging, Power, Composed, Custom> kind;
  std::optional<ModelParams> params;
};

namespace {

// Evaluates a node at a validated positive lag, also producing log(1 + value)
// so that an enclosing compose() sees the correct logarithm when the value
// itself overflows.
struct Value {
  double g;
  double log1p_g;
};

Value evaluate_node(const Variogram::Node& node, double lag);

struct NodeVisitor {
  double lag;

  Value operator()(const Bridging& b) const {
    const double g = evaluate(b.params, lag);
    return {g, std::log1p(g)};
  }

  Value operator()(const Power& p) const {
    const double r = lag / p.scale;
    const double t = std::pow(r, p.alpha);
    if (p.variance == 1.0) {
      return {t, detail::log1p_power(r, t, p.alpha)};
    }
    const double g = p.variance * t;
    if (std::isinf(g)) {
      return {g, std::log(p.variance) + p.alpha * std::log(r)};
    }
    return {g, std::log1p(g)};
  }

  Value operator()(const Composed& c) const {
    const Value inner = evaluate_node(*c.base, lag);
    const double g =
        detail::bridge_transform(c.delta, inner.g, inner.log1p_g);
    return {g, std::log1p(g)};
  }

  Value operator()(const Custom& c) const {
    const double g = c.fn(lag);
    return {g, std::log1p(g)};
  }
};

Value evaluate_node(const Variogram::Node& node, double lag) {
  return std::visit(NodeVisitor{lag}, node.kind);
}

void check_lag(double lag) {
  if (!std::isfinite(lag)) {
    throw Error(ErrorKind::kNonFinite, "lag must be finite");
  }
  if (lag < 0.0) {
    std::ostringstream msg;
    msg << "lag must be >= 0, got " << lag;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
}

}  // namespace

Variogram Variogram::bridging(const ModelParams& params) {
  return Variogram(std::make_shared<const Node>(Node{Bridging{params}, params}));
}

Variogram Variogram::power(double alpha, double scale, double variance) {
  // Same domain checks as the bridging family with beta = alpha.
  const ModelParams checked = ModelParams::make(alpha, alpha, scale, variance);
  return Variogram(std::make_shared<const Node>(
      Node{Power{checked.alpha(), checked.scale(), checked.variance()},
           std::nullopt}));
}

Variogram Variogram::custom(std::function<double(double)> fn,
                            std::string label) {
  if (!fn) throw Error(ErrorKind::kInvalidArgument, "empty variogram function");
  return Variogram(std::make_shared<const Node>(
      Node{Custom{std::move(fn), std::move(label)}, std::nullopt}));
}

double Variogram::operator()(double lag) const {
  check_lag(lag);
  if (lag == 0.0) return 0.0;
  return evaluate_node(*node_, lag).g;
}

const std::optional<ModelParams>& Variogram::params() const noexcept {
  return node_->params;
}

namespace {

std::string node_label(const Variogram::Node& node) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Bridging>) {
          out << "bridging(alpha=" << k.params.alpha()
              << ", beta=" << k.params.beta() << ")";
        } else if constexpr (std::is_same_v<T, Power>) {
          out << "power(alpha=" << k.alpha << ")";
        } else if constexpr (std::is_same_v<T, Composed>) {
          out << "compose(delta=" << k.delta << ", " << node_label(*k.base)
              << ")";
        } else {
          out << k.label;
        }
      },
      node.kind);
  return out.str();
}

}  // namespace

std::string Variogram::label() const { return node_label(*node_); }

Variogram compose(double delta, const Variogram& base) {
  if (std::isnan(delta)) {
    throw Error(ErrorKind::kNonFinite, "delta must not be NaN");
  }
  if (delta > 1.0) {
    std::ostringstream msg;
    msg << "delta must satisfy delta <= 1, got " << delta;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
  if (std::isinf(delta)) {
    throw Error(ErrorKind::kNonFinite, "delta must be finite");
  }
  return Variogram(std::make_shared<const Variogram::Node>(
      Variogram::Node{Composed{delta, base.node_}, std::nullopt}));
}

}  // namespace bridgevario
