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

#include "bridgevario/gaussian_sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Cholesky>
#include <unsupported/Eigen/FFT>

#include "bridgevario/error.hpp"
#include "bridgevario/parallel.hpp"

namespace bridgevario {

Eigen::MatrixXd pinned_covariance_matrix(const Variogram& v,
                                         const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<double> at_point(n);
  for (std::size_t i = 0; i < n; ++i) at_point[i] = v(points.norm(i));

  Eigen::MatrixXd k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    k(i, i) = 2.0 * at_point[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double kij = at_point[i] + at_point[j] - v(points.distance(i, j));
      k(i, j) = kij;
      k(j, i) = kij;
    }
  }
  return k;
}

JitteredCholesky cholesky_with_jitter(const Eigen::MatrixXd& k) {
  if (k.rows() != k.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix must be square");
  }
  if (!k.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "matrix entries must be finite");
  }
  const Eigen::Index n = k.rows();
  if (n == 0 || k.isZero(0.0)) {
    return {Eigen::MatrixXd::Zero(n, n), 0.0};
  }

  const double base = 1e-10 * k.trace() / static_cast<double>(n);
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() == Eigen::Success) return {llt.matrixL(), 0.0};

  if (base > 0.0) {
    double eps = base;
    for (int level = 0; level < 5; ++level, eps *= 10.0) {
      Eigen::MatrixXd shifted = k;
      shifted.diagonal().array() += eps;
      llt.compute(shifted);
      if (llt.info() == Eigen::Success) return {llt.matrixL(), eps};
    }
  }
  std::ostringstream msg;
  msg << "Cholesky failed at jitter up to 1e-6 * trace / n for a " << n << "x"
      << n << " matrix";
  throw Error(ErrorKind::kNotPSD, msg.str());
}

GaussianSampler::GaussianSampler(const Eigen::MatrixXd& covariance)
    : size_(static_cast<std::size_t>(covariance.rows())) {
  for (std::size_t i = 0; i < size_; ++i) {
    if (covariance(i, i) != 0.0) active_.push_back(i);
  }
  const auto m = static_cast<Eigen::Index>(active_.size());
  Eigen::MatrixXd reduced(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      reduced(a, b) = covariance(active_[a], active_[b]);
    }
  }
  JitteredCholesky chol = cholesky_with_jitter(reduced);
  lower_ = std::move(chol.lower);
  jitter_ = chol.jitter;
}

void GaussianSampler::sample(Xoshiro256& rng, std::span<double> out) const {
  const auto m = static_cast<Eigen::Index>(active_.size());
  Eigen::VectorXd xi(m);
  for (Eigen::Index a = 0; a < m; ++a) xi[a] = rng.normal();
  const Eigen::VectorXd draw = lower_.triangularView<Eigen::Lower>() * xi;
  std::fill(out.begin(), out.end(), 0.0);
  for (Eigen::Index a = 0; a < m; ++a) out[active_[a]] = draw[a];
}

FieldRealization simulate_pinned_field(const Variogram& v,
                                       const PointSet& points,
                                       std::uint64_t seed, std::size_t n_rep,
                                       const SimulationOptions& options) {
  if (n_rep == 0) {
    throw Error(ErrorKind::kInvalidArgument, "n_rep must be positive");
  }
  const std::size_t n = points.size();
  if (n > options.max_points) {
    std::ostringstream msg;
    msg << n << " points exceed the cap of " << options.max_points;
    throw Error(ErrorKind::kSizeCap, msg.str());
  }
  const GaussianSampler sampler(pinned_covariance_matrix(v, points));

  using RowMajor =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor values(n_rep, n);
  parallel_for(n_rep, options.threads, [&](std::size_t r) {
    Xoshiro256 rng(derive_stream(seed, r));
    sampler.sample(rng, {values.row(r).data(), n});
  });
  return {points, values, seed};
}

GridSpec GridSpec::line(std::size_t size, double spacing) {
  if (size == 0) throw Error(ErrorKind::kInvalidArgument, "empty grid");
  if (!(std::isfinite(spacing) && spacing > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "grid spacing must be positive");
  }
  return GridSpec(1, {size, 1}, {spacing, 1.0});
}

GridSpec GridSpec::plane(std::array<std::size_t, 2> sizes,
                         std::array<double, 2> spacing) {
  for (std::size_t a = 0; a < 2; ++a) {
    if (sizes[a] == 0) throw Error(ErrorKind::kInvalidArgument, "empty grid");
    if (!(std::isfinite(spacing[a]) && spacing[a] > 0.0)) {
      throw Error(ErrorKind::kOutOfRange, "grid spacing must be positive");
    }
  }
  return GridSpec(2, sizes, spacing);
}

PointSet GridSpec::points() const {
  std::vector<double> coords;
  coords.reserve(total() * dim_);
  for (std::size_t i0 = 0; i0 < sizes_[0]; ++i0) {
    for (std::size_t i1 = 0; i1 < sizes_[1]; ++i1) {
      coords.push_back(static_cast<double>(i0) * spacing_[0]);
      if (dim_ == 2) coords.push_back(static_cast<double>(i1) * spacing_[1]);
    }
  }
  return PointSet::from_flat(dim_, std::move(coords));
}

namespace {

using Complex = std::complex<double>;

// In-place forward DFT of an m0 x m1 row-major array (m1 == 1 for 1-D).
void fft2(std::vector<Complex>& data, std::size_t m0, std::size_t m1) {
  Eigen::FFT<double> fft;
  std::vector<Complex> in, out;
  if (m1 > 1) {
    in.resize(m1);
    for (std::size_t i0 = 0; i0 < m0; ++i0) {
      std::copy_n(data.begin() + i0 * m1, m1, in.begin());
      fft.fwd(out, in);
      std::copy_n(out.begin(), m1, data.begin() + i0 * m1);
    }
  }
  if (m0 > 1) {
    in.resize(m0);
    for (std::size_t i1 = 0; i1 < m1; ++i1) {
      for (std::size_t i0 = 0; i0 < m0; ++i0) in[i0] = data[i0 * m1 + i1];
      fft.fwd(out, in);
      for (std::size_t i0 = 0; i0 < m0; ++i0) data[i0 * m1 + i1] = out[i0];
    }
  }
}

struct Embedding {
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::vector<double> sqrt_eigen;  // sqrt(lambda / M), clipped at zero
  EmbeddingInfo info;
};

// Builds the embedding at one padding factor; returns false if it fails the
// eigenvalue floor or the variance check.
bool try_embedding(const ModelParams& params, const GridSpec& grid,
                   std::size_t padding, Embedding& result) {
  const std::size_t m0 = padding * grid.size(0);
  const std::size_t m1 = grid.dim() == 2 ? padding * grid.size(1) : 1;
  const std::size_t total = m0 * m1;

  std::vector<Complex> base(total);
  for (std::size_t i0 = 0; i0 < m0; ++i0) {
    const double d0 =
        static_cast<double>(std::min(i0, m0 - i0)) * grid.spacing(0);
    for (std::size_t i1 = 0; i1 < m1; ++i1) {
      const double d1 =
          static_cast<double>(std::min(i1, m1 - i1)) * grid.spacing(1);
      const double lag = grid.dim() == 2 ? std::hypot(d0, d1) : d0;
      base[i0 * m1 + i1] = covariance(params, lag);
    }
  }
  fft2(base, m0, m1);

  double max_eigen = 0.0;
  double min_eigen = 0.0;
  for (const Complex& z : base) {
    max_eigen = std::max(max_eigen, z.real());
    min_eigen = std::min(min_eigen, z.real());
  }
  if (max_eigen <= 0.0 || min_eigen < -1e-9 * max_eigen) return false;

  result.m0 = m0;
  result.m1 = m1;
  result.sqrt_eigen.resize(total);
  double clipped = 0.0;
  double kept = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double lambda = base[i].real();
    if (lambda < 0.0) {
      clipped -= lambda;
      result.sqrt_eigen[i] = 0.0;
    } else {
      kept += lambda;
      result.sqrt_eigen[i] = std::sqrt(lambda / static_cast<double>(total));
    }
  }
  const double variance = kept / static_cast<double>(total);
  const double target = sill(params);
  if (std::abs(variance - target) > 0.01 * target) return false;
  result.info = {padding, clipped / static_cast<double>(total), variance};
  return true;
}

}  // namespace

FieldRealization circulant_embedding_simulate(const ModelParams& params,
                                              const GridSpec& grid,
                                              std::uint64_t seed,
                                              std::size_t n_rep,
                                              const SimulationOptions& options,
                                              EmbeddingInfo* info) {
  if (params.beta() >= 0.0) {
    std::ostringstream msg;
    msg << "circulant embedding needs a stationary covariance (beta < 0), got "
           "beta = "
        << params.beta();
    throw Error(ErrorKind::kRegime, msg.str());
  }
  if (n_rep == 0) {
    throw Error(ErrorKind::kInvalidArgument, "n_rep must be positive");
  }

  Embedding embedding;
  bool found = false;
  for (std::size_t padding = 2; padding <= 64 && !found; padding *= 2) {
    found = try_embedding(params, grid, padding, embedding);
  }
  if (!found) {
    throw Error(ErrorKind::kEmbeddingFailed,
                "no admissible circulant embedding up to padding 64; use "
                "simulate_pinned_field instead");
  }
  if (info != nullptr) *info = embedding.info;

  const std::size_t n0 = grid.size(0);
  const std::size_t n1 = grid.dim() == 2 ? grid.size(1) : 1;
  const std::size_t m1 = embedding.m1;
  const std::size_t total = embedding.m0 * m1;

  using RowMajor =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor values(n_rep, n0 * n1);
  parallel_for(n_rep, options.threads, [&](std::size_t r) {
    Xoshiro256 rng(derive_stream(seed, r));
    std::vector<Complex> noise(total);
    for (std::size_t i = 0; i < total; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      noise[i] = embedding.sqrt_eigen[i] * Complex(re, im);
    }
    fft2(noise, embedding.m0, m1);
    double* row = values.row(r).data();
    for (std::size_t i0 = 0; i0 < n0; ++i0) {
      for (std::size_t i1 = 0; i1 < n1; ++i1) {
        row[i0 * n1 + i1] = noise[i0 * m1 + i1].real();
      }
    }
  });
  return {grid.points(), values, seed};
}

}  // namespace bridgevario
