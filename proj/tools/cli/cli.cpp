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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bridgevario/definiteness.hpp"
#include "bridgevario/error.hpp"
#include "bridgevario/extremes.hpp"
#include "bridgevario/gaussian_sim.hpp"
#include "bridgevario/inference.hpp"
#include "bridgevario/model.hpp"
#include "bridgevario/random.hpp"
#include "bridgevario/variogram.hpp"
#include "csv.hpp"
#include "svg.hpp"

namespace bridgevario::cli {
namespace {

struct ModelFlags {
  std::optional<double> alpha;
  std::optional<double> beta;
  double scale = 1.0;
  double variance = 1.0;
  std::string model = "bridging";
  std::optional<double> delta;
};

struct Flags {
  ModelFlags model;
  std::uint64_t seed = 0;
  std::size_t reps = 1;
  std::string out;
  std::string plot;
  std::string points;
  std::string empirical;
  std::size_t bins = 15;
  std::optional<double> max_lag;
  std::vector<double> lags;
  std::size_t n_lags = 200;
  std::optional<double> lag_min;
  std::optional<double> lag_max;
  bool linear = false;
  std::string method = "pinned";
  std::size_t grid = 0;
  double spacing = 1.0;
  std::size_t grid2 = 0;
  double spacing2 = 1.0;
  std::size_t trials = 200;
  std::size_t n = 10;
  std::size_t dim = 3;
  std::optional<std::size_t> index_i;
  std::optional<std::size_t> index_j;
  int starts = 8;
  int max_iter = 2000;
  double tol = 1e-10;
};

Error usage_error(const std::string& message) {
  return Error(ErrorKind::kInvalidArgument, message);
}

ModelParams model_params(const ModelFlags& f) {
  if (!f.alpha) throw usage_error("--alpha is required");
  if (f.model == "power") {
    if (f.beta && *f.beta != *f.alpha) {
      throw usage_error("--model power fixes beta = alpha; drop --beta");
    }
    return make_params(*f.alpha, *f.alpha, f.scale, f.variance);
  }
  if (f.model != "bridging") {
    throw usage_error("--model must be 'bridging' or 'power'");
  }
  if (!f.beta) throw usage_error("--beta is required");
  return make_params(*f.alpha, *f.beta, f.scale, f.variance);
}

Variogram model_variogram(const ModelFlags& f) {
  Variogram v = Variogram::bridging(model_params(f));
  if (f.delta) v = compose(*f.delta, v);
  return v;
}

void add_model_options(CLI::App* app, ModelFlags& f) {
  app->add_option("--alpha", f.alpha, "Smoothness exponent, 0 < alpha <= 2");
  app->add_option("--beta", f.beta, "Long-range exponent, beta <= 2");
  app->add_option("--scale", f.scale, "Length scale")->capture_default_str();
  app->add_option("--variance", f.variance, "Value at lag = scale")
      ->capture_default_str();
  app->add_option("--model", f.model, "bridging, or power (beta = alpha)")
      ->capture_default_str();
  app->add_option("--delta", f.delta,
                  "Wrap the model as ((1+g)^delta - 1)/(2^delta - 1)");
}

// Output sink: the file named by --out, or the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw usage_error("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw usage_error("cannot open plot file " + path);
  file << text;
}

struct PointFile {
  PointSet points;
  std::optional<Eigen::MatrixXd> values;  // n_rep x n
};

bool has_prefix(const std::string& s, const std::string& prefix) {
  return s.size() > prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

// Header x1,...,xd[,value1,...]; the dimension is the number of x columns.
PointFile read_points(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw usage_error("cannot open points file " + path);
  const CsvTable table = read_csv(file);
  std::size_t dim = 0;
  while (dim < table.header.size() && has_prefix(table.header[dim], "x")) ++dim;
  if (dim == 0) throw usage_error(path + ": header must start with x1");
  for (std::size_t c = dim; c < table.header.size(); ++c) {
    if (!has_prefix(table.header[c], "value")) {
      throw usage_error(path + ": unexpected column '" + table.header[c] + "'");
    }
  }
  if (table.rows.empty()) throw usage_error(path + ": no points");
  const std::size_t n = table.rows.size();
  const std::size_t reps = table.header.size() - dim;
  std::vector<double> coords;
  coords.reserve(n * dim);
  Eigen::MatrixXd values(reps, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (!table.rows[i][c]) throw usage_error(path + ": missing entry");
      const double v = *table.rows[i][c];
      if (c < dim) {
        coords.push_back(v);
      } else {
        values(static_cast<Eigen::Index>(c - dim), static_cast<Eigen::Index>(i)) = v;
      }
    }
  }
  PointFile result{PointSet::from_flat(dim, std::move(coords)), std::nullopt};
  if (reps > 0) result.values = std::move(values);
  return result;
}

// One row per point: coordinates, then one value per replicate.
CsvTable realization_table(const PointSet& points, const Eigen::MatrixXd& values) {
  CsvTable table;
  for (std::size_t d = 0; d < points.dim(); ++d) {
    table.header.push_back("x" + std::to_string(d + 1));
  }
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    table.header.push_back("value" + std::to_string(r + 1));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::optional<double>> row;
    for (double c : points[i]) row.emplace_back(c);
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
      row.emplace_back(values(r, static_cast<Eigen::Index>(i)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

PointSet simulation_points(const Flags& f) {
  if (!f.points.empty()) return read_points(f.points).points;
  if (f.grid == 0) throw usage_error("give --points or --grid");
  if (f.grid2 > 0) {
    return GridSpec::plane({f.grid, f.grid2}, {f.spacing, f.spacing2}).points();
  }
  return GridSpec::line(f.grid, f.spacing).points();
}

EmpiricalVariogram read_empirical(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw usage_error("cannot open empirical variogram file " + path);
  const CsvTable table = read_csv(file);
  const std::vector<std::string> expected = {"lag", "gamma", "pairs"};
  if (table.header != expected) {
    throw usage_error(path + ": header must be lag,gamma,pairs");
  }
  std::vector<VariogramBin> bins;
  double max_lag = 0.0;
  for (const auto& row : table.rows) {
    if (!row[0] || !row[2]) throw usage_error(path + ": lag and pairs are required");
    VariogramBin bin;
    bin.lag = *row[0];
    bin.gamma = row[1];
    if (*row[2] < 0.0 || *row[2] != std::floor(*row[2])) {
      throw usage_error(path + ": pairs must be a nonnegative integer");
    }
    bin.pairs = static_cast<std::size_t>(*row[2]);
    max_lag = std::max(max_lag, bin.lag);
    bins.push_back(bin);
  }
  return EmpiricalVariogram::make(std::move(bins), max_lag);
}

EmpiricalVariogram empirical_from_flags(const Flags& f) {
  if (!f.empirical.empty()) return read_empirical(f.empirical);
  if (f.points.empty()) throw usage_error("give --points (with values) or --empirical");
  const PointFile data = read_points(f.points);
  if (!data.values) throw usage_error(f.points + ": no value columns");
  return empirical_variogram(data.points, *data.values, f.bins, f.max_lag);
}

CsvTable empirical_table(const EmpiricalVariogram& emp) {
  CsvTable table{{"lag", "gamma", "pairs"}, {}};
  for (const auto& bin : emp.bins()) {
    table.rows.push_back({bin.lag, bin.gamma, static_cast<double>(bin.pairs)});
  }
  return table;
}

std::vector<double> curve_lags(const Flags& f, double scale) {
  const double lo = f.lag_min.value_or(1e-2 * scale);
  const double hi = f.lag_max.value_or(1e2 * scale);
  if (f.n_lags < 2) throw usage_error("--n-lags must be at least 2");
  if (!(lo > 0.0 && hi > lo)) throw usage_error("need 0 < --lag-min < --lag-max");
  std::vector<double> lags(f.n_lags);
  const double steps = static_cast<double>(f.n_lags - 1);
  for (std::size_t i = 0; i < f.n_lags; ++i) {
    const double t = static_cast<double>(i) / steps;
    lags[i] = f.linear ? lo + t * (hi - lo)
                       : std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo)));
  }
  lags.back() = hi;
  return lags;
}

int cmd_eval(const Flags& f, std::ostream& out) {
  const Variogram v = model_variogram(f.model);
  if (f.lags.empty()) throw usage_error("--lag is required");
  for (double lag : f.lags) out << format_number(v(lag)) << '\n';
  return kExitOk;
}

int cmd_curve(const Flags& f, std::ostream& out) {
  const Variogram v = model_variogram(f.model);
  const auto lags = curve_lags(f, f.model.scale);
  CsvTable table{{"lag", "gamma"}, {}};
  Series series{v.label(), {}};
  for (double lag : lags) {
    const double g = v(lag);
    table.rows.push_back({lag, g});
    if (std::isfinite(g)) series.points.emplace_back(lag, g);
  }
  write_csv(out, table);
  if (!f.plot.empty()) {
    SvgOptions options;
    options.log_x = !f.linear;
    write_text_file(f.plot, render_curve_svg({&series, 1}, options));
  }
  return kExitOk;
}

int cmd_check_cnd(const Flags& f, std::ostream& out, std::ostream& err) {
  const Variogram v = model_variogram(f.model);
  std::optional<PointSet> fixed;
  if (!f.points.empty()) fixed = read_points(f.points).points;
  if (!fixed && (f.n < 2 || f.dim == 0)) throw usage_error("need --n >= 2 and --dim >= 1");

  CsvTable table{{"trial", "n", "dim", "q", "bound"}, {}};
  std::size_t failures = 0;
  for (std::size_t t = 0; t < f.trials; ++t) {
    Xoshiro256 rng(derive_stream(f.seed, t));
    const PointSet points = fixed ? *fixed : [&] {
      std::vector<double> coords(f.n * f.dim);
      for (double& c : coords) c = -10.0 + 20.0 * rng.uniform();
      return PointSet::from_flat(f.dim, std::move(coords));
    }();
    const std::size_t n = points.size();
    std::vector<double> w(n);
    for (double& x : w) x = rng.normal();
    double mean = 0.0;
    for (double x : w) mean += x;
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (double& x : w) {
      x -= mean;
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : w) x /= norm;

    const double q = cnd_quadratic_form(v, points, w);
    const double bound = 1e-9 * static_cast<double>(n * n);
    if (q > bound) ++failures;
    table.rows.push_back({static_cast<double>(t), static_cast<double>(n),
                          static_cast<double>(points.dim()), q, bound});
  }
  write_csv(out, table);
  if (failures > 0) {
    err << failures << " of " << f.trials
        << " configurations violate conditional negative definiteness\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_simulate_gaussian(const Flags& f, std::ostream& out) {
  if (f.method == "circulant") {
    const ModelParams params = model_params(f.model);
    if (f.grid == 0) throw usage_error("--method circulant needs --grid");
    const GridSpec grid = f.grid2 > 0
                              ? GridSpec::plane({f.grid, f.grid2}, {f.spacing, f.spacing2})
                              : GridSpec::line(f.grid, f.spacing);
    const auto real = circulant_embedding_simulate(params, grid, f.seed, f.reps);
    write_csv(out, realization_table(real.points, real.values));
    return kExitOk;
  }
  if (f.method != "pinned") throw usage_error("--method must be 'pinned' or 'circulant'");
  const Variogram v = model_variogram(f.model);
  const auto real = simulate_pinned_field(v, simulation_points(f), f.seed, f.reps);
  write_csv(out, realization_table(real.points, real.values));
  return kExitOk;
}

int cmd_simulate_br(const Flags& f, std::ostream& out) {
  const Variogram v = model_variogram(f.model);
  const auto real = simulate_brown_resnick(v, simulation_points(f), f.seed, f.reps);
  write_csv(out, realization_table(real.points, real.values));
  return kExitOk;
}

int cmd_empirical(const Flags& f, std::ostream& out) {
  if (f.points.empty()) throw usage_error("--points is required");
  write_csv(out, empirical_table(empirical_from_flags(f)));
  return kExitOk;
}

int cmd_fit(const Flags& f, std::ostream& out) {
  const EmpiricalVariogram emp = empirical_from_flags(f);
  std::optional<ModelParams> init;
  if (f.model.alpha) init = model_params(f.model);
  FitOptions options;
  options.multistart_count = f.starts;
  options.max_iter = f.max_iter;
  options.tol = f.tol;
  const FitResult result = fit(emp, init, options);

  const auto& p = result.params;
  out << "alpha " << format_number(p.alpha()) << '\n'
      << "beta " << format_number(p.beta()) << '\n'
      << "scale " << format_number(p.scale()) << '\n'
      << "variance " << format_number(p.variance()) << '\n'
      << "objective " << format_number(result.objective) << '\n'
      << "iterations " << result.iterations << '\n'
      << "converged " << (result.converged ? "true" : "false") << '\n'
      << "regime " << to_string(result.regime) << '\n'
      << "boundary_suspect " << (result.boundary_suspect ? "true" : "false") << '\n';

  if (!f.plot.empty()) {
    Series data{"empirical", {}};
    Series model{"fitted", {}};
    for (const auto& bin : emp.bins()) {
      if (!bin.gamma) continue;
      data.points.emplace_back(bin.lag, *bin.gamma);
      model.points.emplace_back(bin.lag, evaluate(p, bin.lag));
    }
    const std::vector<Series> series = {data, model};
    write_text_file(f.plot, render_curve_svg(series));
  }
  return kExitOk;
}

int cmd_extremal_coeff(const Flags& f, std::ostream& out) {
  CsvTable table{{"lag", "theta"}, {}};
  if (!f.points.empty()) {
    const PointFile data = read_points(f.points);
    if (!data.values) throw usage_error(f.points + ": no value columns");
    if (!f.index_i || !f.index_j) throw usage_error("--i and --j are required with --points");
    const MaxStableRealization real{data.points, *data.values, 0};
    const auto theta = estimate_extremal_coeff(real, *f.index_i, *f.index_j);
    table.rows.push_back({theta.lag, theta.theta});
  } else {
    const Variogram v = model_variogram(f.model);
    if (f.lags.empty()) throw usage_error("--lag is required");
    for (double lag : f.lags) {
      const auto theta = theoretical_extremal_coeff(v, lag);
      table.rows.push_back({theta.lag, theta.theta});
    }
  }
  write_csv(out, table);
  return kExitOk;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  const ModelParams params = model_params(f.model);
  out << "regime " << to_string(classify_regime(params)) << '\n';
  if (params.beta() < 0.0) {
    const double s = sill(params);
    // The extremal coefficient at infinite lag sees the variogram at its sill.
    const Variogram at_sill = Variogram::custom([s](double) { return s; }, "sill");
    out << "sill " << format_number(s) << '\n'
        << "theta_inf " << format_number(theoretical_extremal_coeff(at_sill, 1.0).theta)
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bridging variogram toolkit: evaluation, simulation, fitting"};
  app.name("bridgevario");
  app.require_subcommand(1, 1);
  Flags f;

  auto* eval = app.add_subcommand("eval", "Evaluate the variogram at given lags");
  auto* curve = app.add_subcommand("curve", "Tabulate (lag, gamma) over a grid");
  auto* cnd = app.add_subcommand("check-cnd", "Check conditional negative definiteness");
  auto* sim_g = app.add_subcommand("simulate-gaussian", "Simulate a Gaussian field");
  auto* sim_br = app.add_subcommand("simulate-br", "Simulate a Brown-Resnick field");
  auto* emp = app.add_subcommand("empirical", "Empirical variogram of a field file");
  auto* fit_cmd = app.add_subcommand("fit", "Fit model parameters by weighted least squares");
  auto* theta = app.add_subcommand("extremal-coeff", "Brown-Resnick extremal coefficients");
  auto* classify = app.add_subcommand("classify", "Regime label of a parameter point");

  for (auto* sub : {eval, curve, cnd, sim_g, sim_br, emp, fit_cmd, theta, classify}) {
    add_model_options(sub, f.model);
    sub->add_option("--out", f.out, "Output file (default: standard output)");
  }
  for (auto* sub : {eval, theta}) {
    sub->add_option("--lag", f.lags, "Lag distance(s)");
  }
  for (auto* sub : {cnd, sim_g, sim_br}) {
    sub->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  }
  for (auto* sub : {sim_g, sim_br}) {
    sub->add_option("--reps", f.reps, "Number of replicates")->capture_default_str();
    sub->add_option("--grid", f.grid, "Grid points along the first axis");
    sub->add_option("--spacing", f.spacing, "Grid spacing along the first axis");
    sub->add_option("--grid2", f.grid2, "Grid points along the second axis");
    sub->add_option("--spacing2", f.spacing2, "Grid spacing along the second axis");
  }
  for (auto* sub : {cnd, sim_g, sim_br, emp, fit_cmd, theta}) {
    sub->add_option("--points", f.points, "CSV with header x1,...,xd[,value1,...]");
  }
  for (auto* sub : {emp, fit_cmd}) {
    sub->add_option("--bins", f.bins, "Number of lag bins")->capture_default_str();
    sub->add_option("--max-lag", f.max_lag, "Largest lag (default: half the diameter)");
  }
  for (auto* sub : {curve, fit_cmd}) {
    sub->add_option("--plot", f.plot, "Write an SVG plot to this path");
  }
  curve->add_option("--n-lags", f.n_lags, "Number of lags")->capture_default_str();
  curve->add_option("--lag-min", f.lag_min, "Smallest lag (default 0.01 * scale)");
  curve->add_option("--lag-max", f.lag_max, "Largest lag (default 100 * scale)");
  curve->add_flag("--linear", f.linear, "Linear instead of log-spaced lags");
  sim_g->add_option("--method", f.method, "pinned or circulant")->capture_default_str();
  cnd->add_option("--trials", f.trials, "Random configurations")->capture_default_str();
  cnd->add_option("--n", f.n, "Points per configuration")->capture_default_str();
  cnd->add_option("--dim", f.dim, "Dimension of random points")->capture_default_str();
  fit_cmd->add_option("--empirical", f.empirical, "CSV with header lag,gamma,pairs");
  fit_cmd->add_option("--starts", f.starts, "Multistart count")->capture_default_str();
  fit_cmd->add_option("--max-iter", f.max_iter, "Nelder-Mead iterations")->capture_default_str();
  fit_cmd->add_option("--tol", f.tol, "Simplex spread tolerance")->capture_default_str();
  theta->add_option("--i", f.index_i, "First point index (with --points)");
  theta->add_option("--j", f.index_j, "Second point index (with --points)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    Sink sink(f.out, out);
    std::ostream& o = sink.get();
    if (eval->parsed()) return cmd_eval(f, o);
    if (curve->parsed()) return cmd_curve(f, o);
    if (cnd->parsed()) return cmd_check_cnd(f, o, err);
    if (sim_g->parsed()) return cmd_simulate_gaussian(f, o);
    if (sim_br->parsed()) return cmd_simulate_br(f, o);
    if (emp->parsed()) return cmd_empirical(f, o);
    if (fit_cmd->parsed()) return cmd_fit(f, o);
    if (theta->parsed()) return cmd_extremal_coeff(f, o);
    if (classify->parsed()) return cmd_classify(f, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical_failure(e.kind()) ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace bridgevario::cli
