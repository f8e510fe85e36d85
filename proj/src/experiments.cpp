// Copyright 2026 The Entrobound Authors
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

#include "entrobound/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"
#include "entrobound/metrics.hpp"
#include "entrobound/sampling.hpp"

namespace entrobound {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Excess over a bound counts as a violation only above rounding level; the
// closed forms at lambda = 0 leave ~2e-16 of cancellation noise.
constexpr double kViolation = 1e-12;

void invalid(const std::string& what) { fail(ErrorCode::kValidationError, what); }

std::vector<double> default_angles() {
  std::vector<double> a;
  for (int i = 1; i <= 10; ++i) a.push_back(i * 1e-6);
  return a;
}

// Runs body(i) for i in [0, n) on `threads` workers. Each index writes only
// its own slot, so the result does not depend on scheduling.
template <class Body>
void parallel_for(int n, int threads, Body body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += threads) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void sort_rows(Table& t) {
  std::stable_sort(t.rows.begin(), t.rows.end(),
                   [](const auto& a, const auto& b) { return a[0] < b[0]; });
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (cfg.dim_a < 1 || cfg.dim_b < 1) invalid("dimensions must be >= 1");
  if (cfg.n_samples < 1) invalid("sample count must be >= 1");
  if (!(cfg.grid_step > 0.0 && cfg.grid_step <= 1.0)) invalid("grid step must lie in (0, 1]");
  if (cfg.threads < 1) invalid("thread count must be >= 1");
  if (cfg.max_rejects < 1) invalid("rejection budget must be >= 1");
  for (double a : cfg.angles)
    if (!(a > 0.0 && a < std::numbers::pi / 2)) invalid("angles must lie in (0, pi/2)");
  if (cfg.kind == ExperimentKind::kFig2 && cfg.dim_a * cfg.dim_b < 2)
    invalid("fixed-angle sampling needs d_A * d_B >= 2");
  if (cfg.kind == ExperimentKind::kCompare && cfg.dim_a < 2)
    invalid("bound comparison needs d_A >= 2");
  if (cfg.kind == ExperimentKind::kScan && (cfg.scan_max_dim_a < 2 || cfg.scan_max_dim_b < 1))
    invalid("scan ranges must cover d_A >= 2 and d_B >= 1");
}

std::vector<double> unit_grid(double step) {
  const int n = static_cast<int>(std::llround(1.0 / step));
  std::vector<double> g;
  // Multiply rather than accumulate so grid points are reproducible.
  for (int i = 0; i <= n; ++i) g.push_back(std::min(1.0, i * step));
  if (g.back() < 1.0) g.push_back(1.0);
  return g;
}

Table fig1_scatter(const ExperimentConfig& cfg) {
  validate(cfg);
  const int n = cfg.n_samples, da = cfg.dim_a, db = cfg.dim_b;
  const double cap = std::log(static_cast<double>(da));
  Table t = make_table({"angle", "abs_delta_h", "bound"}, n);
  parallel_for(n, cfg.threads, [&](int i) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(i));
    const auto [a, b] = sample_qc_pair(rng, da, db);
    const DensityOperator ra = qc_embed(a), rb = qc_embed(b);
    const double angle = angular_distance(ra, rb);
    const double gap = std::abs(conditional_entropy(ra, da, db) - conditional_entropy(rb, da, db));
    t.rows[i] = {angle, gap, std::min(qc_continuity_bound(angle, da), cap)};
  });
  sort_rows(t);
  t.plot_series = {{1, PlotStyle::kPoints}, {2, PlotStyle::kLine}};
  t.title = "random quantum-classical pairs";
  return t;
}

Table fig2_fixed_angle(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::vector<double> angles = cfg.angles.empty() ? default_angles() : cfg.angles;
  const int n = cfg.n_samples, da = cfg.dim_a, db = cfg.dim_b;
  const int total = n * static_cast<int>(angles.size());
  const double u = lipschitz_u(da);
  Table t = make_table({"angle", "abs_delta_h", "bound", "ratio"}, total);
  parallel_for(total, cfg.threads, [&](int idx) {
    const double angle = angles[idx / n];
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(idx));
    const auto pair = sample_classical_pair_at_angle(rng, da * db, angle, cfg.max_rejects);
    const double gap = std::abs(hc_of_vector(pair.r, da, db) - hc_of_vector(pair.s, da, db));
    const double bound = u * angle;
    t.rows[idx] = {angle, gap, bound, bound > 0.0 ? gap / bound : kNaN};
  });
  sort_rows(t);
  t.plot_series = {{1, PlotStyle::kPoints}, {2, PlotStyle::kLine}};
  t.title = "classical pairs at fixed angular distance";
  return t;
}

std::pair<DensityOperator, DensityOperator> counterexample_states(int dim_a, int dim_b,
                                                                  double lambda) {
  const int dm = std::min(dim_a, dim_b);
  const int d = dim_a * dim_b;
  CMatrix psi = CMatrix::Zero(d, 1);
  // |i>_A |i>_B sits at k * d_A + j with k = j = i.
  for (int i = 0; i < dm; ++i) psi(i * dim_a + i, 0) = 1.0 / std::sqrt(static_cast<double>(dm));
  const CMatrix rho = psi * psi.adjoint();
  const CMatrix sigma =
      lambda * CMatrix::Identity(d, d) / static_cast<double>(d) + (1.0 - lambda) * rho;
  return {make_density(HermitianMatrix::symmetrize(rho)),
          make_density(HermitianMatrix::symmetrize(sigma))};
}

CounterexamplePoint counterexample_closed_form(int dim_a, int dim_b, double lambda) {
  const double d = static_cast<double>(dim_a) * dim_b;
  const double dm = std::min(dim_a, dim_b);
  const double angle = angle_from_fidelity(std::sqrt(1.0 - (d - 1.0) * lambda / d));
  // H(A|B) of rho is -ln d_M; sigma's joint spectrum is {1 - lambda + lambda/d,
  // lambda/d (d - 1 times)} and its B marginal {lambda/d_B + (1 - lambda)/d_M
  // (d_M times), lambda/d_B (d_B - d_M times)}.
  const double joint = -xlogx(1.0 - lambda + lambda / d) - (d - 1.0) * xlogx(lambda / d);
  const double marginal =
      -dm * xlogx(lambda / dim_b + (1.0 - lambda) / dm) - (dim_b - dm) * xlogx(lambda / dim_b);
  const double h_rho = -std::log(dm);
  return {angle, std::abs(joint - marginal - h_rho)};
}

CounterexamplePoint counterexample_matrix(int dim_a, int dim_b, double lambda) {
  const auto [rho, sigma] = counterexample_states(dim_a, dim_b, lambda);
  return {angular_distance(rho, sigma), std::abs(conditional_entropy(rho, dim_a, dim_b) -
                                                 conditional_entropy(sigma, dim_a, dim_b))};
}

Table counterexample_curve(const ExperimentConfig& cfg) {
  validate(cfg);
  const double u = lipschitz_u(cfg.dim_a);
  Table t = make_table({"lambda", "angle", "abs_delta_h", "angle_matrix", "abs_delta_h_matrix",
                        "bound", "violation"});
  for (double lambda : unit_grid(cfg.grid_step)) {
    const auto c = counterexample_closed_form(cfg.dim_a, cfg.dim_b, lambda);
    const auto m = counterexample_matrix(cfg.dim_a, cfg.dim_b, lambda);
    const double bound = u * c.angle;
    t.rows.push_back({lambda, c.angle, c.abs_delta_h, m.angle, m.abs_delta_h, bound,
                      c.abs_delta_h - bound > kViolation ? 1.0 : 0.0});
  }
  t.plot_series = {{2, PlotStyle::kLine}, {5, PlotStyle::kLine}};
  t.title = "maximally entangled vs. interpolated maximally mixed";
  return t;
}

Table counterexample_scan(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = unit_grid(cfg.grid_step);
  const double fine = std::min(0.001, cfg.grid_step);
  Table t = make_table({"dim_a", "dim_b", "lambda_star", "max_violation", "violating_points",
                        "interval_lo", "interval_hi", "contiguous", "max_doubled_violation"});
  for (int da = 2; da <= cfg.scan_max_dim_a; ++da) {
    const double u = lipschitz_u(da);
    for (int db = 1; db <= cfg.scan_max_dim_b; ++db) {
      auto excess = [&](double lambda, double factor) {
        const auto c = counterexample_closed_form(da, db, lambda);
        return c.abs_delta_h - factor * u * c.angle;
      };
      double best = -std::numeric_limits<double>::infinity(), best_lambda = 0.0;
      double doubled = -std::numeric_limits<double>::infinity();
      int first = -1, last = -1, count = 0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = excess(grid[i], 1.0);
        doubled = std::max(doubled, excess(grid[i], 2.0));
        if (v > best) best = v, best_lambda = grid[i];
        if (v > kViolation) {
          if (first < 0) first = static_cast<int>(i);
          last = static_cast<int>(i);
          ++count;
        }
      }
      double lo = kNaN, hi = kNaN;
      const bool contiguous = count == 0 || last - first + 1 == count;
      if (count > 0) {
        // Refine around the coarse interval to localize its ends and the peak.
        const double from = std::max(0.0, grid[first] - cfg.grid_step);
        const double to = std::min(1.0, grid[last] + cfg.grid_step);
        const int steps = static_cast<int>(std::llround((to - from) / fine));
        for (int s = 0; s <= steps; ++s) {
          const double lambda = std::min(to, from + s * fine);
          const double v = excess(lambda, 1.0);
          if (v > best) best = v, best_lambda = lambda;
          if (v > kViolation) {
            if (std::isnan(lo)) lo = lambda;
            hi = lambda;
          }
        }
      }
      t.rows.push_back({static_cast<double>(da), static_cast<double>(db), best_lambda, best,
                        static_cast<double>(count), lo, hi, contiguous ? 1.0 : 0.0, doubled});
    }
  }
  t.plot_x = 1;
  t.plot_series = {{3, PlotStyle::kPoints}};
  t.title = "counterexample scan";
  return t;
}

Table bounds_compare(const ExperimentConfig& cfg) {
  validate(cfg);
  const int da = cfg.dim_a;
  const double u = lipschitz_u(da);
  const double lhs = std::log(da - 1.0) + 2.0;
  Table t = make_table({"trace_distance", "audenaert", "winter", "angle_from_trace",
                        "small_t_approx", "winter_via_sin", "audenaert_via_sin", "dominance_lhs",
                        "dominance_u", "dominance_sqrt2_u"});
  for (double tr : unit_grid(cfg.grid_step)) {
    // Largest angle compatible with T, then back to trace distance via sin A.
    const double angle = std::acos(1.0 - tr);
    const double back =
        std::min(1.0, convert_bounds(angle, ConversionDirection::kTraceFromAngle, da));
    t.rows.push_back({tr, audenaert_bound(tr, da), winter_bound(tr, da),
                      convert_bounds(tr, ConversionDirection::kAngleFromTrace, da),
                      small_trace_conversion(tr, da), winter_bound(back, da),
                      audenaert_bound(back, da), lhs, u, std::numbers::sqrt2 * u});
  }
  t.plot_series = {{1, PlotStyle::kLine}, {2, PlotStyle::kLine}, {3, PlotStyle::kLine}};
  t.title = "trace-distance bounds vs. converted angular bound";
  return t;
}

Table run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::kFig1: return fig1_scatter(cfg);
    case ExperimentKind::kFig2: return fig2_fixed_angle(cfg);
    case ExperimentKind::kCurve: return counterexample_curve(cfg);
    case ExperimentKind::kScan: return counterexample_scan(cfg);
    case ExperimentKind::kCompare: return bounds_compare(cfg);
  }
  invalid("unknown experiment kind");
  return {};
}

}  // namespace entrobound
