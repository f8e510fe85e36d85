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

// Acceptance checks, one line per criterion. Usage: acceptance [N ...]; with
// no arguments every criterion runs. Exit status is 0 only if all requested
// criteria pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entrobound/entropy.hpp"
#include "entrobound/experiments.hpp"
#include "entrobound/fvdg.hpp"
#include "entrobound/metrics.hpp"
#include "entrobound/sampling.hpp"
#include "entrobound/states.hpp"
#include "entrobound/table.hpp"
#include "random_states.hpp"

namespace eb = entrobound;
using eb::CMatrix;
using eb::CVector;
using eb::DensityOperator;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 means unlimited
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double tc(const eb::Rank1Measurement& l, const DensityOperator& r, const DensityOperator& s) {
  return eb::classical_trace_distance(eb::measure(l, r), eb::measure(l, s));
}

double fc(const eb::Rank1Measurement& l, const DensityOperator& r, const DensityOperator& s) {
  return eb::classical_fidelity(eb::measure(l, r), eb::measure(l, s));
}

DensityOperator diag_density(std::initializer_list<double> v) {
  eb::RVector r(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) r(i++) = x;
  return eb::make_density(CMatrix(r.cast<eb::Complex>().asDiagonal()));
}

DensityOperator conjugate(const CMatrix& u, const DensityOperator& rho) {
  return eb::make_density(eb::HermitianMatrix::symmetrize(u * rho.matrix() * u.adjoint()));
}

// Acceptance reads the CSV artifact, not the in-memory table.
eb::Table from_csv(const eb::Table& t) {
  std::istringstream in(eb::render_csv(t));
  std::string line, cell;
  std::getline(in, line);
  std::istringstream header(line);
  std::vector<std::string> columns;
  while (std::getline(header, cell, ',')) columns.push_back(cell);
  eb::Table out = eb::make_table(columns);
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    while (std::getline(fields, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    out.rows.push_back(std::move(row));
  }
  return out;
}

eb::Table run_csv(const eb::ExperimentConfig& cfg) { return from_csv(eb::run_experiment(cfg)); }

Outcome counterexample_numbers() {
  const auto closed = eb::counterexample_closed_form(2, 2, 0.5);
  const auto matrix = eb::counterexample_matrix(2, 2, 0.5);
  const double u2 = eb::lipschitz_u(2);
  const double agree = std::max(std::abs(closed.angle - matrix.angle),
                                std::abs(closed.abs_delta_h - matrix.abs_delta_h));
  const bool ok = std::abs(closed.abs_delta_h - 1.074) <= 1e-3 &&
                  std::abs(matrix.abs_delta_h - 1.074) <= 1e-3 &&
                  std::abs(u2 * closed.angle - 1.061) <= 1e-3 &&
                  std::abs(u2 * matrix.angle - 1.061) <= 1e-3 && agree <= 1e-9;
  return {ok,
          fmt("|dH| closed %.6f matrix %.6f, u(2)A closed %.6f matrix %.6f, route gap %.2e",
              closed.abs_delta_h, matrix.abs_delta_h, u2 * closed.angle, u2 * matrix.angle, agree)};
}

Outcome lipschitz_constant() {
  const auto& c = eb::lipschitz_constants();
  const double l = std::log(c.x0);
  const double value_res = std::abs(c.majorant(c.x0) - l * l);
  const double slope_res = std::abs(c.slope - 2.0 * l / c.x0);
  const bool ok = std::abs(c.x0 - 4.922) <= 1e-3 && value_res <= 1e-10 && slope_res <= 1e-10;
  return {ok, fmt("x0 = %.15f, |f(x0) - ln^2 x0| = %.2e, |slope - 2 ln x0/x0| = %.2e", c.x0,
                  value_res, slope_res)};
}

Outcome qc_bound_at_scale() {
  eb::ExperimentConfig cfg;
  cfg.kind = eb::ExperimentKind::kFig1;
  cfg.n_samples = 10000;
  cfg.seed = 20240601;
  const auto t = run_csv(cfg);
  const auto dh = t.column_index("abs_delta_h"), b = t.column_index("bound");
  int violations = 0;
  double worst = -1.0;
  for (const auto& row : t.rows) {
    violations += row[dh] > row[b] + 1e-9;
    worst = std::max(worst, row[dh] - row[b]);
  }
  return {
      violations == 0 && t.rows.size() == 10000,
      fmt("%zu pairs, %d violations, max(|dH| - bound) = %.3e", t.rows.size(), violations, worst)};
}

struct Fig2Summary {
  int violations = 0;
  double max_ratio = 0.0;
  std::size_t rows = 0;
};

Fig2Summary fig2_summary(int dim_a) {
  eb::ExperimentConfig cfg;
  cfg.kind = eb::ExperimentKind::kFig2;
  cfg.dim_a = dim_a;
  cfg.dim_b = 2;
  cfg.n_samples = 1000;
  cfg.seed = 7;
  const auto t = run_csv(cfg);
  const auto a = t.column_index("angle"), dh = t.column_index("abs_delta_h");
  const double u = eb::lipschitz_u(dim_a);
  Fig2Summary s;
  s.rows = t.rows.size();
  for (const auto& row : t.rows) {
    s.violations += row[dh] > u * row[a] + 1e-12;
    s.max_ratio = std::max(s.max_ratio, row[dh] / (u * row[a]));
  }
  return s;
}

Outcome fixed_angle_suite() {
  const auto s2 = fig2_summary(2), s8 = fig2_summary(8);
  const bool ok =
      s2.violations == 0 && s8.violations == 0 && s2.max_ratio > 0.9 && s8.max_ratio < s2.max_ratio;
  return {ok, fmt("d_A=2: %zu rows, %d violations, max ratio %.6f (needs > 0.9); d_A=8: %zu "
                  "rows, %d violations, max ratio %.6f",
                  s2.rows, s2.violations, s2.max_ratio, s8.rows, s8.violations, s8.max_ratio)};
}

Outcome scan_reproduction() {
  eb::ExperimentConfig cfg;
  cfg.kind = eb::ExperimentKind::kScan;
  cfg.grid_step = 0.005;
  const auto t = run_csv(cfg);
  const auto da = t.column_index("dim_a"), db = t.column_index("dim_b"),
             pts = t.column_index("violating_points"), lo = t.column_index("interval_lo"),
             hi = t.column_index("interval_hi"), contig = t.column_index("contiguous"),
             dbl = t.column_index("max_doubled_violation"), mv = t.column_index("max_violation");
  bool ok = t.rows.size() == 9 * 10;
  bool saw_22 = false;
  double worst_doubled = -1.0, v22 = 0.0, lo22 = 0.0, hi22 = 0.0;
  std::ostringstream other;
  for (const auto& row : t.rows) {
    worst_doubled = std::max(worst_doubled, row[dbl]);
    if (row[dbl] > 1e-12) ok = false;
    const bool is22 = row[da] == 2 && row[db] == 2;
    if (is22) {
      saw_22 = row[pts] > 0 && row[contig] == 1 && row[lo] <= 0.5 && 0.5 <= row[hi];
      v22 = row[mv];
      lo22 = row[lo];
      hi22 = row[hi];
    } else if (row[pts] > 0) {
      ok = false;
      other << " (" << row[da] << "," << row[db] << ")";
    }
  }
  ok = ok && saw_22;
  return {ok,
          fmt("(2,2): max violation %.6f on [%.3f, %.3f]; other violating dims:%s; max "
              "doubled-bound excess %.2e",
              v22, lo22, hi22, other.str().empty() ? " none" : other.str().c_str(), worst_doubled)};
}

Outcome fvdg_family() {
  eb::Rng rng(606);
  int checked = 0, failures = 0;
  double worst_gap = 0.0, worst_c = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double b = 0.1 * i;
    const auto rho = diag_density({1 / (1 + b), b / (1 + b)});
    const auto sigma = diag_density({b / (1 + b), 1 / (1 + b)});
    for (int k = 0; k <= 20; ++k) {
      const CMatrix u = k == 0 ? CMatrix::Identity(2, 2) : eb::sample_haar_unitary(rng, 2);
      const auto r = conjugate(u, rho), s = conjugate(u, sigma);
      const double t = eb::trace_distance(r, s), f = eb::fidelity(r, s);
      const double gap = std::abs(t - std::sqrt(1.0 - f * f));
      const auto rep = eb::classify_pair(r, s);
      const double cerr = rep.c_value ? std::abs(*rep.c_value - std::sqrt(b)) : 1.0;
      worst_gap = std::max(worst_gap, gap);
      worst_c = std::max(worst_c, cerr);
      failures +=
          !(gap <= 1e-10 && rep.pair_class == eb::PairClass::kUpperSaturated && cerr <= 1e-7);
      ++checked;
    }
  }
  return {failures == 0, fmt("%d pairs, %d failures, max |T - sqrt(1-F^2)| = %.2e, max |c - "
                             "sqrt b| = %.2e",
                             checked, failures, worst_gap, worst_c)};
}

Outcome optimal_measurement_oracles() {
  std::mt19937_64 gen(707);
  int bad_t = 0, bad_f = 0, beaten = 0;
  double worst_t = 0.0, worst_f = 0.0, worst_beat = -1.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index d = 2 + trial % 4;
    const auto rho = eb::testing::random_density(gen, d);
    const auto sigma = eb::testing::random_density(gen, d);
    const double t = eb::trace_distance(rho, sigma), f = eb::fidelity(rho, sigma);
    const double et = std::abs(tc(eb::trace_optimal_measurements(rho, sigma), rho, sigma) - t);
    const double ef = std::abs(fc(eb::fidelity_optimal_measurement(rho, sigma), rho, sigma) - f);
    worst_t = std::max(worst_t, et);
    worst_f = std::max(worst_f, ef);
    bad_t += et > 1e-9;
    bad_f += ef > 1e-9;
    for (int k = 0; k < 200; ++k) {
      const eb::Rank1Measurement l(eb::testing::random_unitary(gen, d));
      const double beat = std::max(tc(l, rho, sigma) - t, f - fc(l, rho, sigma));
      worst_beat = std::max(worst_beat, beat);
      beaten += beat > 1e-9;
    }
  }
  return {bad_t == 0 && bad_f == 0 && beaten == 0,
          fmt("1000 pairs: max |T_c - T| = %.2e, max |F_c - F| = %.2e, random bases beating an "
              "optimum: %d (max margin %.2e)",
              worst_t, worst_f, beaten, worst_beat)};
}

Outcome derivative_machinery() {
  eb::Rng rng(808);
  const double h = 1e-6;
  int paths = 0, fd_bad = 0, bound_bad = 0;
  double worst_rel = 0.0, worst_excess = -1e300;
  while (paths < 100) {
    const int da = 2 + paths % 3, db = 1 + (paths / 3) % 4;
    const eb::PathState path(eb::sqrt_vector(eb::sample_qc_state(rng, da, db)),
                             eb::sqrt_vector(eb::sample_qc_state(rng, da, db)));
    if (path.theta0() <= 4 * h) continue;
    ++paths;
    const double u = eb::lipschitz_u(da);
    for (int i = 1; i <= 20; ++i) {
      const double th = path.theta0() * i / 21.0;
      const double analytic = eb::hc_derivative(path, th);
      const double fd =
          (eb::hc_of_vector(path.v(th + h), da, db) - eb::hc_of_vector(path.v(th - h), da, db)) /
          (2 * h);
      const double rel = std::abs(analytic - fd) / std::abs(analytic);
      worst_rel = std::max(worst_rel, rel);
      fd_bad += !(rel <= 1e-5);
      worst_excess = std::max(worst_excess, std::abs(analytic) - u);
      bound_bad += std::abs(analytic) > u + 1e-8;
    }
  }
  return {fd_bad == 0 && bound_bad == 0,
          fmt("100 paths x 20 angles: max relative FD error %.2e, %d over 1e-5; max |H_c'| - "
              "u(d_A) = %.3f",
              worst_rel, fd_bad, worst_excess)};
}

Outcome trace_bound_dominance() {
  std::ostringstream failing;
  int fails = 0, sqrt2_fails = 0;
  for (int d = 2; d <= 64; ++d) {
    const double lhs = std::log(d - 1.0) + 2.0, u = eb::lipschitz_u(d);
    if (lhs > u) {
      ++fails;
      failing << " " << d << fmt("(%.4f > %.4f)", lhs, u);
    }
    sqrt2_fails += lhs > std::sqrt(2.0) * u;
  }
  return {fails == 0, fmt("violating d_A:%s; with sqrt(2) u(d_A) on the right: %d violations",
                          fails ? failing.str().c_str() : " none", sqrt2_fails)};
}

Outcome pure_state_characterization() {
  std::mt19937_64 gen(1010);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int disagreements = 0, positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index d = 2 + trial % 3;
    const CMatrix basis = eb::testing::random_unitary(gen, d);
    CVector r, s;
    if (trial % 3 == 2) {
      r = eb::testing::random_unit(gen, d);
      s = eb::testing::random_unit(gen, d);
    } else {
      // Aligned with the basis up to global phases; a third of these get one
      // component rotated off-phase.
      CVector ra(d), sa(d);
      for (Eigen::Index x = 0; x < d; ++x) {
        ra(x) = unif(gen) + 0.05;
        sa(x) = unif(gen) + 0.05;
      }
      if (trial % 3 == 1) sa(trial % d) *= std::polar(1.0, 0.5 + 2.0 * unif(gen));
      r = std::polar(1.0, 6.0 * unif(gen)) * basis * ra.normalized();
      s = std::polar(1.0, 6.0 * unif(gen)) * basis * sa.normalized();
    }
    const eb::Rank1Measurement l(basis);
    const auto pr = DensityOperator::pure(r), ps = DensityOperator::pure(s);
    const bool direct = std::abs(fc(l, pr, ps) - std::abs(r.dot(s))) <= 1e-8;
    disagreements += eb::pure_fidelity_optimal(l, r, s) != direct;
    positives += direct;
  }
  return {disagreements == 0, fmt("1000 draws, %d optimal by the direct test, %d disagreements",
                                  positives, disagreements)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "counterexample numbers", 1.0, counterexample_numbers},
      {2, "Lipschitz constant x0", 0.0, lipschitz_constant},
      {3, "QC bound on 10^4 random pairs", 60.0, qc_bound_at_scale},
      {4, "fixed-angle suite", 60.0, fixed_angle_suite},
      {5, "violation scan", 300.0, scan_reproduction},
      {6, "saturating family", 0.0, fvdg_family},
      {7, "optimal measurement oracles", 0.0, optimal_measurement_oracles},
      {8, "path derivative", 0.0, derivative_machinery},
      {9, "trace-distance dominance", 0.0, trace_bound_dominance},
      {10, "pure-state measurement test", 0.0, pure_state_characterization},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (*end || id < 1 || id > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1..10 ...]\n", argv[0]);
      return 2;
    }
    wanted.push_back(static_cast<int>(id));
  }
  if (wanted.empty())
    for (const auto& c : criteria()) wanted.push_back(c.id);

  bool all_pass = true;
  for (int id : wanted) {
    const auto& c = criteria()[id - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0.0 || secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    std::printf("criterion %2d %s  %s: %s [%.2f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs,
                c.time_limit_s == 0.0
                    ? ""
                    : fmt(", limit %.0f s%s", c.time_limit_s, in_time ? "" : " EXCEEDED").c_str());
    std::fflush(stdout);
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
