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

// Command-line front end. Talks to the library only through the C API.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrobound/entrobound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInput = 2;

struct Options {
  int dim_a = 2;
  int dim_b = 2;
  std::optional<int> n_samples;
  bool full_scale = false;
  std::optional<std::uint64_t> seed;
  double lambda_step = 0.005;
  std::vector<double> angles;
  std::string out;
  std::string format = "csv";
  int threads = 1;
  int max_rejects = 1000;
  bool bits = false;
  std::string input;
};

int exit_code_for(eb_status st) {
  switch (st) {
    case EB_OK: return kExitOk;
    case EB_ERR_PARSE:
    case EB_ERR_VALIDATION:
    case EB_ERR_NON_HERMITIAN:
    case EB_ERR_NEGATIVE_EIGENVALUE:
    case EB_ERR_TRACE_NOT_ONE:
    case EB_ERR_DIMENSION_MISMATCH:
    case EB_ERR_OUT_OF_RANGE:
    case EB_ERR_NOT_ORTHONORMAL:
    case EB_ERR_INVALID_ARGUMENT: return kExitInput;
    default: return kExitRuntime;
  }
}

int report(eb_status st) {
  std::cerr << "error: " << eb_status_name(st) << ": " << eb_last_error() << "\n";
  return exit_code_for(st);
}

struct StringDeleter {
  void operator()(char* s) const { eb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct TableDeleter {
  void operator()(eb_table* t) const { eb_table_free(t); }
};

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kExitOk : kExitRuntime;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) {
    std::cerr << "error: IoError: cannot write " << path << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

// ENTROBOUND_SEED is consulted only when --seed is absent.
std::optional<std::uint64_t> resolve_seed(const Options& o, bool* bad) {
  *bad = false;
  if (o.seed) return o.seed;
  const char* env = std::getenv("ENTROBOUND_SEED");
  if (!env || !*env) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string s(env);
    if (s.find('-') != std::string::npos) throw std::invalid_argument("negative");
    const auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    *bad = true;
    return std::nullopt;
  }
}

int format_code(const std::string& f) {
  if (f == "json") return EB_FORMAT_JSON;
  if (f == "svg") return EB_FORMAT_SVG;
  return EB_FORMAT_CSV;
}

// Columns that carry entropy values, for the bits toggle.
const std::set<std::string> kEntropyColumns = {
    "abs_delta_h",      "bound",          "abs_delta_h_matrix",
    "violation",        "max_violation",  "max_doubled_violation",
    "audenaert",        "winter",         "small_t_approx",
    "angle_from_trace", "winter_via_sin", "audenaert_via_sin",
    "dominance_lhs",    "dominance_u",    "dominance_sqrt2_u"};

int run_table(eb_experiment_kind kind, const Options& o) {
  bool bad_seed = false;
  const auto seed = resolve_seed(o, &bad_seed);
  if (bad_seed) {
    std::cerr << "error: ValidationError: ENTROBOUND_SEED is not an unsigned integer\n";
    return kExitInput;
  }
  eb_experiment_config cfg;
  eb_experiment_config_init(&cfg);
  cfg.kind = kind;
  cfg.dim_a = o.dim_a;
  cfg.dim_b = o.dim_b;
  cfg.n_samples = o.n_samples ? *o.n_samples : (o.full_scale ? 100000 : cfg.n_samples);
  cfg.angles = o.angles.empty() ? nullptr : o.angles.data();
  cfg.n_angles = o.angles.size();
  cfg.grid_step = o.lambda_step;
  if (seed) cfg.seed = *seed;
  cfg.threads = o.threads;
  cfg.max_rejects = o.max_rejects;

  eb_table* raw = nullptr;
  if (const auto st = eb_run_experiment(&cfg, &raw); st != EB_OK) return report(st);
  std::unique_ptr<eb_table, TableDeleter> table(raw);

  if (o.bits) {
    const double to_bits = 1.0 / std::log(2.0);
    for (std::size_t c = 0; c < eb_table_cols(table.get()); ++c)
      if (kEntropyColumns.count(eb_table_column_name(table.get(), c)))
        eb_table_scale_column(table.get(), c, to_bits);
  }

  char* text = nullptr;
  if (const auto st = eb_table_render(table.get(), format_code(o.format), &text); st != EB_OK)
    return report(st);
  OwnedString owned(text);
  return write_output(o.out, owned.get());
}

int run_classify(const Options& o) {
  std::string doc;
  if (o.input == "-") {
    doc.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) {
      std::cerr << "error: IoError: cannot read " << o.input << "\n";
      return kExitInput;
    }
    doc.assign(std::istreambuf_iterator<char>(f), {});
  }
  char* text = nullptr;
  if (const auto st = eb_classify_json(doc.c_str(), &text); st != EB_OK) return report(st);
  OwnedString owned(text);
  return write_output(o.out, std::string(owned.get()) + "\n");
}

int run_sample(const Options& o) {
  bool bad_seed = false;
  const auto seed = resolve_seed(o, &bad_seed);
  if (bad_seed) {
    std::cerr << "error: ValidationError: ENTROBOUND_SEED is not an unsigned integer\n";
    return kExitInput;
  }
  char* text = nullptr;
  if (const auto st = eb_sample_qc_pair_json(seed.value_or(0), o.dim_a, o.dim_b, &text);
      st != EB_OK)
    return report(st);
  OwnedString owned(text);
  return write_output(o.out, std::string(owned.get()) + "\n");
}

void add_dims(CLI::App* sub, Options& o) {
  sub->add_option("--da", o.dim_a, "dimension of A")->capture_default_str();
  sub->add_option("--db", o.dim_b, "dimension of the classical register B")->capture_default_str();
}

void add_seed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "RNG seed (falls back to ENTROBOUND_SEED, then 0)");
}

void add_output(CLI::App* sub, Options& o, bool with_format) {
  sub->add_option("--out", o.out, "output path, stdout when omitted");
  if (with_format)
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
}

void add_run_flags(CLI::App* sub, Options& o) {
  sub->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  sub->add_flag("--bits", o.bits, "report entropies in bits instead of nats");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrobound: continuity bounds for quantum-classical conditional entropy"};
  app.set_version_flag("--version", std::string(eb_version()));
  app.require_subcommand(1);

  Options o;

  auto* fig1 = app.add_subcommand("fig1", "scatter of |dH| against angular distance");
  add_dims(fig1, o);
  fig1->add_option("--n", o.n_samples, "number of random pairs (default 10000)");
  fig1->add_flag("--full-scale", o.full_scale, "use 100000 pairs");
  add_seed(fig1, o);
  add_output(fig1, o, true);
  add_run_flags(fig1, o);

  auto* fig2 = app.add_subcommand("fig2", "classical pairs at fixed angles");
  add_dims(fig2, o);
  fig2->add_option("--n", o.n_samples, "pairs per angle (default 10000)");
  fig2->add_flag("--full-scale", o.full_scale, "use 100000 pairs per angle");
  fig2->add_option("--angles", o.angles, "comma-separated angles in (0, pi/2)")->delimiter(',');
  fig2->add_option("--max-rejects", o.max_rejects, "rejection budget per pair")
      ->capture_default_str();
  add_seed(fig2, o);
  add_output(fig2, o, true);
  add_run_flags(fig2, o);

  auto* curve = app.add_subcommand("curve", "counterexample family along lambda");
  add_dims(curve, o);
  curve->add_option("--lambda-step", o.lambda_step, "lambda grid step")->capture_default_str();
  add_output(curve, o, true);
  add_run_flags(curve, o);

  auto* scan = app.add_subcommand("scan", "violation scan over d_A in 2..10, d_B in 1..10");
  scan->add_option("--lambda-step", o.lambda_step, "coarse lambda grid step")
      ->capture_default_str();
  add_output(scan, o, true);
  add_run_flags(scan, o);

  auto* compare = app.add_subcommand("compare", "trace-distance bounds against converted ones");
  compare->add_option("--da", o.dim_a, "dimension of A")->capture_default_str();
  compare->add_option("--lambda-step", o.lambda_step, "trace distance grid step")
      ->capture_default_str();
  add_output(compare, o, true);
  add_run_flags(compare, o);

  auto* classify = app.add_subcommand("classify", "saturation report for a state pair file");
  classify->add_option("input", o.input, "JSON pair file, '-' for stdin")->required();
  add_output(classify, o, false);

  auto* sample = app.add_subcommand("sample", "emit a random quantum-classical pair as JSON");
  add_dims(sample, o);
  add_seed(sample, o);
  add_output(sample, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*fig1) return run_table(EB_EXPERIMENT_FIG1, o);
  if (*fig2) return run_table(EB_EXPERIMENT_FIG2, o);
  if (*curve) return run_table(EB_EXPERIMENT_CURVE, o);
  if (*scan) return run_table(EB_EXPERIMENT_SCAN, o);
  if (*compare) return run_table(EB_EXPERIMENT_COMPARE, o);
  if (*classify) return run_classify(o);
  if (*sample) return run_sample(o);
  return kExitInput;
}
