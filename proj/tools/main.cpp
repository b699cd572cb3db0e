// Copyright 2026 The seclogit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "run_config.hpp"
#include "seclogit/analysis.hpp"
#include "seclogit/data.hpp"
#include "seclogit/engine.hpp"
#include "seclogit/protocol1.hpp"
#include "seclogit/protocol2.hpp"
#include "seclogit/view_sim.hpp"

namespace {

using namespace seclogit;
using namespace seclogit::tools;

constexpr int kExitOk = 0;
constexpr int kExitNonConvergence = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSecurity = 4;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct DataOptions {
  std::string data_csv;
  std::string party_dir;
  std::string target = "y";
  std::vector<std::string> categoricals;
  std::string bin_age_column;
};

void add_data_options(CLI::App* cmd, DataOptions* opts, bool party_dir_allowed = true) {
  auto* data = cmd->add_option("--data", opts->data_csv, "clear CSV holding the combined dataset");
  if (party_dir_allowed) {
    auto* dir =
        cmd->add_option("--party-dir", opts->party_dir, "directory of party files + manifest");
    dir->excludes(data);
  }
  cmd->add_option("--target", opts->target, "response column name")->capture_default_str();
  cmd->add_option("--categoricals", opts->categoricals,
                  "categorical columns, expanded to level indicators")
      ->delimiter(',');
  cmd->add_option("--bin-age", opts->bin_age_column, "numeric column to split into 20-year bins");
}

Dataset load_clear(const DataOptions& opts) {
  CsvSchema schema{opts.target, opts.categoricals};
  Dataset ds = load_csv(opts.data_csv, schema);
  if (!opts.categoricals.empty()) ds = expand_categoricals(std::move(ds), opts.categoricals);
  if (!opts.bin_age_column.empty()) ds = bin_ages(std::move(ds), opts.bin_age_column);
  return ds;
}

struct LoadedInputs {
  std::vector<PartyInput> parties;
  Eigen::MatrixXd x_sum;
  Eigen::VectorXd y_sum;
};

LoadedInputs gather_inputs(const DataOptions& opts, const RunConfig& cfg) {
  LoadedInputs out;
  if (!opts.party_dir.empty()) {
    PartyFiles files = read_party_files(opts.party_dir);
    if (files.manifest.modulus_bits != cfg.modulus_bits ||
        files.manifest.frac_bits != cfg.frac_bits) {
      throw ValidationError("manifest codec (B=2^" + std::to_string(files.manifest.modulus_bits) +
                            ", f=" + std::to_string(files.manifest.frac_bits) +
                            ") differs from the configured codec");
    }
    out.parties = std::move(files.parties);
  } else if (!opts.data_csv.empty()) {
    const Dataset ds = load_clear(opts);
    Prng rng(cfg.seed);
    out.parties = partition(ds, cfg.scheme, cfg.parties, rng);
  } else {
    throw ValidationError("either --data or --party-dir is required");
  }
  out.x_sum = out.parties[0].X_j;
  out.y_sum = out.parties[0].y_j;
  for (size_t j = 1; j < out.parties.size(); ++j) {
    out.x_sum += out.parties[j].X_j;
    out.y_sum += out.parties[j].y_j;
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
}

// b <= n R c tau with c = 1/8 and the conservative tau = sqrt(n)/k.
double derived_b_threshold(const Eigen::MatrixXd& x, int k) {
  const double n = static_cast<double>(x.rows());
  return n * data_radius(x) * 0.125 * std::sqrt(n) / static_cast<double>(k);
}

// ---------------------------------------------------------------------------

int cmd_partition(const DataOptions& data_opts, const std::string& out_dir,
                  const std::string& scheme, int parties, uint64_t seed) {
  Dataset ds = load_clear(data_opts);
  const PartitionScheme sch = scheme_from_name(scheme);
  Prng rng(seed);
  const auto parts = partition(ds, sch, parties, rng);

  Manifest m;
  m.scheme = sch;
  m.parties = parties;
  m.seed = seed;
  m.rows = ds.n();
  m.cols = ds.d();
  m.columns = ds.column_names;
  write_party_files(out_dir, parts, m);
  std::cout << "wrote " << parties << " party files to " << out_dir << "\n";
  return kExitOk;
}

std::string fit_output_kv(const FitOutput& out) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < out.beta.size(); ++i) {
    os << "beta." << i << " = " << fmt(out.beta[i]) << "\n";
  }
  os << "outer_iterations = " << out.outer_iterations << "\n";
  os << "inversion_iterations = " << out.inversion_iterations << "\n";
  return os.str();
}

// Runs the configured method. Per-round likelihoods land in *loglik_rows
// when trace mode is active (for the protocols this reveals the parameter
// each round).
FitOutput run_method(Method method, const LoadedInputs& in, const RunConfig& cfg,
                     std::vector<double>* loglik_rows) {
  TraceFn trace;
  if (loglik_rows) {
    trace = [&](int, const Eigen::VectorXd& beta) {
      loglik_rows->push_back(log_likelihood(in.x_sum, in.y_sum, beta));
    };
  }
  switch (method) {
    case Method::kExactNr: {
      const ClearFit fit = exact_newton_raphson(in.x_sum, in.y_sum, cfg.eps_conv);
      if (loglik_rows) *loglik_rows = fit.loglik;
      return FitOutput{fit.beta, fit.iterations, 0};
    }
    case Method::kHessLbClear: {
      const ClearFit fit = hessian_lb_clear(in.x_sum, in.y_sum, cfg.eps_conv);
      if (loglik_rows) *loglik_rows = fit.loglik;
      return FitOutput{fit.beta, fit.iterations, 0};
    }
    case Method::kProtocol1: {
      Engine eng(cfg.codec(), static_cast<int>(in.parties.size()), cfg.seed);
      return fit_protocol1(in.parties, cfg.protocol1_config(), eng, trace);
    }
    case Method::kProtocol2: {
      std::optional<double> derived;
      if (cfg.trace_mode && !cfg.b_threshold) {
        derived = derived_b_threshold(in.x_sum, cfg.p2.euler_steps);
      }
      Engine eng(cfg.codec(), static_cast<int>(in.parties.size()), cfg.seed);
      return fit_protocol2(in.parties, cfg.protocol2_config(derived), eng, trace);
    }
  }
  throw ValidationError("unreachable method");
}

int cmd_fit(const DataOptions& data_opts, RunConfig cfg, const std::string& out_path,
            const std::string& trace_path, const std::string& config_out) {
  const LoadedInputs in = gather_inputs(data_opts, cfg);

  std::vector<double> loglik_rows;
  const FitOutput out =
      run_method(cfg.method, in, cfg, cfg.trace_mode ? &loglik_rows : nullptr);
  write_text(out_path, fit_output_kv(out));
  if (cfg.trace_mode && !trace_path.empty()) {
    std::ostringstream trace_csv;
    trace_csv << "iteration,loglik\n";
    for (size_t i = 0; i < loglik_rows.size(); ++i) {
      trace_csv << (i + 1) << ',' << fmt(loglik_rows[i]) << "\n";
    }
    write_text(trace_path, trace_csv.str());
  }
  if (!config_out.empty()) write_text(config_out, cfg.to_kv());
  return kExitOk;
}

int cmd_bounds(const std::vector<double>& dkw, const std::vector<double>& param,
               std::optional<double> euler, const std::vector<double>& choose,
               const std::string& out_path) {
  std::ostringstream os;
  os.precision(17);
  BoundReport report;
  if (!dkw.empty()) {
    report.dkw_eps = dkw[0];
    report.alpha = dkw[1];
    report.logistic_samples = static_cast<double>(dkw_sample_size(dkw[0], dkw[1]));
    report.bound_value = report.logistic_samples;
    os << "L = " << static_cast<size_t>(report.logistic_samples) << "\n";
  } else if (!param.empty()) {
    report.radius = param[0];
    report.logistic_samples = param[1];
    report.dkw_eps = param[2];
    report.lambda_min_hat = param[3];
    report.bound_value = param_error_bound(param[0], param[1], param[2], param[3]);
    os << "bound_value = " << report.bound_value << "\n";
  } else if (euler) {
    report.tau = *euler;
    report.bound_value = euler_error_bound(*euler);
    os << "bound_value = " << report.bound_value << "\n";
  } else if (!choose.empty()) {
    report.tau = choose[1];
    report.euler_steps = choose_k(static_cast<size_t>(choose[0]), choose[1]);
    report.bound_value = report.euler_steps;
    os << "k = " << static_cast<int>(report.euler_steps) << "\n";
  } else {
    throw ValidationError("pick one of --dkw, --param, --euler, --choose-k");
  }
  write_text(out_path, os.str());
  return kExitOk;
}

int cmd_compare(const DataOptions& data_opts, RunConfig cfg, const std::vector<std::string>& methods,
                int repeats, const std::string& out_path) {
  cfg.trace_mode = true;
  const LoadedInputs in = gather_inputs(data_opts, cfg);

  std::ostringstream csv;
  csv << "method,run,iteration,loglik\n";
  bool any_failed = false;

  for (const std::string& name : methods) {
    const Method method = method_from_name(name);
    const int runs = method == Method::kProtocol1 ? repeats : 1;
    for (int run = 0; run < runs; ++run) {
      RunConfig rc = cfg;
      rc.method = method;
      rc.seed = cfg.seed + static_cast<uint64_t>(run);
      try {
        std::vector<double> rows;
        run_method(method, in, rc, &rows);
        for (size_t i = 0; i < rows.size(); ++i) {
          csv << name << ',' << run << ',' << (i + 1) << ',' << fmt(rows[i]) << "\n";
        }
      } catch (const NonConvergenceError& e) {
        std::cerr << name << " run " << run << " failed: " << e.what() << "\n";
        any_failed = true;
      }
    }
  }
  write_text(out_path, csv.str());
  return any_failed ? kExitNonConvergence : kExitOk;
}

int cmd_security_check(const DataOptions& data_opts, RunConfig cfg,
                       const std::string& transcript_path, const std::string& out_path) {
  if (cfg.method != Method::kProtocol1 && cfg.method != Method::kProtocol2) {
    throw ValidationError("security-check applies to protocol1 or protocol2");
  }
  const LoadedInputs in = gather_inputs(data_opts, cfg);
  const int parties = static_cast<int>(in.parties.size());
  const size_t n = static_cast<size_t>(in.x_sum.rows());
  const size_t d = static_cast<size_t>(in.x_sum.cols());

  // The simulation argument covers the strict protocol: no intermediate
  // parameter is revealed during the audited run.
  Engine eng(cfg.codec(), parties, cfg.seed);
  FitOutput out;
  std::optional<double> derived;
  if (cfg.method == Method::kProtocol2 && !cfg.b_threshold) {
    derived = derived_b_threshold(in.x_sum, cfg.p2.euler_steps);
  }
  Protocol2Config p2cfg;
  if (cfg.method == Method::kProtocol1) {
    out = fit_protocol1(in.parties, cfg.protocol1_config(), eng);
  } else {
    p2cfg = cfg.protocol2_config(derived);
    out = fit_protocol2(in.parties, p2cfg, eng);
  }
  const Transcript& real = eng.transcript();
  if (!transcript_path.empty()) {
    std::ofstream f(transcript_path);
    real.export_csv(f);
  }

  std::ostringstream os;
  os.precision(6);
  bool ok = true;
  auto verdict = [&](const std::string& key, bool pass) {
    os << key << " = " << (pass ? "pass" : "FAIL") << "\n";
    ok &= pass;
  };

  os << "parties = " << parties << "\n";
  os << "outer_iterations = " << out.outer_iterations << "\n";
  os << "inversion_iterations = " << out.inversion_iterations << "\n";

  ViewRunSpec spec;
  spec.protocol =
      cfg.method == Method::kProtocol1 ? ProtocolKind::kProtocol1 : ProtocolKind::kProtocol2;
  spec.p1 = cfg.protocol1_config();
  spec.p2 = cfg.method == Method::kProtocol2 ? p2cfg : cfg.p2;
  spec.codec = cfg.codec();
  spec.parties = parties;

  for (int j = 0; j < parties; ++j) {
    const Transcript synth =
        simulate_view(j, in.parties[static_cast<size_t>(j)], out, spec, cfg.seed ^ 0x5EEDBEEF);
    std::string diag;
    const bool skeleton = same_view_skeleton(real, synth, j, &diag);
    verdict("skeleton.party" + std::to_string(j), skeleton);
    if (!skeleton) os << "# " << diag << "\n";

    const auto shares = received_share_values(real, j, {Tag::kOle, Tag::kTrunc, Tag::kAgg});
    const double chi2 = chi_square_16(shares, cfg.modulus_bits);
    os << "uniformity.party" << j << ".messages = " << shares.size() << "\n";
    os << "uniformity.party" << j << ".chi2 = " << chi2 << "\n";
    verdict("uniformity.party" + std::to_string(j), chi2 < kChi2Crit15Df01);

    auto bits = received_bits(real, j, Tag::kGt);
    const auto bits_c = received_bits(real, j, Tag::kGtc);
    bits.insert(bits.end(), bits_c.begin(), bits_c.end());
    if (!bits.empty()) {
      double ones = 0;
      for (uint8_t b : bits) ones += b;
      const double rate = ones / static_cast<double>(bits.size());
      const double slack = 2.576 * std::sqrt(0.25 / static_cast<double>(bits.size()));
      os << "bits.party" << j << ".rate = " << rate << "\n";
      verdict("bits.party" + std::to_string(j), std::fabs(rate - 0.5) <= slack);
    }

    const auto synth_shares = received_share_values(synth, j, {Tag::kOle, Tag::kTrunc, Tag::kAgg});
    const double ks = ks_two_sample(shares, synth_shares);
    const double ks_crit = ks_threshold_01(shares.size(), synth_shares.size());
    os << "ks.party" << j << ".stat = " << ks << "\n";
    verdict("ks.party" + std::to_string(j), ks <= ks_crit);
  }

  // Per-round primitive accounting.
  bool counts_ok = true;
  if (cfg.method == Method::kProtocol1) {
    const size_t L = static_cast<size_t>(cfg.p1.logistic_samples);
    const size_t grad_products = n * d;
    for (int t = 1; t <= out.outer_iterations; ++t) {
      const std::string o = "o" + std::to_string(t) + ".";
      counts_ok &= real.count(Tag::kGt, o) == n * L;
      counts_ok &= phase_products(real, o + "gh", parties) == grad_products;
      counts_ok &= real.count(Tag::kGtc, o + "cv") == 1;
    }
    os << "counts.gt_per_round = " << n * L << "\n";
    os << "counts.gradient_products_per_round = " << grad_products << "\n";
    verdict("counts.protocol1", counts_ok);
  } else {
    const size_t k = static_cast<size_t>(cfg.p2.euler_steps);
    counts_ok &= real.count(Tag::kGt) == 0;  // sum-and-product purity
    for (int t = 1; t <= out.outer_iterations; ++t) {
      const std::string o = "o" + std::to_string(t) + ".";
      size_t round_products = phase_products(real, o + "delta", parties);
      for (size_t m = 1; m <= k; ++m) {
        round_products +=
            phase_products(real, o + "gev" + std::to_string(m), parties, /*exact=*/true);
      }
      counts_ok &= round_products == n * (k + d) + d * d;
      counts_ok &= real.count(Tag::kGtc, o) == 1;
    }
    os << "counts.products_per_round = " << n * (k + d) + d * d << "\n";
    verdict("counts.protocol2", counts_ok);
  }

  // Inversion iterations: 2d^3 products and one comparison each.
  bool inv_ok = true;
  for (int s = 1; s <= out.inversion_iterations; ++s) {
    const std::string label = "setup.inv.it" + std::to_string(s);
    inv_ok &= phase_products(real, label, parties, /*exact=*/true) == 2 * d * d * d;
    inv_ok &= real.count(Tag::kGtc, label, /*exact=*/true) == 1;
  }
  verdict("counts.inversion", inv_ok);

  verdict("overall", ok);
  write_text(out_path, os.str());
  return ok ? kExitOk : kExitSecurity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secure multi-party logistic regression simulator"};
  app.require_subcommand(1);

  // partition ---------------------------------------------------------------
  auto* partition_cmd = app.add_subcommand("partition", "split a CSV into per-party files");
  DataOptions part_data;
  std::string part_out = "parties";
  std::string part_scheme = "horizontal";
  int part_parties = 2;
  uint64_t part_seed = 1;
  add_data_options(partition_cmd, &part_data, /*party_dir_allowed=*/false);
  partition_cmd->get_option("--data")->required();
  partition_cmd->add_option("--out", part_out, "output directory")->capture_default_str();
  partition_cmd->add_option("--scheme", part_scheme, "horizontal | vertical | additive_random")
      ->capture_default_str();
  partition_cmd->add_option("--parties", part_parties)->capture_default_str();
  partition_cmd->add_option("--seed", part_seed)->capture_default_str();

  // fit ---------------------------------------------------------------------
  auto* fit_cmd = app.add_subcommand("fit", "fit logistic regression with any method");
  DataOptions fit_data;
  add_data_options(fit_cmd, &fit_data);
  std::string fit_method = "protocol1", fit_out, fit_trace, fit_config, fit_config_out,
              fit_mode = "strict", fit_scheme;
  std::optional<int> fit_L, fit_k, fit_parties, fit_max_outer;
  std::optional<double> fit_b, fit_eps;
  std::optional<uint64_t> fit_seed;
  std::string fit_hessian_mode;
  fit_cmd->add_option("--method", fit_method, "exact_nr | hesslb_clear | protocol1 | protocol2")
      ->capture_default_str();
  fit_cmd->add_option("--config", fit_config, "key=value config file");
  fit_cmd->add_option("--out", fit_out, "result file (default stdout)");
  fit_cmd->add_option("--trace", fit_trace, "per-round likelihood CSV (trace mode)");
  fit_cmd->add_option("--write-config", fit_config_out, "dump the effective config");
  fit_cmd->add_option("--mode", fit_mode, "strict | trace")->capture_default_str();
  fit_cmd->add_option("--scheme", fit_scheme, "partition scheme when starting from --data");
  fit_cmd->add_option("--L", fit_L, "protocol1 logistic sample count");
  fit_cmd->add_option("--k", fit_k, "protocol2 inner step count");
  fit_cmd->add_option("--b", fit_b, "protocol2 stopping threshold");
  fit_cmd->add_option("--eps", fit_eps, "convergence threshold");
  fit_cmd->add_option("--seed", fit_seed);
  fit_cmd->add_option("--parties", fit_parties);
  fit_cmd->add_option("--max-outer", fit_max_outer);
  fit_cmd->add_option("--hessian-mode", fit_hessian_mode, "hessian_lb | full_newton");

  // --config falls back to the SECLOGIT_CONFIG environment variable.
  auto config_path = [](const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("SECLOGIT_CONFIG");
    return std::string(env ? env : "");
  };

  auto build_config = [&]() {
    RunConfig cfg;
    const std::string path = config_path(fit_config);
    if (!path.empty()) cfg = RunConfig::from_file(path);
    cfg.method = method_from_name(fit_method);
    if (fit_mode == "trace") cfg.trace_mode = true;
    else if (fit_mode == "strict") cfg.trace_mode = false;
    else throw ValidationError("mode must be strict or trace");
    if (!fit_scheme.empty()) cfg.scheme = scheme_from_name(fit_scheme);
    if (fit_L) cfg.p1.logistic_samples = *fit_L;
    if (fit_k) cfg.p2.euler_steps = *fit_k;
    if (fit_b) cfg.b_threshold = *fit_b;
    if (fit_eps) cfg.eps_conv = *fit_eps;
    if (fit_seed) cfg.seed = *fit_seed;
    if (fit_parties) cfg.parties = *fit_parties;
    if (fit_max_outer) {
      cfg.p1.max_outer = *fit_max_outer;
      cfg.p2.max_outer = *fit_max_outer;
    }
    if (!fit_hessian_mode.empty()) {
      cfg.p1.hessian_mode = fit_hessian_mode == "full_newton" ? HessianMode::kFullNewton
                                                              : HessianMode::kHessianLb;
    }
    return cfg;
  };

  // bounds --------------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the error-bound calculators");
  std::vector<double> bounds_dkw, bounds_param, bounds_choose;
  std::optional<double> bounds_euler;
  std::string bounds_out;
  bounds_cmd->add_option("--dkw", bounds_dkw, "eps alpha: sample count for the CDF sup bound")
      ->expected(2);
  bounds_cmd->add_option("--param", bounds_param, "R L sup_err lambda_min: parameter error bound")
      ->expected(4);
  bounds_cmd->add_option("--euler", bounds_euler, "tau: per-step integration error bound");
  bounds_cmd->add_option("--choose-k", bounds_choose, "n tau: conservative step count")
      ->expected(2);
  bounds_cmd->add_option("--out", bounds_out, "output file (default stdout)");

  // compare -------------------------------------------------------------
  auto* compare_cmd = app.add_subcommand("compare", "emit per-iteration likelihood traces");
  DataOptions cmp_data;
  add_data_options(compare_cmd, &cmp_data);
  std::vector<std::string> cmp_methods{"exact_nr", "hesslb_clear"};
  int cmp_repeats = 1;
  std::string cmp_out = "traces.csv", cmp_config;
  std::optional<int> cmp_L, cmp_k, cmp_parties;
  std::optional<double> cmp_b;
  std::optional<uint64_t> cmp_seed;
  compare_cmd->add_option("--methods", cmp_methods, "comma list of methods")->delimiter(',');
  compare_cmd->add_option("--repeats", cmp_repeats, "protocol1 replications")
      ->capture_default_str();
  compare_cmd->add_option("--out", cmp_out)->capture_default_str();
  compare_cmd->add_option("--config", cmp_config);
  std::optional<double> cmp_eps;
  compare_cmd->add_option("--eps", cmp_eps, "convergence threshold");
  compare_cmd->add_option("--L", cmp_L);
  compare_cmd->add_option("--k", cmp_k);
  compare_cmd->add_option("--b", cmp_b);
  compare_cmd->add_option("--seed", cmp_seed);
  compare_cmd->add_option("--parties", cmp_parties);

  // security-check --------------------------------------------------------
  auto* sec_cmd = app.add_subcommand("security-check",
                                     "verify view synthesis, message marginals, and counts");
  DataOptions sec_data;
  add_data_options(sec_cmd, &sec_data);
  std::string sec_method = "protocol1", sec_out, sec_transcript, sec_config;
  std::optional<int> sec_L, sec_k, sec_parties;
  std::optional<double> sec_b;
  std::optional<uint64_t> sec_seed;
  sec_cmd->add_option("--method", sec_method)->capture_default_str();
  sec_cmd->add_option("--config", sec_config);
  sec_cmd->add_option("--out", sec_out, "report file (default stdout)");
  sec_cmd->add_option("--transcript", sec_transcript, "dump the full transcript CSV");
  std::optional<double> sec_eps;
  sec_cmd->add_option("--eps", sec_eps, "protocol1 convergence threshold");
  sec_cmd->add_option("--L", sec_L);
  sec_cmd->add_option("--k", sec_k);
  sec_cmd->add_option("--b", sec_b);
  sec_cmd->add_option("--seed", sec_seed);
  sec_cmd->add_option("--parties", sec_parties);

  CLI11_PARSE(app, argc, argv);

  try {
    if (partition_cmd->parsed()) {
      return cmd_partition(part_data, part_out, part_scheme, part_parties, part_seed);
    }
    if (fit_cmd->parsed()) {
      return cmd_fit(fit_data, build_config(), fit_out, fit_trace, fit_config_out);
    }
    if (bounds_cmd->parsed()) {
      return cmd_bounds(bounds_dkw, bounds_param, bounds_euler, bounds_choose, bounds_out);
    }
    if (compare_cmd->parsed()) {
      RunConfig cfg;
      const std::string path = config_path(cmp_config);
      if (!path.empty()) cfg = RunConfig::from_file(path);
      if (cmp_L) cfg.p1.logistic_samples = *cmp_L;
      if (cmp_k) cfg.p2.euler_steps = *cmp_k;
      if (cmp_b) cfg.b_threshold = *cmp_b;
      if (cmp_seed) cfg.seed = *cmp_seed;
      if (cmp_eps) cfg.eps_conv = *cmp_eps;
      if (cmp_parties) cfg.parties = *cmp_parties;
      return cmd_compare(cmp_data, cfg, cmp_methods, cmp_repeats, cmp_out);
    }
    if (sec_cmd->parsed()) {
      RunConfig cfg;
      const std::string path = config_path(sec_config);
      if (!path.empty()) cfg = RunConfig::from_file(path);
      cfg.method = method_from_name(sec_method);
      if (sec_L) cfg.p1.logistic_samples = *sec_L;
      if (sec_k) cfg.p2.euler_steps = *sec_k;
      if (sec_b) cfg.b_threshold = *sec_b;
      if (sec_seed) cfg.seed = *sec_seed;
      if (sec_eps) cfg.eps_conv = *sec_eps;
      if (sec_parties) cfg.parties = *sec_parties;
      return cmd_security_check(sec_data, cfg, sec_transcript, sec_out);
    }
  } catch (const NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const OverflowError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
