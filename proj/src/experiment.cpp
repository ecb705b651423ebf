#include "netmean/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <limits>
#include <locale>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "netmean/frechet.hpp"
#include "netmean/matrix_io.hpp"
#include "netmean/metrics.hpp"
#include "netmean/rng.hpp"
#include "netmean/theory.hpp"
#include "netmean/version.hpp"

namespace netmean {

std::string experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::theorem1: return "theorem1";
    case ExperimentKind::theorem2: return "theorem2";
    case ExperimentKind::zeta_scaling: return "zeta-scaling";
    case ExperimentKind::spectrum: return "spectrum";
    case ExperimentKind::round_trip: return "round-trip";
  }
  throw std::logic_error("unknown experiment kind");
}

ExperimentKind experiment_kind_from_name(const std::string& name) {
  if (name == "theorem1") return ExperimentKind::theorem1;
  if (name == "theorem2") return ExperimentKind::theorem2;
  if (name == "zeta-scaling") return ExperimentKind::zeta_scaling;
  if (name == "spectrum") return ExperimentKind::spectrum;
  if (name == "round-trip") return ExperimentKind::round_trip;
  throw std::invalid_argument(
      "unknown experiment '" + name +
      "' (expected theorem1, theorem2, zeta-scaling, spectrum, or round-trip)");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (sample_size < 1) throw std::invalid_argument("sample_size must be at least 1");
  for (const auto& [name, value] : tolerances) {
    if (!(value > 0.0)) {
      throw std::invalid_argument("tolerance '" + name + "' must be positive");
    }
  }
  if (experiment == ExperimentKind::theorem2 && n_grid.empty()) {
    throw std::invalid_argument("theorem2 requires a nonempty n_grid");
  }
  for (int n : n_grid) {
    if (n < 2 || n % 2 != 0) {
      throw std::invalid_argument("n_grid entries must be positive even vertex counts");
    }
  }
  if (experiment == ExperimentKind::zeta_scaling && sample_grid.size() < 2) {
    throw std::invalid_argument("zeta-scaling requires at least two sample_grid sizes");
  }
  for (int s : sample_grid) {
    if (s < 1) throw std::invalid_argument("sample_grid entries must be at least 1");
  }
  if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.experiment = kind;
  switch (kind) {
    case ExperimentKind::theorem1:
      cfg.tolerances = {{"agreement_rate", 0.95}, {"var_ratio_rate", 0.95}};
      break;
    case ExperimentKind::theorem2:
      cfg.params = SbmParams(200, 0.5, 0.1);
      cfg.sample_size = 50;
      cfg.trials = 10;
      cfg.n_grid = {50, 100, 200};
      cfg.tolerances = {{"max_abs_err", 0.15}, {"block_mean_err", 0.05}};
      break;
    case ExperimentKind::zeta_scaling:
      cfg.params = SbmParams(8, 0.5, 0.1);
      cfg.sample_size = 1024;
      cfg.trials = 20;
      cfg.sample_grid = {16, 64, 256, 1024};
      cfg.tolerances = {{"slope_dev", 0.15}};
      break;
    case ExperimentKind::spectrum:
      cfg.params = SbmParams(400, 0.5, 0.1);
      cfg.sample_size = 1;
      cfg.trials = 50;
      cfg.tolerances = {{"lambda2_rate", 0.90},
                        {"tail_rate", 0.90},
                        {"sign_rate", 0.90},
                        {"sign_coord_frac", 0.95},
                        {"band_multiplier", 3.0}};
      break;
    case ExperimentKind::round_trip:
      cfg.params = SbmParams(50, 0.5, 0.1);
      cfg.sample_size = 1;
      cfg.trials = 100;
      cfg.tolerances = {{"max_residual", 1e-8}, {"alpha_disagreement", 1e-8}};
      break;
  }
  return cfg;
}

ExperimentConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.contains("experiment")) {
    throw std::invalid_argument("config must name an 'experiment'");
  }
  ExperimentConfig cfg =
      default_config(experiment_kind_from_name(doc.at("experiment").get<std::string>()));
  if (doc.contains("params")) {
    const auto& p = doc.at("params");
    cfg.params = SbmParams(p.value("n", cfg.params.n), p.value("p", cfg.params.p),
                           p.value("q", cfg.params.q));
  }
  if (doc.contains("sample_size")) cfg.sample_size = doc.at("sample_size").get<int>();
  if (doc.contains("trials")) cfg.trials = doc.at("trials").get<int>();
  if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("output_dir")) {
    cfg.output_dir = doc.at("output_dir").get<std::string>();
  }
  if (doc.contains("alpha")) cfg.alpha = doc.at("alpha").get<double>();
  if (doc.contains("tolerances")) {
    for (const auto& [name, value] : doc.at("tolerances").items()) {
      cfg.tolerances[name] = value.get<double>();
    }
  }
  if (doc.contains("n_grid")) cfg.n_grid = doc.at("n_grid").get<std::vector<int>>();
  if (doc.contains("sample_grid")) {
    cfg.sample_grid = doc.at("sample_grid").get<std::vector<int>>();
  }
  cfg.validate();
  return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json doc;
  doc["experiment"] = experiment_kind_name(cfg.experiment);
  doc["params"] = {{"n", cfg.params.n}, {"p", cfg.params.p}, {"q", cfg.params.q}};
  doc["sample_size"] = cfg.sample_size;
  doc["trials"] = cfg.trials;
  doc["seed"] = cfg.seed;
  doc["output_dir"] = cfg.output_dir.generic_string();
  doc["alpha"] = cfg.alpha;
  doc["tolerances"] = cfg.tolerances;
  if (!cfg.n_grid.empty()) doc["n_grid"] = cfg.n_grid;
  if (!cfg.sample_grid.empty()) doc["sample_grid"] = cfg.sample_grid;
  return doc;
}

namespace {

double tolerance(const ExperimentConfig& cfg, const std::string& name) {
  const auto it = cfg.tolerances.find(name);
  if (it == cfg.tolerances.end()) {
    throw std::invalid_argument("missing tolerance '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> row_prefix(int trial, std::uint64_t seed, int n, double p, double q,
                                    int sample_size) {
  return {std::to_string(trial), std::to_string(seed),           std::to_string(n),
          format_double(p),      format_double(q),               std::to_string(sample_size)};
}

nlohmann::json check_ge(double value, double threshold) {
  return {{"value", value}, {"threshold", threshold}, {"relation", ">="},
          {"pass", value >= threshold}};
}

nlohmann::json check_le(double value, double threshold) {
  return {{"value", value}, {"threshold", threshold}, {"relation", "<="},
          {"pass", value <= threshold}};
}

bool all_pass(const nlohmann::json& checks) {
  for (const auto& [name, check] : checks.items()) {
    (void)name;
    if (!check.at("pass").get<bool>()) return false;
  }
  return true;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double xb = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double yb = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - xb) * (y[i] - yb);
    den += (x[i] - xb) * (x[i] - xb);
  }
  return num / den;
}

/// Runs one body per flat index in parallel, collecting the first failure
/// and rethrowing it after the loop (exceptions must not cross the loop).
template <typename Body>
void parallel_trials(int count, const Body& body) {
  std::vector<char> failed(count, 0);
  std::vector<std::string> messages(count);
#pragma omp parallel for schedule(dynamic)
  for (int f = 0; f < count; ++f) {
    try {
      body(f);
    } catch (const std::exception& e) {
      failed[f] = 1;
      messages[f] = e.what();
    }
  }
  for (int f = 0; f < count; ++f) {
    if (failed[f]) {
      throw std::runtime_error("trial " + std::to_string(f) + " failed: " + messages[f]);
    }
  }
}

// How many random candidate graphs probe the variance inequality per trial.
constexpr int kVarianceProbes = 20;
// Offset keeping auxiliary seed streams clear of the per-network stream.
constexpr std::uint64_t kAuxStream = std::uint64_t{1} << 20;

ExperimentReport run_theorem1(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.config = cfg;
  report.columns = {"trial", "seed", "n", "p", "q", "N",
                    "agree", "empty_minimizer", "minimizer_count",
                    "bf_value", "median_value", "min_var_ratio"};
  report.rows.resize(cfg.trials);

  std::vector<int> agree(cfg.trials, 0);
  std::vector<int> empty_min(cfg.trials, 0);
  std::vector<double> ratios(cfg.trials, 0.0);

  parallel_trials(cfg.trials, [&](int t) {
    const std::uint64_t seed_t = derived_seed(cfg.seed, t);
    const NetworkSample sample = sample_sbm(cfg.params, cfg.sample_size, seed_t);
    const BinaryAdjacency median = majority_median(sample);
    const BruteForceResult bf = brute_force_frechet_mean(sample, FrechetMetric::hamming);

    agree[t] = bf.minimizers.size() == 1 && bf.minimizers.front() == median ? 1 : 0;
    empty_min[t] =
        bf.minimizers.size() == 1 && bf.minimizers.front().edge_count() == 0 ? 1 : 0;
    const double median_value = frechet_function_hamming(median, sample);

    // Quadratic-growth probe: the worst ratio |Fhat(B) - Fhat(median)| over
    // the squared l1 distance, across random candidates.
    const NetworkSample probes = sample_sbm(SbmParams(cfg.params.n, 0.5, 0.5),
                                            kVarianceProbes, derived_seed(seed_t, kAuxStream));
    const double fhat_median = decompose_frechet(median, sample).fhat;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& b : probes.networks()) {
      const long long d = hamming(b, median);
      if (d == 0) continue;
      const double fhat_b = decompose_frechet(b, sample).fhat;
      min_ratio = std::min(min_ratio, std::abs(fhat_b - fhat_median) /
                                          static_cast<double>(4 * d * d));
    }
    if (std::isinf(min_ratio)) min_ratio = 0.0;
    ratios[t] = min_ratio;

    auto row = row_prefix(t, seed_t, cfg.params.n, cfg.params.p, cfg.params.q,
                          cfg.sample_size);
    row.push_back(std::to_string(agree[t]));
    row.push_back(std::to_string(empty_min[t]));
    row.push_back(std::to_string(static_cast<long long>(bf.minimizers.size())));
    row.push_back(format_double(bf.value));
    row.push_back(format_double(median_value));
    row.push_back(format_double(min_ratio));
    report.rows[t] = std::move(row);
  });

  const double trials = cfg.trials;
  const double agreement_rate =
      std::accumulate(agree.begin(), agree.end(), 0) / trials;
  const double empty_rate =
      std::accumulate(empty_min.begin(), empty_min.end(), 0) / trials;
  int positive = 0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (double r : ratios) {
    if (r > 0.0) ++positive;
    worst_ratio = std::min(worst_ratio, r);
  }

  nlohmann::json checks;
  checks["agreement_rate"] = check_ge(agreement_rate, tolerance(cfg, "agreement_rate"));
  checks["var_ratio_rate"] = check_ge(positive / trials, tolerance(cfg, "var_ratio_rate"));
  report.summary = {{"agreement_rate", agreement_rate},
                    {"empty_minimizer_rate", empty_rate},
                    {"var_ratio_positive_rate", positive / trials},
                    {"min_var_ratio", worst_ratio},
                    {"checks", checks}};
  report.passed = all_pass(checks);
  return report;
}

ExperimentReport run_theorem2(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.config = cfg;
  report.columns = {"trial", "seed", "n", "p", "q", "N",
                    "max_abs_err", "mean_abs_err", "round_trip_residual", "wall_ms"};
  const int grid = static_cast<int>(cfg.n_grid.size());
  const int rows = grid * cfg.trials;
  report.rows.resize(rows);

  std::vector<double> max_err(rows), mean_err(rows), residual(rows);
  std::vector<double> within_dev(rows), across_dev(rows);

  parallel_trials(rows, [&](int f) {
    const int ni = f / cfg.trials;
    const int t = f % cfg.trials;
    const SbmParams params(cfg.n_grid[ni], cfg.params.p, cfg.params.q);
    const std::uint64_t seed_f = derived_seed(cfg.seed, f);

    const auto start = std::chrono::steady_clock::now();
    const NetworkSample sample = sample_sbm(params, cfg.sample_size, seed_f);
    const BarycenterResult bary = resistance_barycenter(sample, cfg.alpha);
    const WeightedAdjacency expected = expected_matrix(params);

    const int n = params.n;
    double worst = 0.0;
    double total = 0.0;
    double within_sum = 0.0;
    double across_sum = 0.0;
    int within_count = 0;
    int across_count = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double err = std::abs(bary.reconstructed(i, j) - expected(i, j));
        worst = std::max(worst, err);
        total += err;
        if (params.same_community(i, j)) {
          within_sum += bary.reconstructed(i, j);
          ++within_count;
        } else {
          across_sum += bary.reconstructed(i, j);
          ++across_count;
        }
      }
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    max_err[f] = worst;
    mean_err[f] = total / (n * (n - 1) / 2);
    residual[f] = bary.round_trip_residual;
    within_dev[f] = std::abs(within_sum / within_count - params.p);
    across_dev[f] = std::abs(across_sum / across_count - params.q);

    auto row = row_prefix(t, seed_f, n, params.p, params.q, cfg.sample_size);
    row.push_back(format_double(max_err[f]));
    row.push_back(format_double(mean_err[f]));
    row.push_back(format_double(residual[f]));
    row.push_back(format_double(wall_ms));
    report.rows[f] = std::move(row);
  });

  const double worst_max = *std::max_element(max_err.begin(), max_err.end());
  const double worst_within = *std::max_element(within_dev.begin(), within_dev.end());
  const double worst_across = *std::max_element(across_dev.begin(), across_dev.end());
  const double worst_residual = *std::max_element(residual.begin(), residual.end());
  const double mean_of_means =
      std::accumulate(mean_err.begin(), mean_err.end(), 0.0) / rows;

  nlohmann::json per_n = nlohmann::json::object();
  for (int ni = 0; ni < grid; ++ni) {
    const auto begin = max_err.begin() + ni * cfg.trials;
    per_n[std::to_string(cfg.n_grid[ni])] = {
        {"max_abs_err", *std::max_element(begin, begin + cfg.trials)}};
  }

  nlohmann::json checks;
  checks["max_abs_err"] = check_le(worst_max, tolerance(cfg, "max_abs_err"));
  checks["within_block_mean"] = check_le(worst_within, tolerance(cfg, "block_mean_err"));
  checks["across_block_mean"] = check_le(worst_across, tolerance(cfg, "block_mean_err"));
  report.summary = {{"worst_max_abs_err", worst_max},
                    {"mean_abs_err", mean_of_means},
                    {"worst_round_trip_residual", worst_residual},
                    {"worst_within_block_dev", worst_within},
                    {"worst_across_block_dev", worst_across},
                    {"per_n", per_n},
                    {"checks", checks}};
  report.passed = all_pass(checks);
  return report;
}

ExperimentReport run_zeta_scaling(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.config = cfg;
  report.columns = {"trial", "seed", "n", "p", "q", "N", "abs_zeta"};
  const int grid = static_cast<int>(cfg.sample_grid.size());
  const int rows = cfg.trials * grid;
  report.rows.resize(rows);

  std::vector<double> abs_zeta(rows, 0.0);

  parallel_trials(rows, [&](int f) {
    const int t = f / grid;
    const int g = f % grid;
    const std::uint64_t seed_t = derived_seed(cfg.seed, t);
    // The candidate is fixed per trial across the whole sample-size grid, so
    // the decay in N is measured on a common graph.
    const BinaryAdjacency b =
        sample_sbm(SbmParams(cfg.params.n, 0.5, 0.5), 1, derived_seed(seed_t, kAuxStream))
            .network(0);
    const NetworkSample sample =
        sample_sbm(cfg.params, cfg.sample_grid[g], derived_seed(seed_t, g));
    abs_zeta[f] = std::abs(decompose_frechet(b, sample).zeta);

    auto row = row_prefix(t, seed_t, cfg.params.n, cfg.params.p, cfg.params.q,
                          cfg.sample_grid[g]);
    row.push_back(format_double(abs_zeta[f]));
    report.rows[f] = std::move(row);
  });

  std::vector<double> log_n(grid), log_mean(grid);
  nlohmann::json per_size = nlohmann::json::object();
  for (int g = 0; g < grid; ++g) {
    double total = 0.0;
    for (int t = 0; t < cfg.trials; ++t) total += abs_zeta[t * grid + g];
    const double mean = total / cfg.trials;
    per_size[std::to_string(cfg.sample_grid[g])] = mean;
    log_n[g] = std::log(static_cast<double>(cfg.sample_grid[g]));
    log_mean[g] = std::log(mean);
  }
  const double slope = fit_slope(log_n, log_mean);
  const double dev = tolerance(cfg, "slope_dev");

  nlohmann::json checks;
  checks["slope_upper"] = check_le(slope, -0.5 + dev);
  checks["slope_lower"] = check_ge(slope, -0.5 - dev);
  report.summary = {{"slope", slope},
                    {"slope_target", -0.5},
                    {"mean_abs_zeta_per_size", per_size},
                    {"checks", checks}};
  report.passed = all_pass(checks);
  return report;
}

ExperimentReport run_spectrum(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.config = cfg;
  report.columns = {"trial", "seed", "n", "p", "q", "N",
                    "lambda2", "lambda2_err", "tail_max", "sign_match_frac"};
  report.rows.resize(cfg.trials);

  const Lambda2Prediction pred = predicted_lambda2(cfg.params);
  const double tail_bound = spectral_tail_bound(cfg.params);
  const double band_mult = tolerance(cfg, "band_multiplier");
  const double coord_frac = tolerance(cfg, "sign_coord_frac");
  const int n = cfg.params.n;

  std::vector<double> lambda2_err(cfg.trials), tail_max(cfg.trials), sign_frac(cfg.trials);

  parallel_trials(cfg.trials, [&](int t) {
    const std::uint64_t seed_t = derived_seed(cfg.seed, t);
    const BinaryAdjacency net = sample_sbm(cfg.params, 1, seed_t).network(0);
    const SpectralDecomposition spec =
        spectral_decomposition(WeightedAdjacency::from_binary(net));

    const double lambda2 = spec.eigenvalues()(1);
    lambda2_err[t] = std::abs(lambda2 - pred.value);
    double tail = 0.0;
    for (int m = 2; m < n; ++m) tail = std::max(tail, std::abs(spec.eigenvalues()(m)));
    tail_max[t] = tail;

    int matches = 0;
    for (int i = 0; i < n; ++i) {
      const int sign = spec.eigenvectors()(i, 1) >= 0.0 ? 1 : -1;
      if (sign == cfg.params.sign(i)) ++matches;
    }
    sign_frac[t] = std::max(matches, n - matches) / static_cast<double>(n);

    auto row = row_prefix(t, seed_t, n, cfg.params.p, cfg.params.q, 1);
    row.push_back(format_double(lambda2));
    row.push_back(format_double(lambda2_err[t]));
    row.push_back(format_double(tail));
    row.push_back(format_double(sign_frac[t]));
    report.rows[t] = std::move(row);
  });

  int lambda2_ok = 0;
  int tail_ok = 0;
  int sign_ok = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    if (lambda2_err[t] <= band_mult * pred.band) ++lambda2_ok;
    if (tail_max[t] <= tail_bound) ++tail_ok;
    if (sign_frac[t] >= coord_frac) ++sign_ok;
  }
  const double trials = cfg.trials;

  nlohmann::json checks;
  checks["lambda2_rate"] = check_ge(lambda2_ok / trials, tolerance(cfg, "lambda2_rate"));
  checks["tail_rate"] = check_ge(tail_ok / trials, tolerance(cfg, "tail_rate"));
  checks["sign_rate"] = check_ge(sign_ok / trials, tolerance(cfg, "sign_rate"));
  report.summary = {{"lambda2_predicted", pred.value},
                    {"lambda2_band", pred.band},
                    {"tail_bound", tail_bound},
                    {"lambda2_within_band_rate", lambda2_ok / trials},
                    {"tail_within_bound_rate", tail_ok / trials},
                    {"sign_match_rate", sign_ok / trials},
                    {"checks", checks}};
  report.passed = all_pass(checks);
  return report;
}

ExperimentReport run_round_trip(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.config = cfg;
  report.columns = {"trial", "seed", "n", "p", "q", "N",
                    "max_err_alpha1", "max_err_alpha7", "alpha_disagreement",
                    "resistance_residual"};
  report.rows.resize(cfg.trials);

  std::vector<double> err1(cfg.trials), err7(cfg.trials), disagree(cfg.trials),
      res_residual(cfg.trials);

  parallel_trials(cfg.trials, [&](int t) {
    const std::uint64_t seed_t = derived_seed(cfg.seed, t);
    // Draw until connected (bounded), then attach uniform weights in
    // [0.5, 1.5) in row-major pair order.
    BinaryAdjacency shape(cfg.params.n);
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      shape = sample_sbm(cfg.params, 1, derived_seed(seed_t, 100 + attempt)).network(0);
      found = is_connected(shape);
    }
    if (!found) {
      throw std::runtime_error("failed to draw a connected graph in 100 attempts");
    }
    const int n = cfg.params.n;
    auto eng = make_engine(derived_seed(seed_t, 7));
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (shape.edge(i, j)) {
          const double weight = 0.5 + next_uniform(eng);
          w(i, j) = weight;
          w(j, i) = weight;
        }
      }
    }
    const WeightedAdjacency a(std::move(w));
    const ResistanceMatrix r = effective_resistance(a);
    const WeightedAdjacency a1 = adjacency_from_resistance(r, 1.0);
    const WeightedAdjacency a7 = adjacency_from_resistance(r, 7.0);

    err1[t] = (a1.matrix() - a.matrix()).cwiseAbs().maxCoeff();
    err7[t] = (a7.matrix() - a.matrix()).cwiseAbs().maxCoeff();
    disagree[t] = (a1.matrix() - a7.matrix()).cwiseAbs().maxCoeff();
    res_residual[t] =
        (effective_resistance(a1).matrix() - r.matrix()).cwiseAbs().maxCoeff();

    auto row = row_prefix(t, seed_t, n, cfg.params.p, cfg.params.q, 1);
    row.push_back(format_double(err1[t]));
    row.push_back(format_double(err7[t]));
    row.push_back(format_double(disagree[t]));
    row.push_back(format_double(res_residual[t]));
    report.rows[t] = std::move(row);
  });

  const double worst_err =
      std::max(*std::max_element(err1.begin(), err1.end()),
               *std::max_element(err7.begin(), err7.end()));
  const double worst_disagree = *std::max_element(disagree.begin(), disagree.end());
  const double worst_res = *std::max_element(res_residual.begin(), res_residual.end());

  nlohmann::json checks;
  checks["max_residual"] = check_le(worst_err, tolerance(cfg, "max_residual"));
  checks["alpha_disagreement"] =
      check_le(worst_disagree, tolerance(cfg, "alpha_disagreement"));
  report.summary = {{"worst_max_err", worst_err},
                    {"worst_alpha_disagreement", worst_disagree},
                    {"worst_resistance_residual", worst_res},
                    {"checks", checks}};
  report.passed = all_pass(checks);
  return report;
}

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  switch (config.experiment) {
    case ExperimentKind::theorem1: return run_theorem1(config);
    case ExperimentKind::theorem2: return run_theorem2(config);
    case ExperimentKind::zeta_scaling: return run_zeta_scaling(config);
    case ExperimentKind::spectrum: return run_spectrum(config);
    case ExperimentKind::round_trip: return run_round_trip(config);
  }
  throw std::logic_error("unknown experiment kind");
}

std::string report_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out << (c ? "," : "") << report.columns[c];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << row[c];
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json report_json(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json obj;
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      obj[report.columns[c]] = row[c];
    }
    rows.push_back(std::move(obj));
  }
  return {{"experiment", experiment_kind_name(report.config.experiment)},
          {"config", config_to_json(report.config)},
          {"version", kVersion},
          {"columns", report.columns},
          {"rows", rows},
          {"summary", report.summary},
          {"pass", report.passed}};
}

std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& dir,
                                               ReportFormat format) {
  std::filesystem::create_directories(dir);
  const std::string name = experiment_kind_name(report.config.experiment);
  std::vector<std::filesystem::path> written;
  const nlohmann::json metadata = {{"version", kVersion}, {"generated_at", iso_utc_now()}};

  auto write_file = [&](const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("failed to open " + path.string() + " for writing");
    out << body;
    if (!out) throw std::runtime_error("failed to write " + path.string());
    written.push_back(path);
  };

  if (format == ReportFormat::csv) {
    write_file(dir / (name + ".csv"), report_csv(report));
    nlohmann::json summary = {{"experiment", name},
                              {"config", config_to_json(report.config)},
                              {"summary", report.summary},
                              {"pass", report.passed},
                              {"metadata", metadata}};
    write_file(dir / (name + "_summary.json"), summary.dump(2) + "\n");
  } else {
    nlohmann::json doc = report_json(report);
    doc["metadata"] = metadata;
    write_file(dir / (name + ".json"), doc.dump(2) + "\n");
  }
  return written;
}

}  // namespace netmean
