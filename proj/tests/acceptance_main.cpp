// Acceptance gate: eight desk-scale criteria, one printed line each.
// Exits nonzero if any criterion fails. Tolerances are pinned here and are
// not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "netmean/experiment.hpp"
#include "netmean/frechet.hpp"
#include "netmean/metrics.hpp"
#include "netmean/rng.hpp"
#include "netmean/sbm.hpp"
#include "netmean/theory.hpp"
#include "support/oracles.hpp"

using namespace netmean;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// 1. adjacency_from_resistance inverts effective_resistance on 100 random
//    connected weighted graphs, n <= 50, to 1e-8, identically for alpha 1 and 7.
CriterionResult criterion_round_trip() {
  auto eng = make_engine(2026);
  double max_err = 0.0;
  double max_disagreement = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(eng() % 48);
    const WeightedAdjacency a =
        test_support::random_connected_weighted(eng, n, 0.3, 0.5, 1.5);
    const ResistanceMatrix r = effective_resistance(a);
    const WeightedAdjacency a1 = adjacency_from_resistance(r, 1.0);
    const WeightedAdjacency a7 = adjacency_from_resistance(r, 7.0);
    max_err = std::max(max_err, (a1.matrix() - a.matrix()).cwiseAbs().maxCoeff());
    max_err = std::max(max_err, (a7.matrix() - a.matrix()).cwiseAbs().maxCoeff());
    max_disagreement =
        std::max(max_disagreement, (a1.matrix() - a7.matrix()).cwiseAbs().maxCoeff());
  }
  return {max_err <= 1e-8 && max_disagreement <= 1e-8,
          "max_err=" + num(max_err) + " alpha_disagreement=" + num(max_disagreement) +
              " over 100 graphs, n <= 50"};
}

// 2. Exact decomposition F2 = Fhat + zeta on 200 random (B, sample) pairs,
//    n <= 10, N <= 50, relative residual <= 1e-9.
CriterionResult criterion_decomposition() {
  auto eng = make_engine(4096);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 * (1 + static_cast<int>(eng() % 5));
    const int count = 1 + static_cast<int>(eng() % 50);
    const NetworkSample sample =
        sample_sbm(SbmParams(n, 0.65, 0.25), count, derived_seed(7000, t));
    const BinaryAdjacency b = test_support::random_connected_graph(eng, n, 0.5);
    const FrechetDecomposition dec = decompose_frechet(b, sample);
    worst = std::max(worst,
                     std::abs(dec.f2 - dec.fhat - dec.zeta) / std::max(1.0, dec.f2));
  }
  return {worst <= 1e-9, "worst relative residual=" + num(worst) + " over 200 pairs"};
}

// 3. Brute-force Hamming Frechet mean vs. majority median at n=6, N=201,
//    100 trials: dense regime (p=0.9, q=0.1) agrees >= 95 times; sparse
//    regime (p=0.3, q=0.1) yields the empty graph >= 95 times.
CriterionResult criterion_mean_equals_median() {
  const BinaryAdjacency empty(6);
  int agree = 0;
  int sparse_empty = 0;
  for (int t = 0; t < 100; ++t) {
    const NetworkSample dense =
        sample_sbm(SbmParams(6, 0.9, 0.1), 201, derived_seed(3001, t));
    const BruteForceResult bf = brute_force_frechet_mean(dense, FrechetMetric::hamming);
    if (bf.minimizers.size() == 1 && bf.minimizers.front() == majority_median(dense)) {
      ++agree;
    }
    const NetworkSample sparse =
        sample_sbm(SbmParams(6, 0.3, 0.1), 201, derived_seed(3002, t));
    const BruteForceResult sbf = brute_force_frechet_mean(sparse, FrechetMetric::hamming);
    if (sbf.minimizers.size() == 1 && sbf.minimizers.front() == empty) ++sparse_empty;
  }
  return {agree >= 95 && sparse_empty >= 95,
          "mean=median in " + std::to_string(agree) +
              "/100 dense trials; empty minimizer in " + std::to_string(sparse_empty) +
              "/100 sparse trials (need >= 95 each)"};
}

// 4. Barycenter recovery at n=200, p=0.5, q=0.1, N=50, 10 trials: max
//    entrywise |reconstructed - P| <= 0.15 in every trial and block means
//    within +-0.05 of p and q.
CriterionResult criterion_barycenter_recovery() {
  ExperimentConfig cfg = default_config(ExperimentKind::theorem2);
  cfg.n_grid = {200};
  const ExperimentReport report = run_experiment(cfg);
  const auto& s = report.summary;
  return {report.passed,
          "worst max|reconstructed-P|=" + num(s.at("worst_max_abs_err").get<double>()) +
              " (need <= 0.15), worst within-block dev=" +
              num(s.at("worst_within_block_dev").get<double>()) +
              ", worst across-block dev=" +
              num(s.at("worst_across_block_dev").get<double>()) + " (need <= 0.05)"};
}

// 5. adjacency_from_resistance(predicted_mean_resistance) recovers the
//    expected matrix to 1e-6 on the three reference parameter triples.
CriterionResult criterion_formula_consistency() {
  const SbmParams triples[] = {SbmParams(50, 0.6, 0.2), SbmParams(100, 0.5, 0.1),
                               SbmParams(200, 0.4, 0.05)};
  double worst = 0.0;
  for (const SbmParams& params : triples) {
    const WeightedAdjacency back =
        adjacency_from_resistance(predicted_mean_resistance(params));
    worst = std::max(
        worst, (back.matrix() - expected_matrix(params).matrix()).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-6, "worst entrywise error=" + num(worst) + " over 3 triples"};
}

// 6. Mean |zeta_N| decays like 1/sqrt(N): log-log slope over
//    N in {16, 64, 256, 1024} within [-0.65, -0.35].
CriterionResult criterion_zeta_scaling() {
  const ExperimentReport report =
      run_experiment(default_config(ExperimentKind::zeta_scaling));
  const double slope = report.summary.at("slope").get<double>();
  return {report.passed, "slope=" + num(slope) + " (need within [-0.65, -0.35])"};
}

// 7. Spectral structure at n=400, p=0.5, q=0.1, 50 trials: lambda2 within
//    3 bands in >= 90%, bulk within 8/sqrt(np) in >= 90%, eigenvector signs
//    match the communities on >= 95% of coordinates in >= 90% of trials.
CriterionResult criterion_spectrum() {
  const ExperimentReport report = run_experiment(default_config(ExperimentKind::spectrum));
  const auto& s = report.summary;
  return {report.passed,
          "lambda2 rate=" + num(s.at("lambda2_within_band_rate").get<double>()) +
              ", tail rate=" + num(s.at("tail_within_bound_rate").get<double>()) +
              ", sign rate=" + num(s.at("sign_match_rate").get<double>()) +
              " (need >= 0.9 each)"};
}

// 8. Metric cross-checks: the normalized-Laplacian resistance matches the
//    combinatorial-Laplacian oracle to 1e-9; delta equals Hamming exactly on
//    binary inputs; resistances obey the triangle inequality on all triples.
CriterionResult criterion_metric_cross_checks() {
  auto eng = make_engine(512);
  double worst_oracle = 0.0;
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(eng() % 28);
    if (t % 2 == 0) {
      const BinaryAdjacency g = test_support::random_connected_graph(eng, n, 0.3);
      worst_oracle = std::max(
          worst_oracle,
          (effective_resistance(WeightedAdjacency::from_binary(g)).matrix() -
           test_support::resistance_via_combinatorial(g.to_dense()))
              .cwiseAbs()
              .maxCoeff());
    } else {
      const WeightedAdjacency a =
          test_support::random_connected_weighted(eng, n, 0.3, 0.2, 3.0);
      worst_oracle = std::max(
          worst_oracle, (effective_resistance(a).matrix() -
                         test_support::resistance_via_combinatorial(a.matrix()))
                            .cwiseAbs()
                            .maxCoeff());
    }
  }

  bool delta_exact = true;
  for (int t = 0; t < 50 && delta_exact; ++t) {
    const int n = 2 + static_cast<int>(eng() % 19);
    const BinaryAdjacency a = test_support::random_connected_graph(eng, n, 0.4);
    const BinaryAdjacency b = test_support::random_connected_graph(eng, n, 0.4);
    delta_exact = delta(WeightedAdjacency::from_binary(a),
                        WeightedAdjacency::from_binary(b)) ==
                  static_cast<double>(hamming(a, b));
  }

  double worst_triangle = 0.0;
  for (int t = 0; t < 10; ++t) {
    const int n = 3 + static_cast<int>(eng() % 13);
    const BinaryAdjacency g = test_support::random_connected_graph(eng, n, 0.4);
    const ResistanceMatrix r = effective_resistance(WeightedAdjacency::from_binary(g));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          worst_triangle = std::max(worst_triangle, r(i, j) - r(i, k) - r(k, j));
        }
      }
    }
  }

  return {worst_oracle <= 1e-9 && delta_exact && worst_triangle <= 1e-10,
          "oracle dev=" + num(worst_oracle) + ", delta==hamming " +
              (delta_exact ? "exact" : "VIOLATED") +
              ", worst triangle slack=" + num(worst_triangle)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<CriterionResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {"round-trip inversion, 100 graphs n<=50, tol 1e-8, alpha {1,7}",
       criterion_round_trip},
      {"decomposition identity, 200 pairs n<=10 N<=50, tol 1e-9",
       criterion_decomposition},
      {"brute-force mean vs majority median, n=6 N=201, 100 trials",
       criterion_mean_equals_median},
      {"barycenter block recovery, n=200 p=0.5 q=0.1 N=50, 10 trials",
       criterion_barycenter_recovery},
      {"closed-form resistance inverts to the expected matrix, tol 1e-6",
       criterion_formula_consistency},
      {"zeta scaling slope over N {16,64,256,1024}", criterion_zeta_scaling},
      {"spectral structure, n=400, 50 trials", criterion_spectrum},
      {"metric cross-checks (oracle, delta, triangle inequality)",
       criterion_metric_cross_checks},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s — %s [%.1fs]\n", result.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].name, result.detail.c_str(), secs);
    std::fflush(stdout);
    if (!result.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of 8 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
