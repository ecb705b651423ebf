#include "netmean/frechet.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include <Eigen/Dense>

namespace netmean {

namespace {

void check_same_order(const BinaryAdjacency& b, const NetworkSample& sample) {
  if (b.order() != sample.order()) {
    throw std::invalid_argument("candidate and sample must have the same vertex count");
  }
}

[[maybe_unused]] WeightedAdjacency sample_mean(const NetworkSample& sample) {
  const int n = sample.order();
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(n, n);
  for (const auto& net : sample.networks()) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (net.edge(i, j)) {
          mean(i, j) += 1.0;
          mean(j, i) += 1.0;
        }
      }
    }
  }
  mean /= static_cast<double>(sample.count());
  return WeightedAdjacency(std::move(mean));
}

}  // namespace

double BarycenterResult::min_entry() const {
  const auto& m = reconstructed.matrix();
  const int n = reconstructed.order();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) best = std::min(best, m(i, j));
  }
  return n < 2 ? 0.0 : best;
}

double BarycenterResult::max_entry() const {
  const auto& m = reconstructed.matrix();
  const int n = reconstructed.order();
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) best = std::max(best, m(i, j));
  }
  return n < 2 ? 0.0 : best;
}

double frechet_function_hamming(const BinaryAdjacency& b, const NetworkSample& sample) {
  check_same_order(b, sample);
  long long total = 0;
  for (const auto& net : sample.networks()) {
    const long long d = hamming(b, net);
    total += d * d;
  }
  return static_cast<double>(total) / static_cast<double>(sample.count());
}

double frechet_function_median(const BinaryAdjacency& b, const NetworkSample& sample) {
  check_same_order(b, sample);
  long long total = 0;
  for (const auto& net : sample.networks()) total += hamming(b, net);
  const double value = static_cast<double>(total) / static_cast<double>(sample.count());
  // The mean Hamming distance coincides with delta(B, phat); keep the
  // identity under assertion as an internal cross-check.
  assert(std::abs(value - delta(WeightedAdjacency::from_binary(b), sample_mean(sample))) <=
         1e-9 * std::max(1.0, value));
  return value;
}

BinaryAdjacency majority_median(const NetworkSample& sample) {
  const int n = sample.order();
  const int count = sample.count();
  BinaryAdjacency median(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int present = 0;
      for (const auto& net : sample.networks()) {
        if (net.edge(i, j)) ++present;
      }
      // Edge iff present in at least half the sample; 2*present avoids
      // fractional comparison and resolves an exact tie to "present".
      if (2 * present >= count) median.set_edge(i, j, true);
    }
  }
  return median;
}

FrechetDecomposition decompose_frechet(const BinaryAdjacency& b, const NetworkSample& sample) {
  check_same_order(b, sample);
  const int n = b.order();
  const int count = sample.count();
  const long long mb = b.edge_count();

  // One pass over the sample collects, for each network k, its edge count
  // m_k and the count s_k of its edges lying in E(B). Everything in the
  // decomposition factors through these totals:
  //   sum over all pair-of-pairs of (phat*phat - rho)
  //     = S^2 - (1/N) sum_k m_k^2              with S = sum_e phat_e,
  //   zeta = 4 [ (S - S_E) S_E - (1/N) sum_k (m_k - s_k) s_k ]
  //     where S_E = sum over E(B) of phat_e,
  // and d_H(B, A^(k)) = m(B) + m_k - 2 s_k gives F2 exactly.
  long long f2_total = 0;
  long long sum_mk = 0;
  long long sum_sk = 0;
  long long sum_mk_sq = 0;
  long long sum_sbar_s = 0;
  for (const auto& net : sample.networks()) {
    long long mk = 0;
    long long sk = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (net.edge(i, j)) {
          ++mk;
          if (b.edge(i, j)) ++sk;
        }
      }
    }
    const long long d = mb + mk - 2 * sk;
    f2_total += d * d;
    sum_mk += mk;
    sum_sk += sk;
    sum_mk_sq += mk * mk;
    sum_sbar_s += (mk - sk) * sk;
  }

  const double inv_n = 1.0 / static_cast<double>(count);
  const double s_all = static_cast<double>(sum_mk) * inv_n;
  const double s_edges = static_cast<double>(sum_sk) * inv_n;
  const double s_nonedges = s_all - s_edges;
  const double delta_b_phat = (static_cast<double>(mb) - s_edges) + s_nonedges;

  FrechetDecomposition out;
  out.f2 = static_cast<double>(f2_total) * inv_n;
  out.fhat = delta_b_phat * delta_b_phat -
             (s_all * s_all - static_cast<double>(sum_mk_sq) * inv_n);
  out.zeta =
      4.0 * (s_nonedges * s_edges - static_cast<double>(sum_sbar_s) * inv_n);
  return out;
}

namespace {

std::uint32_t edge_mask(const BinaryAdjacency& g) {
  std::uint32_t mask = 0;
  int t = 0;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j, ++t) {
      if (g.edge(i, j)) mask |= std::uint32_t{1} << t;
    }
  }
  return mask;
}

BinaryAdjacency graph_from_mask(std::uint32_t mask, int n) {
  BinaryAdjacency g(n);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) {
      if (mask & (std::uint32_t{1} << t)) g.set_edge(i, j, true);
    }
  }
  return g;
}

BruteForceResult brute_force_impl(const NetworkSample& sample, FrechetMetric metric,
                                  bool parallel) {
  const int n = sample.order();
  if (n > kBruteForceMaxOrder) {
    throw std::invalid_argument("brute force enumeration supports at most 6 vertices");
  }
  const int pairs = n * (n - 1) / 2;
  const std::int64_t total = std::int64_t{1} << pairs;
  const int count = sample.count();

  // Candidate values are materialized per index, then reduced serially in
  // mask order, so parallel and serial fills yield identical results.
  std::vector<double> values(static_cast<std::size_t>(total),
                             std::numeric_limits<double>::infinity());

  if (metric == FrechetMetric::hamming) {
    std::vector<std::uint32_t> sample_masks(count);
    for (int k = 0; k < count; ++k) sample_masks[k] = edge_mask(sample.network(k));
    std::vector<long long> totals(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      long long acc = 0;
      for (int k = 0; k < count; ++k) {
        const long long d =
            std::popcount(static_cast<std::uint32_t>(mask) ^ sample_masks[k]);
        acc += d * d;
      }
      totals[mask] = acc;
    }
    for (std::int64_t mask = 0; mask < total; ++mask) {
      values[mask] = static_cast<double>(totals[mask]) / static_cast<double>(count);
    }
  } else {
    if (n < 2) {
      throw std::invalid_argument("the resistance metric requires at least 2 vertices");
    }
    for (int k = 0; k < count; ++k) {
      if (!is_connected(sample.network(k))) {
        throw std::invalid_argument(
            "resistance-metric brute force requires every sample network to be connected");
      }
    }
    // sum_k sum_{i<j} (x_ij - R^k_ij)^2 expands into candidate-only and
    // sample-only aggregates, so the sample is traversed once up front.
    Eigen::MatrixXd sum_r = Eigen::MatrixXd::Zero(n, n);
    double sum_sq = 0.0;
    for (int k = 0; k < count; ++k) {
      const Eigen::MatrixXd rk =
          effective_resistance(WeightedAdjacency::from_binary(sample.network(k))).matrix();
      sum_r += rk;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) sum_sq += rk(i, j) * rk(i, j);
      }
    }
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const BinaryAdjacency g = graph_from_mask(static_cast<std::uint32_t>(mask), n);
      if (!is_connected(g)) continue;  // skipped candidate, stays infinite
      const Eigen::MatrixXd rg =
          effective_resistance(WeightedAdjacency::from_binary(g)).matrix();
      double cand_sq = 0.0;
      double cross = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          cand_sq += rg(i, j) * rg(i, j);
          cross += rg(i, j) * sum_r(i, j);
        }
      }
      values[mask] =
          (static_cast<double>(count) * cand_sq - 2.0 * cross + sum_sq) /
          static_cast<double>(count);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  long long skipped = 0;
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (std::isinf(values[mask])) {
      ++skipped;
    } else {
      best = std::min(best, values[mask]);
    }
  }
  if (std::isinf(best)) {
    throw std::runtime_error("no feasible candidate graph under the requested metric");
  }

  BruteForceResult out;
  out.value = best;
  out.candidates_total = total;
  out.candidates_skipped = skipped;
  const double tie_band = best * (1.0 + 1e-12);
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (values[mask] <= tie_band) {
      out.minimizers.push_back(graph_from_mask(static_cast<std::uint32_t>(mask), n));
    }
  }
  return out;
}

double round_trip_tolerance(const ResistanceMatrix& r) {
  return 1e-6 * std::max(1.0, r.matrix().cwiseAbs().maxCoeff());
}

struct Reconstruction {
  WeightedAdjacency adjacency;
  double residual;
};

Reconstruction reconstruct(const ResistanceMatrix& r, double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
  const int n = r.order();
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, n);
  const Eigen::MatrixXd center = Eigen::MatrixXd::Identity(n, n) - ones / n;
  const Eigen::MatrixXd lap_pinv = -0.5 * center * r.matrix() * center;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(lap_pinv + (alpha / n) * ones);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw std::runtime_error("reconstruction system is numerically singular (rcond = " +
                             std::to_string(rcond) + ")");
  }
  // [pinv(L) + (alpha/n) J]^{-1} = L + 1/(alpha n) J, since L pinv(L) = I - J/n
  // and J^2 = n J; subtracting the rank-one shift recovers the Laplacian.
  const Eigen::MatrixXd lap = lu.inverse() - ones / (alpha * n);
  Eigen::MatrixXd a = -0.5 * (lap + lap.transpose());
  a.diagonal().setZero();

  WeightedAdjacency adjacency{std::move(a)};
  double residual = std::numeric_limits<double>::infinity();
  try {
    residual = (effective_resistance(adjacency).matrix() - r.matrix()).cwiseAbs().maxCoeff();
  } catch (const std::invalid_argument&) {
    // Reconstruction produced a graph without valid resistances (e.g. a
    // disconnected one); report an infinite round-trip residual.
  }
  return {std::move(adjacency), residual};
}

BarycenterResult barycenter_impl(const NetworkSample& sample, double alpha, bool parallel) {
  const int n = sample.order();
  const int count = sample.count();
  if (n < 2) {
    throw std::invalid_argument("the resistance barycenter requires at least 2 vertices");
  }
  for (int k = 0; k < count; ++k) {
    if (!is_connected(sample.network(k))) {
      throw std::invalid_argument("sample network " + std::to_string(k) +
                                  " is disconnected; the barycenter requires connectivity");
    }
  }

  std::vector<Eigen::MatrixXd> resistances(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int k = 0; k < count; ++k) {
    resistances[k] =
        effective_resistance(WeightedAdjacency::from_binary(sample.network(k))).matrix();
  }
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < count; ++k) mean += resistances[k];
  mean /= static_cast<double>(count);

  ResistanceMatrix mean_resistance{std::move(mean)};
  Reconstruction rec = reconstruct(mean_resistance, alpha);
  if (!(rec.residual <= round_trip_tolerance(mean_resistance))) {
    throw ReconstructionError("barycenter reconstruction failed the round-trip check",
                              rec.residual);
  }
  return BarycenterResult{std::move(mean_resistance), std::move(rec.adjacency), alpha,
                          rec.residual};
}

}  // namespace

BruteForceResult brute_force_frechet_mean(const NetworkSample& sample, FrechetMetric metric) {
  return brute_force_impl(sample, metric, true);
}

BruteForceResult brute_force_frechet_mean_serial(const NetworkSample& sample,
                                                 FrechetMetric metric) {
  return brute_force_impl(sample, metric, false);
}

WeightedAdjacency adjacency_from_resistance(const ResistanceMatrix& r, double alpha) {
  Reconstruction rec = reconstruct(r, alpha);
  if (!(rec.residual <= round_trip_tolerance(r))) {
    throw ReconstructionError(
        "input is not the resistance matrix of a connected weighted graph", rec.residual);
  }
  return std::move(rec.adjacency);
}

BarycenterResult resistance_barycenter(const NetworkSample& sample, double alpha) {
  return barycenter_impl(sample, alpha, true);
}

BarycenterResult resistance_barycenter_serial(const NetworkSample& sample, double alpha) {
  return barycenter_impl(sample, alpha, false);
}

}  // namespace netmean
