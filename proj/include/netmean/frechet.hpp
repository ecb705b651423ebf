#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "netmean/adjacency.hpp"
#include "netmean/metrics.hpp"
#include "netmean/sbm.hpp"

namespace netmean {

/// Exact split of the Frechet function under the Hamming metric,
/// F2 = Fhat + zeta, where Fhat depends on the sample only through its
/// moments and zeta couples the candidate's edge set with the sample.
struct FrechetDecomposition {
  double f2;    // (1/N) sum of squared Hamming distances to the sample
  double fhat;  // delta^2(B, phat) minus the moment correction
  double zeta;  // 4 * sum over (non-edge, edge) pairs of phat*phat - rho
};

/// Output of the resistance-metric barycenter: the mean resistance matrix,
/// the weighted adjacency reconstructed from it, and diagnostics.
struct BarycenterResult {
  ResistanceMatrix mean_resistance;
  WeightedAdjacency reconstructed;
  double alpha;
  /// Max entrywise |effective_resistance(reconstructed) - mean_resistance|.
  double round_trip_residual;

  /// Range of the reconstructed off-diagonal entries (no clipping is applied,
  /// so these may exit [0, 1]).
  double min_entry() const;
  double max_entry() const;
};

enum class FrechetMetric { hamming, resistance_sq };

/// Full minimizer set of a Frechet function over all graphs on n vertices.
struct BruteForceResult {
  std::vector<BinaryAdjacency> minimizers;
  double value = 0.0;                // minimal Frechet function value
  long long candidates_total = 0;    // 2^(n(n-1)/2)
  long long candidates_skipped = 0;  // disconnected candidates (resistance metric)
};

/// Thrown when a matrix fails the resistance round-trip realizability check.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Mean squared Hamming distance from b to the sample.
double frechet_function_hamming(const BinaryAdjacency& b, const NetworkSample& sample);

/// Mean (unsquared) Hamming distance from b to the sample; identical to
/// delta(b, phat) where phat is the sample mean matrix.
double frechet_function_median(const BinaryAdjacency& b, const NetworkSample& sample);

/// Majority rule: edge present iff it appears in at least half the sample
/// (a tie at exactly N/2 resolves to present). Minimizes
/// frechet_function_median over all graphs.
BinaryAdjacency majority_median(const NetworkSample& sample);

/// Computes (F2, Fhat, zeta) with F2 evaluated directly from Hamming
/// distances, so the identity F2 = Fhat + zeta is a genuine cross-check.
FrechetDecomposition decompose_frechet(const BinaryAdjacency& b, const NetworkSample& sample);

inline constexpr int kBruteForceMaxOrder = 6;

/// Exhaustive minimization of the Frechet function over all 2^(n(n-1)/2)
/// graphs, n <= 6. Under the resistance metric the search is restricted to
/// connected candidates; every sample member must be connected.
BruteForceResult brute_force_frechet_mean(const NetworkSample& sample, FrechetMetric metric);

/// Single-threaded reference of brute_force_frechet_mean; identical output.
BruteForceResult brute_force_frechet_mean_serial(const NetworkSample& sample,
                                                 FrechetMetric metric);

/// Recovers the unique weighted adjacency whose effective resistance is r,
/// via pinv(L) = -1/2 [I - J/n] R [I - J/n] followed by a regularized dense
/// inversion; the result is independent of alpha (any nonzero value).
/// Throws ReconstructionError when the round-trip check fails, i.e. r is not
/// the resistance matrix of any connected weighted graph.
WeightedAdjacency adjacency_from_resistance(const ResistanceMatrix& r, double alpha = 1.0);

/// Entrywise mean of the per-network effective resistance matrices, followed
/// by adjacency_from_resistance. Per-network resistances are independent and
/// computed in parallel; the mean is accumulated in ascending sample order.
BarycenterResult resistance_barycenter(const NetworkSample& sample, double alpha = 1.0);

/// Single-threaded reference of resistance_barycenter; identical output.
BarycenterResult resistance_barycenter_serial(const NetworkSample& sample, double alpha = 1.0);

}  // namespace netmean
