#pragma once

#include "netmean/metrics.hpp"
#include "netmean/sbm.hpp"

namespace netmean {

/// Closed-form predictions for G(n, p, q) used as oracles by the experiments.
/// The band and bound constants follow a reporting convention: every big-O
/// constant is taken as 1, and reports show both the statistic and the band.
struct TheoryPrediction {
  ResistanceMatrix expected_resistance;
  double lambda2;        // (p - q) / (p + q)
  double lambda2_band;   // sqrt(2 ln n / (n (p + q)))
  double tail_bound;     // 8 / sqrt(n p)
  double residual_scale; // 8 sqrt(2) / (n p)^(3/2); multiply by 1/d_i + 1/d_j
};

/// Expected resistance matrix: 4/(n(p+q)) within a community and
/// 4/(n(p+q)) + ((p-q)/(p+q)) * 4/(n^2 q) across, zero diagonal.
/// Requires q > 0: the across-community correction measures the sparse cut
/// between the communities and is singular at q = 0.
ResistanceMatrix predicted_mean_resistance(const SbmParams& params);

struct Lambda2Prediction {
  double value;  // (p - q) / (p + q)
  double band;   // sqrt(2 ln n / (n (p + q)))
};

Lambda2Prediction predicted_lambda2(const SbmParams& params);

/// Almost-sure asymptotic bound 8/sqrt(np) on the bulk eigenvalues of the
/// normalized adjacency (every one except the top two).
double spectral_tail_bound(const SbmParams& params);

/// Bound (1/d_i + 1/d_j) * 8*sqrt(2)/(np)^(3/2) on the residual quadratic
/// form left after projecting out the top two eigenvectors.
double residual_bound(const SbmParams& params, double di, double dj);

TheoryPrediction predict(const SbmParams& params);

}  // namespace netmean
