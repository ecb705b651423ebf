#include "netmean/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace netmean {

ResistanceMatrix predicted_mean_resistance(const SbmParams& params) {
  if (params.q <= 0.0) {
    throw std::invalid_argument(
        "expected resistance is undefined at q = 0: the across-community "
        "bottleneck term 4/(n^2 q) is singular");
  }
  if (params.p + params.q <= 0.0) {
    throw std::invalid_argument("expected resistance requires p + q > 0");
  }
  const int n = params.n;
  const double within = 4.0 / (n * (params.p + params.q));
  const double across =
      within + (params.p - params.q) / (params.p + params.q) * 4.0 / (static_cast<double>(n) * n * params.q);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      r(i, j) = params.same_community(i, j) ? within : across;
    }
  }
  return ResistanceMatrix(std::move(r));
}

Lambda2Prediction predicted_lambda2(const SbmParams& params) {
  if (params.p + params.q <= 0.0) {
    throw std::invalid_argument("lambda2 prediction requires p + q > 0");
  }
  Lambda2Prediction out;
  out.value = (params.p - params.q) / (params.p + params.q);
  out.band = std::sqrt(2.0 * std::log(static_cast<double>(params.n)) /
                       (params.n * (params.p + params.q)));
  return out;
}

double spectral_tail_bound(const SbmParams& params) {
  if (params.n * params.p <= 0.0) {
    throw std::invalid_argument("spectral tail bound requires n p > 0");
  }
  return 8.0 / std::sqrt(params.n * params.p);
}

double residual_bound(const SbmParams& params, double di, double dj) {
  if (di <= 0.0 || dj <= 0.0) {
    throw std::invalid_argument("residual bound requires positive degrees");
  }
  const double np = params.n * params.p;
  if (np <= 0.0) {
    throw std::invalid_argument("residual bound requires n p > 0");
  }
  return (1.0 / di + 1.0 / dj) * 8.0 * std::sqrt(2.0) / std::pow(np, 1.5);
}

TheoryPrediction predict(const SbmParams& params) {
  const Lambda2Prediction l2 = predicted_lambda2(params);
  const double np = params.n * params.p;
  return TheoryPrediction{predicted_mean_resistance(params), l2.value, l2.band,
                          spectral_tail_bound(params),
                          8.0 * std::sqrt(2.0) / std::pow(np, 1.5)};
}

}  // namespace netmean
