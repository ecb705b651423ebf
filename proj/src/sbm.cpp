#include "netmean/sbm.hpp"

#include <stdexcept>
#include <utility>

#include "netmean/rng.hpp"

namespace netmean {

SbmParams::SbmParams(int n_, double p_, double q_) : n(n_), p(p_), q(q_) {
  if (n <= 0 || n % 2 != 0) {
    throw std::invalid_argument("vertex count must be positive and even");
  }
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("edge probabilities must lie in [0, 1]");
  }
}

NetworkSample::NetworkSample(std::vector<BinaryAdjacency> networks, std::uint64_t seed)
    : networks_(std::move(networks)), seed_(seed) {
  if (networks_.empty()) {
    throw std::invalid_argument("sample must contain at least one network");
  }
  const int n = networks_.front().order();
  for (const auto& net : networks_) {
    if (net.order() != n) {
      throw std::invalid_argument("all networks in a sample must share the vertex count");
    }
  }
}

WeightedAdjacency expected_matrix(const SbmParams& params) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(params.n, params.n);
  for (int i = 0; i < params.n; ++i) {
    for (int j = 0; j < params.n; ++j) {
      if (i == j) continue;
      m(i, j) = params.same_community(i, j) ? params.p : params.q;
    }
  }
  return WeightedAdjacency(std::move(m));
}

namespace {

BinaryAdjacency draw_network(const SbmParams& params, std::uint64_t seed) {
  auto eng = make_engine(seed);
  BinaryAdjacency net(params.n);
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      const double prob = params.same_community(i, j) ? params.p : params.q;
      if (next_uniform(eng) < prob) net.set_edge(i, j, true);
    }
  }
  return net;
}

}  // namespace

NetworkSample sample_sbm(const SbmParams& params, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample size must be at least 1");
  std::vector<BinaryAdjacency> nets(count, BinaryAdjacency(params.n));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    nets[k] = draw_network(params, derived_seed(seed, k));
  }
  return NetworkSample(std::move(nets), seed);
}

NetworkSample sample_sbm_serial(const SbmParams& params, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample size must be at least 1");
  std::vector<BinaryAdjacency> nets;
  nets.reserve(count);
  for (int k = 0; k < count; ++k) {
    nets.push_back(draw_network(params, derived_seed(seed, k)));
  }
  return NetworkSample(std::move(nets), seed);
}

int SampleMoments::pair_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 0 || i == j || j >= n) {
    throw std::invalid_argument("pair index requires distinct vertices in range");
  }
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double SampleMoments::rho(int i, int j, int k, int l) const {
  const int a = pair_index(i, j, n_);
  const int b = pair_index(k, l, n_);
  if (dense()) return rho_(a, b);
  long long both = 0;
  for (const auto& net : *sample_) {
    if (net.edge(i, j) && net.edge(k, l)) ++both;
  }
  return static_cast<double>(both) / static_cast<double>(sample_->size());
}

SampleMoments sample_moments(const NetworkSample& sample, int dense_cap) {
  const int n = sample.order();
  const int count = sample.count();
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
  mean /= static_cast<double>(count);

  SampleMoments moments{WeightedAdjacency(std::move(mean))};
  if (n <= dense_cap) {
    const int m = n * (n - 1) / 2;
    // Pack each network's edge indicators by pair index once, then take the
    // Gram matrix so rho(a,b) = (1/N) sum_k x_k(a) x_k(b).
    Eigen::MatrixXd indicators(m, count);
    for (int k = 0; k < count; ++k) {
      const auto& net = sample.network(k);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          indicators(SampleMoments::pair_index(i, j, n), k) = net.edge(i, j) ? 1.0 : 0.0;
        }
      }
    }
    moments.rho_ = indicators * indicators.transpose() / static_cast<double>(count);
  } else {
    moments.sample_ =
        std::make_shared<const std::vector<BinaryAdjacency>>(sample.networks());
  }
  return moments;
}

}  // namespace netmean
