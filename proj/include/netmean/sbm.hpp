#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "netmean/adjacency.hpp"

namespace netmean {

/// Two-community stochastic block model G(n, p, q): vertices 0..n/2-1 form
/// community 1, the rest community 2; edges are independent Bernoulli draws
/// with probability p within a community and q across.
struct SbmParams {
  int n;     // even vertex count
  double p;  // within-community edge probability
  double q;  // across-community edge probability

  SbmParams(int n_, double p_, double q_);

  /// +1 for the first community, -1 for the second.
  int sign(int vertex) const { return vertex < n / 2 ? 1 : -1; }
  bool same_community(int i, int j) const { return sign(i) == sign(j); }
};

/// Ordered list of independently sampled networks on a common vertex set.
class NetworkSample {
 public:
  NetworkSample(std::vector<BinaryAdjacency> networks, std::uint64_t seed);

  const std::vector<BinaryAdjacency>& networks() const { return networks_; }
  const BinaryAdjacency& network(int k) const { return networks_[k]; }
  std::uint64_t seed() const { return seed_; }
  int count() const { return static_cast<int>(networks_.size()); }
  int order() const { return networks_.front().order(); }

 private:
  std::vector<BinaryAdjacency> networks_;
  std::uint64_t seed_;
};

/// Entrywise sample mean and pairwise sample correlation of a network sample.
/// The correlation is indexed by unordered vertex pairs; it is materialized
/// densely for n up to the cap passed to sample_moments and evaluated on
/// demand from a retained copy of the sample above that.
class SampleMoments {
 public:
  const WeightedAdjacency& phat() const { return phat_; }
  int order() const { return n_; }
  bool dense() const { return sample_ == nullptr; }

  /// Sample correlation of the indicators of pairs {i,j} and {k,l}:
  /// the fraction of networks containing both.
  double rho(int i, int j, int k, int l) const;

  /// Row-major upper-triangular index of the unordered pair {i,j}.
  static int pair_index(int i, int j, int n);

 private:
  friend SampleMoments sample_moments(const NetworkSample&, int);

  WeightedAdjacency phat_;
  int n_;
  Eigen::MatrixXd rho_;  // pair-by-pair, only when dense
  std::shared_ptr<const std::vector<BinaryAdjacency>> sample_;

  explicit SampleMoments(WeightedAdjacency phat) : phat_(std::move(phat)), n_(phat_.order()) {}
};

/// Edge-probability matrix of the model: p within blocks, q across,
/// zero diagonal.
WeightedAdjacency expected_matrix(const SbmParams& params);

/// Draws `count` independent networks. Network k is generated from an
/// mt19937_64 engine seeded with derived_seed(seed, k); within a network,
/// vertex pairs are visited in row-major upper-triangular order and pair
/// (i,j) receives an edge iff the next uniform draw is below P_ij.
/// Output is bitwise reproducible for a given (params, count, seed).
NetworkSample sample_sbm(const SbmParams& params, int count, std::uint64_t seed);

/// Single-threaded reference of sample_sbm; produces identical output.
NetworkSample sample_sbm_serial(const SbmParams& params, int count, std::uint64_t seed);

inline constexpr int kDefaultRhoDenseCap = 32;

SampleMoments sample_moments(const NetworkSample& sample, int dense_cap = kDefaultRhoDenseCap);

}  // namespace netmean
