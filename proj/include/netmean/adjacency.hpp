#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace netmean {

/// Adjacency matrix of a simple undirected graph: symmetric 0/1 entries,
/// zero diagonal. Vertices are indexed 0..n-1.
class BinaryAdjacency {
 public:
  explicit BinaryAdjacency(int n);

  /// Builds from a dense 0/1 matrix; throws std::invalid_argument if the
  /// matrix is not square, not symmetric, has a nonzero diagonal, or has
  /// entries other than 0 and 1.
  static BinaryAdjacency from_dense(const Eigen::MatrixXd& m);

  int order() const { return n_; }

  bool edge(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j] != 0; }

  void set_edge(int i, int j, bool present);

  /// Number of edges, i.e. pairs i<j with a_ij = 1.
  long long edge_count() const;

  Eigen::MatrixXd to_dense() const;

  bool operator==(const BinaryAdjacency& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  int n_;
  std::vector<std::uint8_t> entries_;  // n*n, kept symmetric with zero diagonal
};

/// Symmetric real matrix with zero diagonal. Houses edge-probability
/// matrices, entrywise sample means, and reconstructed barycenters.
/// Entries are usually nonnegative; barycenter reconstructions are stored
/// unclipped and may carry small negative values.
class WeightedAdjacency {
 public:
  explicit WeightedAdjacency(Eigen::MatrixXd m);

  static WeightedAdjacency zero(int n);
  static WeightedAdjacency from_binary(const BinaryAdjacency& a);

  int order() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Eigen::MatrixXd m_;
};

}  // namespace netmean
