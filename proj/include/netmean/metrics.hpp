#pragma once

#include <Eigen/Dense>

#include "netmean/adjacency.hpp"

namespace netmean {

/// Pairwise effective resistances of a connected weighted graph.
class ResistanceMatrix {
 public:
  explicit ResistanceMatrix(Eigen::MatrixXd entries);

  int order() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& matrix() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  Eigen::MatrixXd entries_;
};

/// Eigendecomposition of the normalized adjacency A_hat = D^{-1/2} A D^{-1/2},
/// eigenvalues sorted descending. Also carries the degree data and the
/// pseudoinverse of the normalized Laplacian L = I - A_hat, with eigenvalues
/// of L at or below 1e-10 * n treated as exactly zero.
class SpectralDecomposition {
 public:
  int order() const { return static_cast<int>(eigenvalues_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Column m is the unit eigenvector for eigenvalues()[m].
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  const Eigen::VectorXd& degrees() const { return degrees_; }
  double total_degree() const { return total_degree_; }
  /// Rank-one projector onto the m-th eigenvector.
  Eigen::MatrixXd projector(int m) const;
  const Eigen::MatrixXd& laplacian_pinv() const { return laplacian_pinv_; }

 private:
  friend SpectralDecomposition spectral_decomposition(const WeightedAdjacency&);

  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd degrees_;
  double total_degree_ = 0.0;
  Eigen::MatrixXd laplacian_pinv_;
};

/// Weights at or below this threshold are treated as absent edges by the
/// connectivity test and the degree computation.
inline constexpr double kEdgeWeightFloor = 1e-12;

/// Union-find connectivity over edges with weight above kEdgeWeightFloor.
bool is_connected(const WeightedAdjacency& a);
bool is_connected(const BinaryAdjacency& a);

/// Number of vertex pairs where the two graphs differ (half the entrywise
/// l1 difference of the adjacency matrices).
long long hamming(const BinaryAdjacency& a, const BinaryAdjacency& b);

/// Weighted extension of the Hamming distance to matrices with entries in
/// [0,1]: sum over unordered pairs of a_ij + b_ij - 2 a_ij b_ij. Restricted
/// to 0/1 matrices this equals hamming exactly.
double delta(const WeightedAdjacency& a, const WeightedAdjacency& b);

SpectralDecomposition spectral_decomposition(const WeightedAdjacency& a);

/// Effective resistances R_ij = <u_i - u_j, pinv(L)(u_i - u_j)> with
/// u_i = e_i / sqrt(d_i) and L the normalized Laplacian.
ResistanceMatrix effective_resistance(const WeightedAdjacency& a);

/// Sum over unordered pairs of squared entrywise resistance differences.
/// This is the squared distance used inside Frechet functions.
double resistance_distance_sq(const ResistanceMatrix& ra, const ResistanceMatrix& rb);
double resistance_distance_sq(const WeightedAdjacency& a, const WeightedAdjacency& b);

/// Square root of resistance_distance_sq.
double resistance_distance(const WeightedAdjacency& a, const WeightedAdjacency& b);

}  // namespace netmean
