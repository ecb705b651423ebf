#include "netmean/adjacency.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netmean {

namespace {

void check_square(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
  }
}

}  // namespace

BinaryAdjacency::BinaryAdjacency(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("BinaryAdjacency: vertex count must be positive");
  }
  entries_.assign(static_cast<std::size_t>(n) * n, 0);
}

BinaryAdjacency BinaryAdjacency::from_dense(const Eigen::MatrixXd& m) {
  check_square(m, "BinaryAdjacency");
  const int n = static_cast<int>(m.rows());
  BinaryAdjacency a(n);
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) {
      throw std::invalid_argument("BinaryAdjacency: diagonal must be zero");
    }
    for (int j = i + 1; j < n; ++j) {
      const double v = m(i, j);
      if (v != 0.0 && v != 1.0) {
        throw std::invalid_argument("BinaryAdjacency: entries must be 0 or 1");
      }
      if (m(j, i) != v) {
        throw std::invalid_argument("BinaryAdjacency: matrix must be symmetric");
      }
      a.set_edge(i, j, v == 1.0);
    }
  }
  return a;
}

void BinaryAdjacency::set_edge(int i, int j, bool present) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("BinaryAdjacency: vertex index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("BinaryAdjacency: self-loops are not allowed");
  }
  const std::uint8_t v = present ? 1 : 0;
  entries_[static_cast<std::size_t>(i) * n_ + j] = v;
  entries_[static_cast<std::size_t>(j) * n_ + i] = v;
}

long long BinaryAdjacency::edge_count() const {
  long long m = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      m += edge(i, j) ? 1 : 0;
    }
  }
  return m;
}

Eigen::MatrixXd BinaryAdjacency::to_dense() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m(i, j) = entries_[static_cast<std::size_t>(i) * n_ + j];
    }
  }
  return m;
}

WeightedAdjacency::WeightedAdjacency(Eigen::MatrixXd m) : m_(std::move(m)) {
  check_square(m_, "WeightedAdjacency");
  const int n = static_cast<int>(m_.rows());
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i) {
    if (std::abs(m_(i, i)) > 1e-12 * scale) {
      throw std::invalid_argument("WeightedAdjacency: diagonal must be zero");
    }
    m_(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m_(i, j) - m_(j, i)) > 1e-12 * scale) {
        throw std::invalid_argument("WeightedAdjacency: matrix must be symmetric");
      }
      m_(j, i) = m_(i, j);
    }
  }
}

WeightedAdjacency WeightedAdjacency::zero(int n) {
  if (n < 1) {
    throw std::invalid_argument("WeightedAdjacency: vertex count must be positive");
  }
  return WeightedAdjacency(Eigen::MatrixXd::Zero(n, n));
}

WeightedAdjacency WeightedAdjacency::from_binary(const BinaryAdjacency& a) {
  return WeightedAdjacency(a.to_dense());
}

}  // namespace netmean
