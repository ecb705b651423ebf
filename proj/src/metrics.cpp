#include "netmean/metrics.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace netmean {

ResistanceMatrix::ResistanceMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  const auto n = entries_.rows();
  if (n < 1 || entries_.cols() != n) {
    throw std::invalid_argument("resistance matrix must be square and nonempty");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (entries_(i, i) != 0.0) {
      throw std::invalid_argument("resistance matrix must have a zero diagonal");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(entries_(i, j) - entries_(j, i)) > 1e-12 * scale) {
        throw std::invalid_argument("resistance matrix must be symmetric");
      }
      if (entries_(i, j) < 0.0 || entries_(j, i) < 0.0) {
        throw std::invalid_argument("resistances must be nonnegative");
      }
      const double avg = 0.5 * (entries_(i, j) + entries_(j, i));
      entries_(i, j) = avg;
      entries_(j, i) = avg;
    }
  }
}

Eigen::MatrixXd SpectralDecomposition::projector(int m) const {
  if (m < 0 || m >= order()) throw std::invalid_argument("eigenvector index out of range");
  const Eigen::VectorXd v = eigenvectors_.col(m);
  return v * v.transpose();
}

namespace {

// Classic union-find with path halving; small enough that rank tracking is
// not worth the bookkeeping.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool connected_impl(int n, const std::function<double(int, int)>& weight) {
  DisjointSets sets(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (weight(i, j) > kEdgeWeightFloor) sets.unite(i, j);
    }
  }
  const int root = sets.find(0);
  for (int i = 1; i < n; ++i) {
    if (sets.find(i) != root) return false;
  }
  return true;
}

void check_same_order(int na, int nb) {
  if (na != nb) throw std::invalid_argument("operands must have the same vertex count");
}

}  // namespace

bool is_connected(const WeightedAdjacency& a) {
  return connected_impl(a.order(), [&](int i, int j) { return a(i, j); });
}

bool is_connected(const BinaryAdjacency& a) {
  return connected_impl(a.order(), [&](int i, int j) { return a.edge(i, j) ? 1.0 : 0.0; });
}

long long hamming(const BinaryAdjacency& a, const BinaryAdjacency& b) {
  check_same_order(a.order(), b.order());
  long long differ = 0;
  for (int i = 0; i < a.order(); ++i) {
    for (int j = i + 1; j < a.order(); ++j) {
      if (a.edge(i, j) != b.edge(i, j)) ++differ;
    }
  }
  return differ;
}

double delta(const WeightedAdjacency& a, const WeightedAdjacency& b) {
  check_same_order(a.order(), b.order());
  const int n = a.order();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double x = a(i, j);
      const double y = b(i, j);
      if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
        throw std::invalid_argument("delta requires entries in [0, 1]");
      }
      total += x + y - 2.0 * x * y;
    }
  }
  return total;
}

SpectralDecomposition spectral_decomposition(const WeightedAdjacency& a) {
  const int n = a.order();
  Eigen::VectorXd degrees = a.matrix().rowwise().sum();
  for (int i = 0; i < n; ++i) {
    if (degrees(i) <= kEdgeWeightFloor) {
      throw std::invalid_argument("graph has a zero-degree vertex");
    }
  }
  const Eigen::VectorXd inv_sqrt_deg = degrees.array().rsqrt();
  const Eigen::MatrixXd normalized =
      inv_sqrt_deg.asDiagonal() * a.matrix() * inv_sqrt_deg.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of the normalized adjacency failed");
  }

  SpectralDecomposition out;
  // Eigen sorts ascending; flip to descending so index 0 is the Perron pair.
  out.eigenvalues_ = solver.eigenvalues().reverse();
  out.eigenvectors_ = solver.eigenvectors().rowwise().reverse();
  out.degrees_ = std::move(degrees);
  out.total_degree_ = out.degrees_.sum();

  const double zero_tol = 1e-10 * n;
  Eigen::VectorXd inv_gaps(n);
  for (int m = 0; m < n; ++m) {
    const double gap = 1.0 - out.eigenvalues_(m);
    inv_gaps(m) = gap > zero_tol ? 1.0 / gap : 0.0;
  }
  out.laplacian_pinv_ =
      out.eigenvectors_ * inv_gaps.asDiagonal() * out.eigenvectors_.transpose();
  return out;
}

ResistanceMatrix effective_resistance(const WeightedAdjacency& a) {
  if (!is_connected(a)) {
    throw std::invalid_argument("effective resistance requires a connected graph");
  }
  const SpectralDecomposition spec = spectral_decomposition(a);
  const int n = a.order();
  const Eigen::MatrixXd& pinv = spec.laplacian_pinv();
  const Eigen::VectorXd& d = spec.degrees();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // <u_i - u_j, pinv (u_i - u_j)> with u_i = e_i / sqrt(d_i).
      const double value =
          pinv(i, i) / d(i) + pinv(j, j) / d(j) - 2.0 * pinv(i, j) / std::sqrt(d(i) * d(j));
      // Guard against rounding producing a tiny negative value.
      const double clipped = std::max(value, 0.0);
      r(i, j) = clipped;
      r(j, i) = clipped;
    }
  }
  return ResistanceMatrix(std::move(r));
}

double resistance_distance_sq(const ResistanceMatrix& ra, const ResistanceMatrix& rb) {
  check_same_order(ra.order(), rb.order());
  double total = 0.0;
  for (int i = 0; i < ra.order(); ++i) {
    for (int j = i + 1; j < ra.order(); ++j) {
      const double diff = ra(i, j) - rb(i, j);
      total += diff * diff;
    }
  }
  return total;
}

double resistance_distance_sq(const WeightedAdjacency& a, const WeightedAdjacency& b) {
  check_same_order(a.order(), b.order());
  return resistance_distance_sq(effective_resistance(a), effective_resistance(b));
}

double resistance_distance(const WeightedAdjacency& a, const WeightedAdjacency& b) {
  return std::sqrt(resistance_distance_sq(a, b));
}

}  // namespace netmean
