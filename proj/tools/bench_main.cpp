// Times the OpenMP kernels against their serial reference implementations
// and verifies that both produce identical output.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "netmean/frechet.hpp"
#include "netmean/metrics.hpp"
#include "netmean/sbm.hpp"

namespace {

/// Keeps the first `count` connected draws so the resistance kernels always
/// receive valid input regardless of the seed.
netmean::NetworkSample connected_sample(const netmean::SbmParams& params, int count,
                                        std::uint64_t seed) {
  const netmean::NetworkSample pool = netmean::sample_sbm(params, count * 4, seed);
  std::vector<netmean::BinaryAdjacency> keep;
  for (const auto& net : pool.networks()) {
    if (static_cast<int>(keep.size()) == count) break;
    if (netmean::is_connected(net)) keep.push_back(net);
  }
  return netmean::NetworkSample(std::move(keep), seed);
}

double time_ms(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

bool identical(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() == 0.0;
}

bool identical(const netmean::BruteForceResult& a, const netmean::BruteForceResult& b) {
  return a.value == b.value && a.candidates_total == b.candidates_total &&
         a.candidates_skipped == b.candidates_skipped && a.minimizers == b.minimizers;
}

struct Row {
  std::string kernel;
  double serial_ms;
  double parallel_ms;
  bool match;
};

void print_row(const Row& row) {
  std::cout << std::left << std::setw(28) << row.kernel << std::right << std::fixed
            << std::setprecision(1) << std::setw(12) << row.serial_ms << std::setw(12)
            << row.parallel_ms << std::setw(10) << std::setprecision(2)
            << row.serial_ms / row.parallel_ms << std::setw(8)
            << (row.match ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; parallel variants run serially\n";
#endif
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12)
            << "serial_ms" << std::setw(12) << "parallel_ms" << std::setw(10) << "speedup"
            << std::setw(8) << "match" << "\n";

  bool all_match = true;
  const std::uint64_t seed = 42;

  {
    const netmean::SbmParams params(300, 0.5, 0.1);
    netmean::NetworkSample serial = netmean::sample_sbm_serial(params, 1, seed);
    netmean::NetworkSample parallel = serial;
    const double serial_ms =
        time_ms([&] { serial = netmean::sample_sbm_serial(params, 400, seed); });
    const double parallel_ms =
        time_ms([&] { parallel = netmean::sample_sbm(params, 400, seed); });
    const bool match = serial.networks() == parallel.networks();
    all_match &= match;
    print_row({"sample_sbm (n=300, N=400)", serial_ms, parallel_ms, match});
  }

  {
    const netmean::SbmParams params(100, 0.5, 0.1);
    const netmean::NetworkSample sample = netmean::sample_sbm(params, 64, seed);
    netmean::BarycenterResult serial = netmean::resistance_barycenter_serial(
        netmean::sample_sbm(params, 1, seed), 1.0);
    netmean::BarycenterResult parallel = serial;
    const double serial_ms =
        time_ms([&] { serial = netmean::resistance_barycenter_serial(sample); });
    const double parallel_ms =
        time_ms([&] { parallel = netmean::resistance_barycenter(sample); });
    const bool match = identical(serial.reconstructed.matrix(),
                                 parallel.reconstructed.matrix()) &&
                       identical(serial.mean_resistance.matrix(),
                                 parallel.mean_resistance.matrix()) &&
                       serial.round_trip_residual == parallel.round_trip_residual;
    all_match &= match;
    print_row({"barycenter (n=100, N=64)", serial_ms, parallel_ms, match});
  }

  {
    const netmean::SbmParams params(6, 0.9, 0.1);
    const netmean::NetworkSample sample = netmean::sample_sbm(params, 201, seed);
    netmean::BruteForceResult serial;
    netmean::BruteForceResult parallel;
    const double serial_ms = time_ms([&] {
      serial = netmean::brute_force_frechet_mean_serial(sample, netmean::FrechetMetric::hamming);
    });
    const double parallel_ms = time_ms([&] {
      parallel = netmean::brute_force_frechet_mean(sample, netmean::FrechetMetric::hamming);
    });
    const bool match = identical(serial, parallel);
    all_match &= match;
    print_row({"brute hamming (n=6, N=201)", serial_ms, parallel_ms, match});
  }

  {
    const netmean::SbmParams params(6, 0.9, 0.3);
    const netmean::NetworkSample sample = connected_sample(params, 20, seed);
    netmean::BruteForceResult serial;
    netmean::BruteForceResult parallel;
    const double serial_ms = time_ms([&] {
      serial = netmean::brute_force_frechet_mean_serial(sample,
                                                        netmean::FrechetMetric::resistance_sq);
    });
    const double parallel_ms = time_ms([&] {
      parallel =
          netmean::brute_force_frechet_mean(sample, netmean::FrechetMetric::resistance_sq);
    });
    const bool match = identical(serial, parallel);
    all_match &= match;
    print_row({"brute resistance (n=6, N=20)", serial_ms, parallel_ms, match});
  }

  if (!all_match) {
    std::cerr << "serial and parallel kernels disagree\n";
    return 1;
  }
  return 0;
}
