#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "netmean/frechet.hpp"
#include "netmean/sbm.hpp"

namespace netmean {

/// Locale-independent decimal formatting with 12 significant digits and '.'
/// as the separator; shared by matrix files and CSV reports.
std::string format_double(double x);

/// Matrix text format (shared repo-wide): first line the vertex count n,
/// then n lines of n space-separated entries. Binary adjacencies use
/// integers 0/1; weighted matrices use format_double.
void write_matrix(std::ostream& out, const BinaryAdjacency& a);
void write_matrix(std::ostream& out, const WeightedAdjacency& a);
void write_matrix(std::ostream& out, const ResistanceMatrix& r);

BinaryAdjacency read_binary_matrix(std::istream& in);
WeightedAdjacency read_weighted_matrix(std::istream& in);

void save_binary_matrix(const std::filesystem::path& path, const BinaryAdjacency& a);
void save_weighted_matrix(const std::filesystem::path& path, const WeightedAdjacency& a);
void save_resistance_matrix(const std::filesystem::path& path, const ResistanceMatrix& r);
BinaryAdjacency load_binary_matrix(const std::filesystem::path& path);
WeightedAdjacency load_weighted_matrix(const std::filesystem::path& path);

/// Sample directory layout: network_0000.txt .. network_<N-1>.txt plus
/// manifest.json recording {n, p, q, N, seed}.
void save_sample(const std::filesystem::path& dir, const NetworkSample& sample,
                 const SbmParams& params);
NetworkSample load_sample(const std::filesystem::path& dir);

/// Writes <stem>.txt (reconstructed matrix) and <stem>.json (sidecar with
/// alpha, round_trip_residual, min_entry, max_entry).
void save_barycenter(const std::filesystem::path& dir, const std::string& stem,
                     const BarycenterResult& result);

}  // namespace netmean
