#include "netmean/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace netmean {

namespace {

std::ostringstream make_formatter() {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(12);
  return out;
}

int read_order(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) {
    throw std::runtime_error("matrix file must start with a positive vertex count");
  }
  return n;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("failed to open " + path.string() + " for writing");
  out.imbue(std::locale::classic());
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("failed to open " + path.string() + " for reading");
  in.imbue(std::locale::classic());
  return in;
}

std::string network_file_name(int k) {
  std::ostringstream name;
  name << "network_" << std::setfill('0') << std::setw(4) << k << ".txt";
  return name.str();
}

}  // namespace

std::string format_double(double x) {
  std::ostringstream out = make_formatter();
  out << x;
  return out.str();
}

void write_matrix(std::ostream& out, const BinaryAdjacency& a) {
  const int n = a.order();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out << (j ? " " : "") << (i != j && a.edge(i, j) ? 1 : 0);
    }
    out << '\n';
  }
}

namespace {

void write_dense(std::ostream& out, const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  out << n << '\n';
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out << (j ? " " : "") << format_double(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace

void write_matrix(std::ostream& out, const WeightedAdjacency& a) { write_dense(out, a.matrix()); }

void write_matrix(std::ostream& out, const ResistanceMatrix& r) { write_dense(out, r.matrix()); }

BinaryAdjacency read_binary_matrix(std::istream& in) {
  const int n = read_order(in);
  BinaryAdjacency a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int value = 0;
      if (!(in >> value)) throw std::runtime_error("matrix file is truncated");
      if (value != 0 && value != 1) {
        throw std::runtime_error("binary matrix entries must be 0 or 1");
      }
      if (j > i) a.set_edge(i, j, value == 1);
      if (j < i && (a.edge(i, j) ? 1 : 0) != value) {
        throw std::runtime_error("binary matrix file is not symmetric");
      }
      if (j == i && value != 0) {
        throw std::runtime_error("binary matrix file has a nonzero diagonal");
      }
    }
  }
  return a;
}

WeightedAdjacency read_weighted_matrix(std::istream& in) {
  const int n = read_order(in);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> m(i, j))) throw std::runtime_error("matrix file is truncated");
    }
  }
  return WeightedAdjacency(std::move(m));
}

void save_binary_matrix(const std::filesystem::path& path, const BinaryAdjacency& a) {
  auto out = open_for_write(path);
  write_matrix(out, a);
}

void save_weighted_matrix(const std::filesystem::path& path, const WeightedAdjacency& a) {
  auto out = open_for_write(path);
  write_matrix(out, a);
}

void save_resistance_matrix(const std::filesystem::path& path, const ResistanceMatrix& r) {
  auto out = open_for_write(path);
  write_matrix(out, r);
}

BinaryAdjacency load_binary_matrix(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_binary_matrix(in);
}

WeightedAdjacency load_weighted_matrix(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_weighted_matrix(in);
}

void save_sample(const std::filesystem::path& dir, const NetworkSample& sample,
                 const SbmParams& params) {
  std::filesystem::create_directories(dir);
  for (int k = 0; k < sample.count(); ++k) {
    save_binary_matrix(dir / network_file_name(k), sample.network(k));
  }
  nlohmann::json manifest;
  manifest["n"] = params.n;
  manifest["p"] = params.p;
  manifest["q"] = params.q;
  manifest["N"] = sample.count();
  manifest["seed"] = sample.seed();
  auto out = open_for_write(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

NetworkSample load_sample(const std::filesystem::path& dir) {
  auto in = open_for_read(dir / "manifest.json");
  nlohmann::json manifest = nlohmann::json::parse(in);
  const int count = manifest.at("N").get<int>();
  const auto seed = manifest.at("seed").get<std::uint64_t>();
  if (count < 1) throw std::runtime_error("manifest reports an empty sample");
  std::vector<BinaryAdjacency> nets;
  nets.reserve(count);
  for (int k = 0; k < count; ++k) {
    nets.push_back(load_binary_matrix(dir / network_file_name(k)));
  }
  return NetworkSample(std::move(nets), seed);
}

void save_barycenter(const std::filesystem::path& dir, const std::string& stem,
                     const BarycenterResult& result) {
  std::filesystem::create_directories(dir);
  save_weighted_matrix(dir / (stem + ".txt"), result.reconstructed);
  nlohmann::json sidecar;
  sidecar["alpha"] = result.alpha;
  sidecar["round_trip_residual"] = result.round_trip_residual;
  sidecar["min_entry"] = result.min_entry();
  sidecar["max_entry"] = result.max_entry();
  auto out = open_for_write(dir / (stem + ".json"));
  out << sidecar.dump(2) << '\n';
}

}  // namespace netmean
