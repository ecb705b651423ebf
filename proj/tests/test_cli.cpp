#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

const char* cli_path() {
  const char* path = std::getenv("NETMEAN_CLI");
  REQUIRE_MESSAGE(path != nullptr, "NETMEAN_CLI must point at the built binary");
  return path;
}

CommandResult run_cli(const std::string& args) {
  const std::string cmd = "'" + std::string(cli_path()) + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("version and help") {
  const CommandResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.output.find("1.0.0") != std::string::npos);

  const CommandResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("sample") != std::string::npos);
  CHECK(help.output.find("barycenter") != std::string::npos);
  CHECK(help.output.find("experiment") != std::string::npos);
}

TEST_CASE("bad invocations exit nonzero") {
  CHECK(run_cli("").exit_code != 0);                       // missing subcommand
  CHECK(run_cli("sample --n").exit_code != 0);             // missing value
  CHECK(run_cli("frobnicate").exit_code != 0);             // unknown subcommand
  const CommandResult odd = run_cli("sample --n 7");       // domain error
  CHECK(odd.exit_code == 1);
  CHECK(odd.output.find("error:") != std::string::npos);
  const CommandResult unknown = run_cli("experiment theorem9");
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.output.find("error:") != std::string::npos);
}

TEST_CASE("sample, median, distance, and barycenter pipeline") {
  const fs::path dir = fresh_dir("netmean_test_cli_pipeline");
  const std::string sample_dir = (dir / "s1").string();

  const CommandResult sample =
      run_cli("sample --n 10 --p 0.9 --q 0.5 --count 5 --seed 3 --out '" + sample_dir + "'");
  CHECK(sample.exit_code == 0);
  CHECK(fs::exists(fs::path(sample_dir) / "manifest.json"));
  for (int k = 0; k < 5; ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "network_%04d.txt", k);
    CHECK(fs::exists(fs::path(sample_dir) / name));
  }

  const std::string out_dir = (dir / "derived").string();
  const CommandResult median = run_cli("median '" + sample_dir + "' --out '" + out_dir + "'");
  CHECK(median.exit_code == 0);
  CHECK(fs::exists(fs::path(out_dir) / "median.txt"));
  CHECK(median.output.find("mean Hamming distance") != std::string::npos);

  const std::string a = (fs::path(sample_dir) / "network_0000.txt").string();
  const std::string b = (fs::path(sample_dir) / "network_0001.txt").string();
  const CommandResult self_distance = run_cli("distance '" + a + "' '" + a + "'");
  CHECK(self_distance.exit_code == 0);
  CHECK(std::stod(self_distance.output) == 0.0);
  const CommandResult cross = run_cli("distance --metric hamming '" + a + "' '" + b + "'");
  CHECK(cross.exit_code == 0);
  CHECK(std::stod(cross.output) >= 0.0);
  const CommandResult res =
      run_cli("distance --metric resistance '" + a + "' '" + b + "'");
  CHECK(res.exit_code == 0);
  CHECK(std::stod(res.output) >= 0.0);

  const CommandResult barycenter =
      run_cli("barycenter '" + sample_dir + "' --alpha 2 --out '" + out_dir + "'");
  CHECK(barycenter.exit_code == 0);
  CHECK(fs::exists(fs::path(out_dir) / "barycenter.txt"));
  CHECK(fs::exists(fs::path(out_dir) / "barycenter.json"));
  CHECK(barycenter.output.find("round-trip residual") != std::string::npos);

  fs::remove_all(dir);
}

TEST_CASE("experiment subcommand with a config file") {
  const fs::path dir = fresh_dir("netmean_test_cli_experiment");
  const fs::path reports = dir / "reports";
  const fs::path config_path = dir / "config.json";
  {
    std::ofstream config(config_path);
    config << "{\n"
           << "  \"experiment\": \"round-trip\",\n"
           << "  \"params\": {\"n\": 12, \"p\": 0.8, \"q\": 0.4},\n"
           << "  \"trials\": 3,\n"
           << "  \"seed\": 99,\n"
           << "  \"output_dir\": \"" << reports.generic_string() << "\"\n"
           << "}\n";
  }

  const CommandResult first = run_cli("experiment --config '" + config_path.string() + "'");
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("experiment round-trip: PASS") != std::string::npos);
  CHECK(first.output.find("check max_residual:") != std::string::npos);
  const fs::path csv_path = reports / "round-trip.csv";
  const fs::path summary_path = reports / "round-trip_summary.json";
  REQUIRE(fs::exists(csv_path));
  REQUIRE(fs::exists(summary_path));
  const std::string first_csv = slurp(csv_path);

  // Reruns reproduce the data file byte for byte (no wall-clock column here).
  const CommandResult second = run_cli("experiment --config '" + config_path.string() + "'");
  CHECK(second.exit_code == 0);
  CHECK(slurp(csv_path) == first_csv);

  // JSON format emits one document; name and config stay the same.
  const CommandResult as_json = run_cli("experiment round-trip --format json --seed 99 --out '" +
                                        reports.string() + "' --config '" +
                                        config_path.string() + "'");
  CHECK(as_json.exit_code == 0);
  CHECK(fs::exists(reports / "round-trip.json"));

  // A config naming one experiment cannot be run under another name.
  const CommandResult mismatch = run_cli("experiment theorem1 --config '" +
                                         config_path.string() + "'");
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.output.find("error:") != std::string::npos);

  fs::remove_all(dir);
}
