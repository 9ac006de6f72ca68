#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mayerkit::verify {

struct Options {
  std::string suite = "all";
  int nmax = 6;              // exhaustive graph order for the Penrose suite
  std::uint64_t seed = 1;    // random samples (n = 7 graphs, activity profiles, MC)
  int workers = 0;
  bool quick = false;        // smaller sample counts
};

struct CheckInfo {
  std::string suite;
  std::string name;
  std::string statement;
};

struct CheckResult {
  CheckInfo info;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Suites: graphs, penrose, potentials, cluster, series, radii, polymer, canonical, cli.
std::vector<std::string> suites();
std::vector<CheckInfo> manifest(const std::string& suite = "all");
// Throws InputError for an unknown suite.
std::vector<CheckResult> run(const Options& opt);

}  // namespace mayerkit::verify
