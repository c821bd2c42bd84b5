#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resint/gb_cache.hpp"
#include "resint/report.hpp"

namespace resint {

struct VerifyOptions {
  int n = 4;
  long long prime = 32003;
  std::string reduction = "sparse";  // "sparse" | "generic"
  std::uint64_t seed = 17;
  int jmax = 3;
  std::vector<std::string> suites{"all"};
  double cellTimeoutSeconds = 600.0;
  bool heavy = false;  // gates n >= 5 runs and Hom-based duality cells
  int workers = 0;     // 0 = pick from hardware
  std::string cacheDir = GbCache::defaultDir();  // "" disables disk caching
};

// expands "all"; throws on an unknown suite name
std::vector<std::string> expandSuites(const std::vector<std::string>& suites);

// "600s", "10m", "2h", or a bare number of seconds
double parseTimeout(const std::string& text);

// builds the context and chain, runs the selected suites cell by cell over a
// bounded worker pool, and assembles the report in a fixed cell order
VerificationReport runVerification(const VerifyOptions& opt);

}  // namespace resint
