#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace su21 {

struct RunConfig {
  double structure_tol = 1e-12;
  double quad_tol = 1e-9;
  double transfer_tol = 1e-8;
  int orbit_pairs = 1000;
  int elliptic_pairs = 20;
  int grid_n = 32;
  std::uint64_t seed = 1;
  std::string out;  // optional JSON output path

  void validate() const;  // throws std::invalid_argument
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string details;  // JSON object text
};

SuiteResult suite_structure();
SuiteResult suite_audit();
SuiteResult suite_orbit_invariance(const RunConfig& cfg);
SuiteResult suite_elliptic(const RunConfig& cfg);
SuiteResult suite_theta(const RunConfig& cfg);
SuiteResult suite_transfer(const RunConfig& cfg);
SuiteResult suite_inversion();
SuiteResult suite_trichotomy();

struct VerifyReport {
  bool all_pass = false;
  std::vector<SuiteResult> suites;
  std::string json;  // full schema-versioned report
};

VerifyReport verify_all(const RunConfig& cfg);

/// Deterministic 64-bit generator with platform-independent uniforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform(double lo, double hi);
  std::uint64_t next();

 private:
  std::uint64_t s_;
};

}  // namespace su21
