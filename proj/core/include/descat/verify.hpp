#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descat/catenoid.hpp"

namespace descat {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  long samples = 0;
  std::string note;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int membership_samples = 1000;
  int cmc_samples = 200;
  int locus_grid = 200;  // per axis
  int symmetry_samples = 1000;
  bool quick = false;  // shrink sample counts for interactive runs
};

struct VerifyReport {
  SurfaceSpec spec{};
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Property suite for one surface: quadric membership, frame consistency,
// mean curvature one, singular locus against the metric degeneracy, cone
// points, and the symmetry identities. AdS runs the subset that applies.
VerifyReport run_verify(const SurfaceSpec& spec, const VerifyOptions& options);

std::string report_to_json(const VerifyReport& report);

}  // namespace descat
