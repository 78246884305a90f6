#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hgc {

struct PropertyResult {
  std::string name;
  int ran = 0;      // trials where the property was applicable
  int failed = 0;
  std::string first_failure;
};

struct AxiomsRun {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyResult> properties;

  bool ok() const;
  // Deterministic text form, one line per property.
  std::string transcript() const;
};

// Runs every structural and analytic law on `trials` seeded random instances:
// category laws, module/linking/adjoint identities, norm inequalities,
// positivity, tensor laws, and validator round-trips.  Identical (seed,
// trials) give identical transcripts.
AxiomsRun run_axioms(std::uint64_t seed, int trials);

}  // namespace hgc
