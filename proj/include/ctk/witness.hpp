#pragma once

// Catalog of explicit matrix computations embedded bit-exactly and replayed
// as machine-checked claims.

#include <string>
#include <vector>

#include "ctk/grp.hpp"

namespace ctk::witness {

struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownWitness : WitnessError {
  using WitnessError::WitnessError;
};
struct ClaimFailed : WitnessError {
  using WitnessError::WitnessError;
};

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;  // computed values, counts, context
};

struct WitnessReport {
  std::string id;
  std::string group;                      // human-readable ambient group(s)
  std::vector<ClaimResult> claims;
  std::vector<std::string> assumptions;   // recorded but not machine-verified
  bool pass = true;                       // all claims pass
};

// catalog ids in report order
std::vector<std::string> catalog_ids();

// tags a witness carries: "fast", "slow", or "fast+slow"
std::string witness_tag(const std::string& id);

// Evaluate the claims of one witness.  filter selects which claim tags run
// ("fast", "slow", or "all").  With strict=true the first failing claim
// aborts by throwing ClaimFailed naming that claim.
WitnessReport run_witness(const std::string& id, const std::string& filter = "fast",
                          bool strict = false);

struct SuiteReport {
  std::vector<WitnessReport> reports;
  bool pass = true;
};

// filter: "fast" (all witnesses, fast claims), "slow" (slow claims only,
// witnesses without slow claims are skipped), "all", or "none" (empty report)
SuiteReport run_all(const std::string& filter = "fast");

}  // namespace ctk::witness
