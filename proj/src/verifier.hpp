#ifndef RADONFILT_VERIFIER_HPP
#define RADONFILT_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace radon {

enum class CheckStatus { pass, fail, paper_discrepancy };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // reproduction data: parameter tuple or mismatching values
};

struct RunLimits {
  std::size_t max_level_points = kDefaultMaxLevelPoints;
};

struct RunConfig {
  std::string command = "verify";  // decompose | spherical | verify | count
  LevelRef::Family family = LevelRef::Family::subset;
  int n = 0;
  std::optional<int> s;
  long q = 0;                 // required for the subspace family
  std::string format = "json";  // json | csv
  std::string check;          // verify/count: id substring filter; spherical: "oracle"
  int jobs = 1;
  RunLimits limits;
};

struct VerificationSuiteResult {
  std::vector<CheckRecord> checks;
  int passed = 0, failed = 0, discrepancies = 0;

  bool any_fail() const { return failed > 0; }
  std::string to_json(const RunConfig& cfg) const;
  std::string to_csv() const;
};

/// Runs the selected identity/oracle checks for one (family, n[, q])
/// configuration. Deterministic: identical configs produce identical results
/// regardless of the parallelism degree.
VerificationSuiteResult run_verification(const RunConfig& cfg);

struct TaskResult {
  int exit_code = 0;  // 0 ok, 1 usage error, 2 mathematical inconsistency
  std::string output;
  std::string error;
};

/// Front end shared by the CLI and the C API: dispatches on cfg.command and
/// renders the requested format.
TaskResult run_task(const RunConfig& cfg);

}  // namespace radon

#endif
