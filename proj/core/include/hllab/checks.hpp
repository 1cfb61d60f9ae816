#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hllab/multiplier.hpp"
#include "hllab/report.hpp"
#include "hllab/runconfig.hpp"
#include "hllab/thresholds.hpp"

namespace hllab {

/// A registered numerical experiment. Each check encodes one claim as
/// threshold-checked ratio statistics over a deterministic probe family.
///
/// Ratio statistics come in two flavors:
///  - main claims track the cumulative sup over degrees <= N (a monotone
///    estimate of the underlying operator/embedding constant), and pass
///    when its log-log slope stays inside the pass band;
///  - fail-by-construction controls track the raw per-degree sup and must
///    move faster than the fail threshold, demonstrating the statistic
///    has power to reject.
struct CheckContext {
  RunConfig cfg;
  std::map<std::string, double> params;  // effective numeric parameters
  std::string control;                   // empty = main claim
};

struct CheckDef {
  std::string id;
  std::map<std::string, double> default_params;
  std::vector<std::string> controls;
  std::vector<std::size_t> default_degrees;  // empty = use RunConfig degrees
  std::function<VerificationReport(const CheckContext&)> run;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& id);

/// Run a registered check with parameter overrides merged over defaults.
VerificationReport run_check(const CheckDef& def, const RunConfig& cfg,
                             const std::map<std::string, double>& overrides,
                             const std::string& control);

/// Full battery: every registered check plus every control. A run counts as
/// expected when each main claim passes and each control fails.
struct SuiteOutcome {
  std::map<std::string, std::string> verdicts;  // id (or id.control_x) -> verdict
  bool all_as_expected = true;
  bool any_inconclusive = false;
};

/// Runs the battery; writes one JSON report per entry into out_dir when it
/// is nonempty.
SuiteOutcome run_suite(const RunConfig& cfg, const std::string& out_dir);

std::string suite_summary_json(const RunConfig& cfg, const SuiteOutcome& outcome);

/// Individual checks (exposed for tests).
VerificationReport check_nested_embedding(const CheckContext& ctx);
VerificationReport check_hl_coefficient_inequality(const CheckContext& ctx);
VerificationReport check_sharpness_cauchy(const CheckContext& ctx);
VerificationReport check_blocked_parseval(const CheckContext& ctx);
VerificationReport check_seq_multiplier(const CheckContext& ctx);
VerificationReport check_mixed_multiplier(const CheckContext& ctx);
VerificationReport check_hardy_multiplier(const CheckContext& ctx);
VerificationReport check_duality_pairing(const CheckContext& ctx);
VerificationReport check_lipschitz_identifications(const CheckContext& ctx);

}  // namespace hllab
