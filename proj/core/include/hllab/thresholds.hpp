#pragma once

#include <map>
#include <string>

namespace hllab {

/// Frozen verdict thresholds. Calibrated once against known-true and
/// known-false statements, then fixed; config/thresholds.conf in the repo
/// mirrors these values and a test asserts the two never drift apart.
struct Thresholds {
  // a claimed embedding/boundedness holds when the cumulative sup-ratio
  // slope over log degree stays inside this band
  double slope_pass = 0.05;
  // a fail-by-construction control must move at least this fast
  double slope_fail = 0.10;
  // two-sided equivalence: max/min ratio across all members and degrees
  double ratio_spread_max = 20.0;
  // interval endpoints may move at most this fraction when the degree doubles
  double drift_max = 0.25;
  // log-linear growth fits (norm^q against log degree)
  double loglinear_r2_min = 0.95;
  // rearrangement profile of the Cauchy witness: max/min of f*(t) t^{1/p}
  double profile_factor_max = 4.0;
  // coefficient asymptotics agreement at the largest index
  double stirling_rel_tol = 0.02;
  // ces(s) against its blocked-space form
  double ces_spread_max = 10.0;
  // exact-identity slack
  double pairing_rel_tol = 1e-9;
  double weak_type_slack = 1e-12;
  double holder_slack = 1e-12;
  double parseval_rel_tol = 1e-10;
  double roundtrip_rel_tol = 1e-12;
  double cauchy_oracle_rel_tol = 1e-10;
  double quadrature_tol = 1e-4;
  double homogeneity_rel_tol = 1e-13;
  // lacunary divergence demo: Bloch flat, oscillation^2 log-linear
  double separation_r2_min = 0.90;

  std::map<std::string, double> as_map() const;
};

const Thresholds& thresholds();

}  // namespace hllab
