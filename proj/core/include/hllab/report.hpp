#pragma once

#include <map>
#include <string>
#include <vector>

#include "hllab/common.hpp"

namespace hllab {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// One ratio stream at one degree: the min/max over family members and the
/// member attaining the max.
struct DegreeStat {
  std::string stream;
  std::size_t degree = 0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  std::string sup_witness;
};

/// Per-stream slope of log(sup ratio) against log(degree).
struct StreamSlope {
  std::string stream;
  double slope = 0.0;
};

/// One raw observation: the ratio of one family member at one degree.
/// Backs the CSV rendering and lets readers recompute the statistics.
struct RawRatio {
  std::string stream;
  std::size_t degree = 0;
  std::string generator;
  double ratio = 0.0;
};

/// Deterministic record of one verification check. verdict is a pure function of
/// statistics and thresholds_used, so a reader can re-derive it.
struct VerificationReport {
  std::string check_id;
  std::map<std::string, double> params;
  std::vector<std::size_t> degrees;
  std::vector<DegreeStat> statistics;
  std::vector<RawRatio> raw;
  std::vector<StreamSlope> slopes;
  double slope_fit = 0.0;  // worst-magnitude stream slope
  std::map<std::string, double> extra;  // named scalars (fits, spreads, ...)
  Verdict verdict = Verdict::inconclusive;
  std::map<std::string, double> thresholds_used;
  std::map<std::string, std::string> config;  // effective run configuration

  std::string to_json() const;
  std::string to_csv() const;
};

/// Least-squares slope of y against x; requires >= 2 points.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Linear fit y ~ a*x + b; returns {a, b, r2}.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hllab
