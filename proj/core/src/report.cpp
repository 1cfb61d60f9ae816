#include "hllab/report.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hllab/thresholds.hpp"
#include "json.hpp"

namespace hllab {

std::map<std::string, double> Thresholds::as_map() const {
  return {
      {"slope_pass", slope_pass},
      {"slope_fail", slope_fail},
      {"ratio_spread_max", ratio_spread_max},
      {"drift_max", drift_max},
      {"loglinear_r2_min", loglinear_r2_min},
      {"profile_factor_max", profile_factor_max},
      {"stirling_rel_tol", stirling_rel_tol},
      {"ces_spread_max", ces_spread_max},
      {"pairing_rel_tol", pairing_rel_tol},
      {"weak_type_slack", weak_type_slack},
      {"holder_slack", holder_slack},
      {"parseval_rel_tol", parseval_rel_tol},
      {"roundtrip_rel_tol", roundtrip_rel_tol},
      {"cauchy_oracle_rel_tol", cauchy_oracle_rel_tol},
      {"quadrature_tol", quadrature_tol},
      {"homogeneity_rel_tol", homogeneity_rel_tol},
      {"separation_r2_min", separation_r2_min},
  };
}

const Thresholds& thresholds() {
  static const Thresholds t;
  return t;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["degrees"] = degrees;
  nlohmann::ordered_json stats = nlohmann::ordered_json::array();
  for (const DegreeStat& s : statistics) {
    nlohmann::ordered_json row;
    row["stream"] = s.stream;
    row["degree"] = s.degree;
    row["ratio_min"] = s.ratio_min;
    row["ratio_max"] = s.ratio_max;
    row["sup_witness"] = s.sup_witness;
    stats.push_back(row);
  }
  j["statistics"] = stats;
  nlohmann::ordered_json rawrows = nlohmann::ordered_json::array();
  for (const RawRatio& r : raw) {
    nlohmann::ordered_json row;
    row["stream"] = r.stream;
    row["degree"] = r.degree;
    row["generator"] = r.generator;
    row["ratio"] = r.ratio;
    rawrows.push_back(row);
  }
  j["raw"] = rawrows;
  nlohmann::ordered_json sl = nlohmann::ordered_json::array();
  for (const StreamSlope& s : slopes) {
    nlohmann::ordered_json row;
    row["stream"] = s.stream;
    row["slope"] = s.slope;
    sl.push_back(row);
  }
  j["slopes"] = sl;
  j["slope_fit"] = slope_fit;
  j["extra"] = extra;
  j["verdict"] = to_string(verdict);
  j["thresholds_used"] = thresholds_used;
  j["config"] = config;
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "check_id,degree,generator,ratio,verdict\n";
  os.precision(17);
  std::set<std::string> streams;
  for (const RawRatio& r : raw) streams.insert(r.stream);
  for (const RawRatio& r : raw) {
    const std::string gen =
        streams.size() > 1 ? r.stream + "/" + r.generator : r.generator;
    os << check_id << ',' << r.degree << ',' << gen << ',' << r.ratio << ','
       << to_string(verdict) << '\n';
  }
  return os.str();
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  return linear_fit(x, y).slope;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need at least two points");
  const double n = double(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace hllab
