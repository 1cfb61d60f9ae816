#include "hllab/gamma_ratio.hpp"

#include <cmath>
#include <stdexcept>

namespace hllab {
namespace {

// Stirling correction phi(z) = lgamma(z) - [(z-1/2)ln z - z + ln(2*pi)/2].
// Truncation below 1e-16 for z >= 10.
double stirling_phi(double z) {
  const double z2 = z * z;
  double inv = 1.0 / z;
  double s = inv / 12.0;
  inv /= z2;
  s -= inv / 360.0;
  inv /= z2;
  s += inv / 1260.0;
  inv /= z2;
  s -= inv / 1680.0;
  inv /= z2;
  s += inv / 1188.0;
  return s;
}

constexpr double kLargeZ = 10.0;

}  // namespace

double lgamma_diff(double x, double a) {
  if (!(x > 0.0) || !(x + a > 0.0))
    throw std::invalid_argument("lgamma_diff: requires x > 0 and x + a > 0");
  if (a == 0.0) return 0.0;

  // Raise whichever endpoint is small with lgamma(z) = lgamma(z+1) - log(z)
  // until both sit in the Stirling regime, then difference the series.
  double corr = 0.0;
  double lo = std::min(x, x + a);
  double shift = 0.0;
  while (lo + shift < kLargeZ) {
    // lgamma_diff accumulates log((x+shift)...) terms symmetrically below.
    shift += 1.0;
  }
  if (shift > 0.0) {
    // lgamma(x+a) - lgamma(x)
    //   = [lgamma(x+a+shift) - lgamma(x+shift)] - sum log((x+a+k)/(x+k))
    for (double k = 0.0; k < shift; k += 1.0)
      corr += std::log1p(a / (x + k));
    x += shift;
  }
  const double y = x + a;
  const double main = (x - 0.5) * std::log1p(a / x) + a * (std::log(y) - 1.0);
  return main + stirling_phi(y) - stirling_phi(x) - corr;
}

double gamma_ratio(double x, double a) { return std::exp(lgamma_diff(x, a)); }

}  // namespace hllab
