#pragma once

namespace hllab {

/// log(Gamma(x+a)) - log(Gamma(x)) for x > 0, x+a > 0, computed without the
/// cancellation of two large lgamma values. For large x the Stirling series
/// is differenced analytically, so the absolute error stays at a few ulp of
/// the (small) result rather than of lgamma itself.
double lgamma_diff(double x, double a);

/// Gamma(x+a)/Gamma(x) via exp(lgamma_diff).
double gamma_ratio(double x, double a);

}  // namespace hllab
