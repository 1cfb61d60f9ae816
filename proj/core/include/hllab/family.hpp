#pragma once

#include <string>
#include <vector>

#include "hllab/series.hpp"

namespace hllab {

/// Probe-family generators. Each generator yields one polynomial per degree;
/// a (tag, degree) pair plus the family seed determines it bit-for-bit.
///
/// The Cauchy-type members carry a spectral cutoff: raw partial sums of
/// (1-z)^{-gamma} pick up a Dirichlet-kernel tail whose boundary modulus
/// ~ N^{gamma-1}/theta swamps the profile for p < 1. "tapered" applies a
/// linear half-band taper (keeps the boundary profile t^{-gamma} with tight
/// constants); "mollified" applies exp(-(2n/N)^8), whose fast kernel decay
/// survives high-order fractional derivatives.
enum class GeneratorKind {
  monomial,         // z^N
  random_poly,      // independent coefficients in the unit square
  cauchy_tapered,   // (1-z)^{-gamma}, linear taper on [N/2, N]
  cauchy_mollified, // (1-z)^{-gamma}, smooth cutoff exp(-(2n/N)^8)
  cauchy_dilated,   // (1-z)^{-gamma} dilated by r = 1 - dilation/N
  lacunary,         // sum of z^{2^k}, 2^k <= N
  smooth_binomial,  // (1-z)^{+gamma}, linear taper; bounded, Lipschitz-type
  random_decay,     // random coefficients damped by (n+1)^{-decay}
};

struct Generator {
  GeneratorKind kind = GeneratorKind::random_poly;
  double gamma = 1.0;     // exponent for the Cauchy/binomial kinds
  double decay = 1.0;     // damping exponent for random_decay
  double dilation = 4.0;  // plateau constant for cauchy_dilated
  std::uint64_t salt = 0; // distinguishes same-kind members
  std::string tag;        // stable report label

  CoefficientSeries make(std::size_t degree, std::uint64_t family_seed) const;
};

struct TestFamily {
  std::vector<Generator> generators;
  std::vector<std::size_t> degrees;
  std::uint64_t seed = 0;
};

/// Linear half-band taper applied to an existing coefficient list.
CoefficientSeries taper_linear(const CoefficientSeries& f);

/// Smooth spectral cutoff exp(-(2n/N)^8).
CoefficientSeries taper_smooth(const CoefficientSeries& f);

/// Coefficients of (1-z)^{-gamma} by the binomial recurrence
/// b_0 = 1, b_n = b_{n-1} (n-1+gamma)/n. Valid for any real gamma; the
/// independent cross-check for cauchy_power.
CoefficientSeries binomial_series(double gamma, std::size_t N);

/// sum z^{2^k} over 2^k <= N (includes z^1).
CoefficientSeries lacunary_series(std::size_t N);

/// Random polynomial with coefficients in [-1,1) x [-1,1)i.
CoefficientSeries random_polynomial(std::size_t degree, std::uint64_t seed);

}  // namespace hllab
