#pragma once

#include <vector>

#include "hllab/series.hpp"

namespace hllab {

/// |f| data on a circle: values[j] = f(r e^{2 pi i j / M}).
struct CircleSamples {
  double radius = 1.0;
  std::vector<cplx> values;

  std::size_t count() const { return values.size(); }
};

namespace detail {
/// In-place radix-2 transform, sign = +1 evaluates sum a_n e^{+2pi i nj/M}.
/// Length must be a power of two.
void fft_pow2(std::vector<cplx>& v, int sign);
}  // namespace detail

/// Samples f(r e^{i theta}) at M equispaced angles by FFT of the r-scaled,
/// zero-padded coefficients. M must be a power of two with M >= deg f + 1;
/// smaller M would alias.
CircleSamples evaluate_circle(const CoefficientSeries& f, double r, std::size_t M);

/// Inverse of evaluate_circle at the same M: recovers the zero-padded,
/// r-scaled coefficient list. Used by round-trip tests.
std::vector<cplx> circle_to_coeffs(const CircleSamples& samples);

/// Default sampling resolution for a given polynomial degree: a power of
/// two at least 4x the coefficient count, floored at 256.
std::size_t auto_samples(std::size_t degree);

}  // namespace hllab
