#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hllab/circle.hpp"

namespace hllab {

namespace detail {

void fft_pow2(std::vector<cplx>& v, int sign) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_pow2: length must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / double(len);
    const cplx wlen{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = v[i + k];
        const cplx t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
}

}  // namespace detail

CircleSamples evaluate_circle(const CoefficientSeries& f, double r, std::size_t M) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::invalid_argument("evaluate_circle: radius must lie in [0,1]");
  if ((M & (M - 1)) != 0 || M == 0)
    throw resolution_error("evaluate_circle: M must be a power of two");
  if (M < f.size())
    throw resolution_error("evaluate_circle: M < deg f + 1 aliases the samples");
  std::vector<cplx> buf(M, cplx{});
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double rn = (n == 0) ? 1.0 : std::pow(r, double(n));
    buf[n] = f.coeffs()[n] * rn;
  }
  detail::fft_pow2(buf, +1);
  CircleSamples out;
  out.radius = r;
  out.values = std::move(buf);
  return out;
}

std::vector<cplx> circle_to_coeffs(const CircleSamples& samples) {
  std::vector<cplx> buf = samples.values;
  detail::fft_pow2(buf, -1);
  const double inv = 1.0 / double(buf.size());
  for (cplx& c : buf) c *= inv;
  return buf;
}

std::size_t auto_samples(std::size_t degree) {
  const std::size_t want = 4 * (degree + 1);
  return std::max<std::size_t>(256, next_pow2(want));
}

}  // namespace hllab
