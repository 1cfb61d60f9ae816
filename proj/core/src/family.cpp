#include "hllab/family.hpp"

#include <cmath>
#include <stdexcept>

namespace hllab {

CoefficientSeries taper_linear(const CoefficientSeries& f) {
  const std::size_t N = f.degree();
  if (N == 0) return f;
  std::vector<cplx> c = f.coeffs();
  const std::size_t half = N / 2;
  for (std::size_t n = half + 1; n <= N; ++n)
    c[n] *= double(N - n) / double(N - half);
  return CoefficientSeries(std::move(c));
}

CoefficientSeries taper_smooth(const CoefficientSeries& f) {
  const std::size_t N = f.degree();
  if (N == 0) return f;
  std::vector<cplx> c = f.coeffs();
  for (std::size_t n = 1; n <= N; ++n) {
    const double u = 2.0 * double(n) / double(N);
    c[n] *= std::exp(-std::pow(u, 8.0));
  }
  return CoefficientSeries(std::move(c));
}

CoefficientSeries binomial_series(double gamma, std::size_t N) {
  std::vector<cplx> c(N + 1);
  c[0] = 1.0;
  double b = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    b *= (double(n) - 1.0 + gamma) / double(n);
    c[n] = b;
  }
  return CoefficientSeries(std::move(c));
}

CoefficientSeries lacunary_series(std::size_t N) {
  std::vector<cplx> c(N + 1, cplx{});
  for (std::size_t k = 1; k <= N; k *= 2) c[k] = 1.0;
  if (N == 0) c[0] = 0.0;
  return CoefficientSeries(std::move(c));
}

CoefficientSeries random_polynomial(std::size_t degree, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<cplx> c(degree + 1);
  for (cplx& v : c) v = rng.next_cplx();
  return CoefficientSeries(std::move(c));
}

CoefficientSeries Generator::make(std::size_t degree, std::uint64_t family_seed) const {
  switch (kind) {
    case GeneratorKind::monomial:
      return monomial(degree);
    case GeneratorKind::random_poly:
      return random_polynomial(degree, mix_seed(family_seed, salt, degree));
    case GeneratorKind::cauchy_tapered:
      return taper_linear(cauchy_power(gamma, degree));
    case GeneratorKind::cauchy_mollified:
      return taper_smooth(cauchy_power(gamma, degree));
    case GeneratorKind::cauchy_dilated: {
      const double r = 1.0 - dilation / double(std::max<std::size_t>(degree, 8));
      return dilate(cauchy_power(gamma, degree), cplx{r, 0.0});
    }
    case GeneratorKind::lacunary:
      return lacunary_series(degree);
    case GeneratorKind::smooth_binomial:
      return taper_linear(binomial_series(-gamma, degree));
    case GeneratorKind::random_decay: {
      CoefficientSeries f = random_polynomial(degree, mix_seed(family_seed, salt, degree));
      std::vector<cplx> c = f.coeffs();
      for (std::size_t n = 0; n < c.size(); ++n)
        c[n] *= std::pow(double(n) + 1.0, -decay);
      return CoefficientSeries(std::move(c));
    }
  }
  throw std::logic_error("Generator::make: unknown kind");
}

}  // namespace hllab
