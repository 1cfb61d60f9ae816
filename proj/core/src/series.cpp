#include "hllab/series.hpp"

#include <cmath>
#include <stdexcept>

#include "hllab/fracops.hpp"
#include "hllab/gamma_ratio.hpp"

namespace hllab {

CoefficientSeries::CoefficientSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, cplx{});
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("CoefficientSeries: non-finite coefficient");
  }
}

CoefficientSeries monomial(std::size_t n) {
  std::vector<cplx> c(n + 1, cplx{});
  c[n] = 1.0;
  return CoefficientSeries(std::move(c));
}

CoefficientSeries cauchy_kernel(std::size_t N) {
  return CoefficientSeries(std::vector<cplx>(N + 1, cplx{1.0, 0.0}));
}

CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g) {
  const std::size_t n = std::min(f.size(), g.size());
  std::vector<cplx> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = f.coeffs()[i] * g.coeffs()[i];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries dilate(const CoefficientSeries& f, cplx w) {
  if (std::abs(w) > 1.0)
    throw std::invalid_argument("dilate: |w| > 1 leaves the closed disk");
  std::vector<cplx> c(f.size());
  if (w.imag() == 0.0) {
    const double r = w.real();
    for (std::size_t n = 0; n < f.size(); ++n) {
      const double rn = (n == 0) ? 1.0 : std::pow(r, double(n));
      c[n] = f.coeffs()[n] * rn;
    }
  } else {
    const double mag = std::abs(w);
    const double arg = std::arg(w);
    for (std::size_t n = 0; n < f.size(); ++n) {
      const double rn = (n == 0) ? 1.0 : std::pow(mag, double(n));
      const double th = arg * double(n);
      c[n] = f.coeffs()[n] * cplx{rn * std::cos(th), rn * std::sin(th)};
    }
  }
  return CoefficientSeries(std::move(c));
}

CoefficientSeries partial_sum(const CoefficientSeries& f, std::size_t N) {
  std::vector<cplx> c(N + 1, cplx{});
  const std::size_t n = std::min(N + 1, f.size());
  for (std::size_t i = 0; i < n; ++i) c[i] = f.coeffs()[i];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries cauchy_power(double gamma, std::size_t N) {
  if (!(gamma > 0.0)) throw std::invalid_argument("cauchy_power: gamma must be positive");
  const double lg = std::lgamma(gamma);
  std::vector<cplx> c(N + 1);
  c[0] = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    // Gamma(n+gamma)/(Gamma(gamma) n!) = exp(lgamma_diff(n+1, gamma-1) - lgamma(gamma))
    const double ld = lgamma_diff(double(n) + 1.0, gamma - 1.0);
    c[n] = std::exp(ld - lg);
  }
  return CoefficientSeries(std::move(c));
}

cplx evaluate_at(const CoefficientSeries& f, cplx w) {
  cplx acc{};
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * w + f.coeffs()[i];
  return acc;
}

AbelSum abel_sum(const CoefficientSeries& seq, const std::vector<double>& r_schedule,
                 double tol) {
  if (r_schedule.empty()) throw std::invalid_argument("abel_sum: empty radius schedule");
  for (std::size_t i = 0; i < r_schedule.size(); ++i) {
    const double r = r_schedule[i];
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("abel_sum: radii must lie in (0,1)");
    if (i > 0 && !(r > r_schedule[i - 1]))
      throw std::invalid_argument("abel_sum: radius schedule must increase");
  }
  AbelSum out;
  cplx prev{};
  for (std::size_t i = 0; i < r_schedule.size(); ++i) {
    const cplx cur = evaluate_at(seq, cplx{r_schedule[i], 0.0});
    if (i + 1 == r_schedule.size() && r_schedule.size() >= 2)
      out.converged = std::abs(cur - prev) < tol;
    prev = cur;
    out.estimate = cur;
  }
  return out;
}

CoefficientSeries frac_apply(const CoefficientSeries& f, FracOrder order,
                             FracDirection direction) {
  double beta = order.beta;
  if (!std::isfinite(beta)) throw std::invalid_argument("frac_apply: beta must be finite");
  if (beta == 0.0) return f;
  FracDirection dir = direction;
  if (beta < 0.0) {  // f^{[beta]} = f_{[-beta]} and vice versa
    beta = -beta;
    dir = (dir == FracDirection::derivative) ? FracDirection::integral
                                             : FracDirection::derivative;
  }
  std::vector<cplx> c(f.size());
  if (order.flavor == FracFlavor::gamma) {
    for (std::size_t n = 0; n < f.size(); ++n) {
      const double pole = double(n) + beta + 1.0;
      if (pole <= 0.0 && pole == std::floor(pole))
        throw std::invalid_argument("frac_apply: gamma ratio pole at n+beta+1 <= 0");
      const double ld = lgamma_diff(double(n) + 1.0, beta);
      const double factor = (dir == FracDirection::derivative) ? std::exp(ld) : std::exp(-ld);
      c[n] = f.coeffs()[n] * factor;
    }
  } else {
    const double sign = (dir == FracDirection::derivative) ? beta : -beta;
    for (std::size_t n = 0; n < f.size(); ++n)
      c[n] = f.coeffs()[n] * std::pow(double(n) + 1.0, sign);
  }
  return CoefficientSeries(std::move(c));
}

}  // namespace hllab
