#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "hllab/circle.hpp"
#include "hllab/family.hpp"
#include "hllab/fracops.hpp"
#include "hllab/gamma_ratio.hpp"
#include "hllab/series.hpp"

using namespace hllab;

namespace {

CoefficientSeries poly(std::initializer_list<cplx> cs) {
  return CoefficientSeries(std::vector<cplx>(cs));
}

bool coeff_close(const CoefficientSeries& a, const CoefficientSeries& b, double tol) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(a.at(i) - b.at(i)) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("hadamard is the coordinatewise product") {
  CHECK(hadamard(poly({1, 2}), poly({3, 5})) == poly({3, 10}));
  // section of the Cauchy kernel is a two-sided identity up to its degree
  const CoefficientSeries f = random_polynomial(12, 77);
  CHECK(hadamard(cauchy_kernel(20), f) == f);
  CHECK(hadamard(f, cauchy_kernel(20)) == f);
  // monomial extracts one coefficient
  CHECK(hadamard(monomial(2), poly({1, 4, 7})) == poly({0, 0, 7}));
}

TEST_CASE("hadamard is bilinear and commutative") {
  const CoefficientSeries f = random_polynomial(33, 1);
  const CoefficientSeries g = random_polynomial(33, 2);
  const CoefficientSeries h = random_polynomial(33, 3);
  CHECK(hadamard(f, g) == hadamard(g, f));
  // f*(g+h) = f*g + f*h, coefficientwise
  std::vector<cplx> gh(g.size());
  for (std::size_t i = 0; i < gh.size(); ++i) gh[i] = g.coeffs()[i] + h.coeffs()[i];
  const CoefficientSeries lhs = hadamard(f, CoefficientSeries(gh));
  const CoefficientSeries fg = hadamard(f, g), fh = hadamard(f, h);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    CHECK(std::abs(lhs.coeffs()[i] - (fg.coeffs()[i] + fh.coeffs()[i])) < 1e-15);
}

TEST_CASE("dilate") {
  CHECK(dilate(poly({1, 1, 1}), 0.0) == poly({1, 0, 0}));
  const CoefficientSeries f = random_polynomial(9, 5);
  CHECK(dilate(f, 1.0) == f);
  CHECK(coeff_close(dilate(monomial(3), 0.5), poly({0, 0, 0, 0.125}), 1e-16));
  CHECK_THROWS_AS(dilate(f, cplx{1.2, 0.0}), std::invalid_argument);
}

TEST_CASE("dilate composes multiplicatively") {
  const CoefficientSeries f = random_polynomial(512, 11);
  for (auto [r, s] : {std::pair{0.9, 0.7}, std::pair{0.99, 0.99}, std::pair{0.3, 0.5}}) {
    const CoefficientSeries a = dilate(dilate(f, r), s);
    const CoefficientSeries b = dilate(f, r * s);
    for (std::size_t n = 0; n < a.size(); ++n) {
      const double scale = std::abs(b.coeffs()[n]);
      CHECK(std::abs(a.coeffs()[n] - b.coeffs()[n]) <= 1e-13 * scale + 1e-300);
    }
  }
}

TEST_CASE("partial sums truncate and zero-extend") {
  CHECK(partial_sum(poly({1, 2}), 0) == poly({1}));
  CHECK(partial_sum(poly({1, 2, 3, 4}), 5).degree() == 5);
  CHECK(coeff_close(partial_sum(poly({1, 2, 3, 4}), 5), poly({1, 2, 3, 4}), 0.0));
  CHECK(partial_sum(poly({1, 2, 3, 4, 5, 6}), 2) == poly({1, 2, 3}));
}

TEST_CASE("cauchy_power closed cases") {
  // gamma = 1 reproduces the kernel section
  CHECK(coeff_close(cauchy_power(1.0, 16), cauchy_kernel(16), 1e-14));
  // (1-z)^{-2} = sum (n+1) z^n
  const CoefficientSeries g2 = cauchy_power(2.0, 8);
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(g2.coeffs()[n].real() == doctest::Approx(double(n + 1)).epsilon(1e-13));
  CHECK(cauchy_power(0.5, 4).coeffs()[1].real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(cauchy_power(0.0, 4), std::invalid_argument);
}

TEST_CASE("cauchy_power agrees with the binomial recurrence to 4096") {
  for (double gamma : {0.35, 1.0, 2.0, 4.0, 11.5, 16.0}) {
    const CoefficientSeries fast = cauchy_power(gamma, 4096);
    const CoefficientSeries slow = binomial_series(gamma, 4096);
    for (std::size_t n = 0; n <= 4096; n += 7) {
      const double ref = slow.coeffs()[n].real();
      CHECK(std::abs(fast.coeffs()[n].real() - ref) <= 1e-10 * std::abs(ref));
    }
  }
}

TEST_CASE("cauchy_power stays stable at n = 2^20") {
  // long double recurrence as an independent oracle at one deep index
  for (double gamma : {0.5, 3.0, 16.0}) {
    const std::size_t N = std::size_t(1) << 20;
    long double b = 1.0L;
    for (std::size_t n = 1; n <= N; ++n)
      b *= (long double)(double(n) - 1.0 + gamma) / (long double)(double(n));
    const double lg = std::lgamma(gamma);
    const double got =
        std::exp(hllab::lgamma_diff(double(N) + 1.0, gamma - 1.0) - lg);
    CHECK(std::abs(got - double(b)) <= 1e-10 * std::abs(double(b)));
  }
}

TEST_CASE("fractional calculus singles") {
  // gamma-flavor derivative of z at beta = 1 doubles the coefficient
  const CoefficientSeries d =
      frac_apply(monomial(1), FracOrder{1.0, FracFlavor::gamma}, FracDirection::derivative);
  CHECK(d.coeffs()[1].real() == doctest::Approx(2.0).epsilon(1e-14));
  // beta = 0 is the identity for both flavors
  const CoefficientSeries f = random_polynomial(20, 9);
  CHECK(frac_apply(f, FracOrder{0.0, FracFlavor::gamma}, FracDirection::derivative) == f);
  CHECK(frac_apply(f, FracOrder{0.0, FracFlavor::power}, FracDirection::integral) == f);
  // power flavor: (n+1)^beta
  const CoefficientSeries j =
      frac_apply(monomial(3), FracOrder{2.0, FracFlavor::power}, FracDirection::derivative);
  CHECK(j.coeffs()[3].real() == doctest::Approx(16.0).epsilon(1e-14));
  // negative order swaps direction
  const CoefficientSeries a =
      frac_apply(f, FracOrder{-1.5, FracFlavor::gamma}, FracDirection::derivative);
  const CoefficientSeries b =
      frac_apply(f, FracOrder{1.5, FracFlavor::gamma}, FracDirection::integral);
  CHECK(a == b);
}

TEST_CASE("fractional derivative then integral round-trips") {
  const CoefficientSeries f = random_polynomial(512, 21);
  for (double beta : {0.25, 0.5, 1.0, 2.5, 5.0}) {
    for (FracFlavor flavor : {FracFlavor::gamma, FracFlavor::power}) {
      const CoefficientSeries fwd =
          frac_apply(f, FracOrder{beta, flavor}, FracDirection::derivative);
      const CoefficientSeries back =
          frac_apply(fwd, FracOrder{beta, flavor}, FracDirection::integral);
      for (std::size_t n = 0; n < f.size(); ++n) {
        const double scale = std::abs(f.coeffs()[n]);
        CHECK(std::abs(back.coeffs()[n] - f.coeffs()[n]) <= 1e-12 * (scale > 0 ? scale : 1));
      }
    }
  }
}

TEST_CASE("evaluate_circle basics") {
  const CircleSamples ones = evaluate_circle(poly({1}), 0.5, 8);
  for (const cplx& v : ones.values) CHECK(std::abs(v - cplx{1, 0}) < 1e-15);

  const CircleSamples u1 = evaluate_circle(monomial(1), 0.5, 4);
  const cplx expect[4] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
  for (int j = 0; j < 4; ++j) CHECK(std::abs(u1.values[j] - expect[j]) < 1e-15);

  const CircleSamples s = evaluate_circle(poly({1, 1}), 1.0, 4);
  const cplx expect2[4] = {{2, 0}, {1, 1}, {0, 0}, {1, -1}};
  for (int j = 0; j < 4; ++j) CHECK(std::abs(s.values[j] - expect2[j]) < 1e-15);

  CHECK_THROWS_AS(evaluate_circle(random_polynomial(8, 1), 1.0, 8), resolution_error);
  CHECK_THROWS_AS(evaluate_circle(poly({1}), 1.0, 12), resolution_error);
}

TEST_CASE("circle evaluation round-trips through the inverse transform") {
  const CoefficientSeries f = random_polynomial(100, 31);
  const CircleSamples s = evaluate_circle(f, 1.0, 256);
  const std::vector<cplx> back = circle_to_coeffs(s);
  for (std::size_t n = 0; n < back.size(); ++n)
    CHECK(std::abs(back[n] - f.at(n)) < 1e-12);
}

TEST_CASE("abel summation") {
  // alternating truncation: A(r) = (1 - r^{2k})/(1+r) -> 1/2
  const std::size_t len = 4096;
  std::vector<cplx> alt(len);
  for (std::size_t n = 0; n < len; ++n) alt[n] = (n % 2 == 0) ? 1.0 : -1.0;
  const std::vector<double> sched{0.9, 0.99, 0.999};
  const AbelSum got = abel_sum(CoefficientSeries(alt), sched, 2e-2);
  const double r = sched.back();
  const double oracle = (1.0 - std::pow(r, double(len))) / (1.0 + r);
  CHECK(std::abs(got.estimate - cplx{oracle, 0}) < 1e-12);
  CHECK(std::abs(got.estimate.real() - 0.5) < 0.02);
  CHECK(got.converged);

  const AbelSum fin = abel_sum(poly({3, 4}), {0.5, 0.9, 0.999, 0.9999}, 1e-2);
  CHECK(std::abs(fin.estimate - cplx{3.0 + 4.0 * 0.9999, 0}) < 1e-12);

  const AbelSum zero = abel_sum(poly({0, 0, 0}), {0.5, 0.9}, 1e-9);
  CHECK(std::abs(zero.estimate) == 0.0);
  CHECK(zero.converged);

  CHECK_THROWS_AS(abel_sum(poly({1}), {}, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(abel_sum(poly({1}), {0.9, 0.5}, 1e-3), std::invalid_argument);
}
