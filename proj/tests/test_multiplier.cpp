#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "hllab/fracops.hpp"
#include "hllab/gamma_ratio.hpp"
#include "hllab/multiplier.hpp"

using namespace hllab;

TEST_CASE("multiplier action composes like the product") {
  const CoefficientSeries a = random_polynomial(30, 1);
  const CoefficientSeries b = random_polynomial(30, 2);
  const CoefficientSeries f = random_polynomial(30, 3);
  // B_a B_b = B_{ab}
  const CoefficientSeries lhs = apply_multiplier(a, apply_multiplier(b, f));
  const CoefficientSeries rhs = apply_multiplier(hadamard(a, b), f);
  for (std::size_t n = 0; n < lhs.size(); ++n)
    CHECK(std::abs(lhs.coeffs()[n] - rhs.coeffs()[n]) <=
          1e-15 * std::abs(rhs.coeffs()[n]));
}

TEST_CASE("operator norm estimate on the identity") {
  TestFamily fam;
  fam.seed = 7;
  fam.degrees = {16, 32, 64};
  Generator r1;
  r1.kind = GeneratorKind::random_poly;
  r1.salt = 1;
  r1.tag = "random0";
  Generator lac;
  lac.kind = GeneratorKind::lacunary;
  lac.tag = "lacunary";
  fam.generators = {r1, lac};

  const SpaceSpec l2 = SpaceSpec::lp_space(2.0);
  const OpNormEstimate est = opnorm_estimate(cauchy_kernel(64), l2, l2, fam);
  CHECK(est.sup_ratio == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(est.table.size() == 6);
  CHECK(est.skipped == 0);

  // rank-one multiplier: ratio is the quotient of the constants' norms
  const CoefficientSeries e0 = monomial(0);
  const OpNormEstimate rank1 =
      opnorm_estimate(e0, SpaceSpec::lp_space(1.0), SpaceSpec::lp_space(2.0), fam);
  for (const OpNormEntry& e : rank1.table) CHECK(e.ratio <= 1.0 + 1e-12);

  // adding a generator can only raise the sup
  TestFamily bigger = fam;
  Generator c;
  c.kind = GeneratorKind::cauchy_tapered;
  c.gamma = 1.5;
  c.tag = "cauchy";
  bigger.generators.push_back(c);
  const OpNormEstimate est2 = opnorm_estimate(cauchy_kernel(64), l2, l2, bigger);
  CHECK(est2.sup_ratio >= est.sup_ratio - 1e-15);
}

TEST_CASE("kernel-section multiplier acts boundedly at the matched weight") {
  // lambda = coefficients of (1-z)^{-1/p} maps the weak Hardy-Lorentz ball
  // into the weighted sup-sequence space with exponent 2(1-1/p): both the
  // multiplier and the extremal members carry n^{1/p-1} growth, and the
  // weight absorbs exactly their product. Frozen after an oracle sweep.
  const double p = 0.5;
  TestFamily fam;
  fam.seed = 5;
  Generator cau;
  cau.kind = GeneratorKind::cauchy_tapered;
  cau.gamma = 1.0 / p;
  cau.tag = "cauchy_crit";
  Generator lac;
  lac.kind = GeneratorKind::lacunary;
  lac.tag = "lacunary";
  Generator rnd;
  rnd.kind = GeneratorKind::random_poly;
  rnd.salt = 1;
  rnd.tag = "random0";
  fam.generators = {cau, lac, rnd};
  const SpaceSpec domain = SpaceSpec::hardy_lorentz_space(p, kInf);
  const SpaceSpec target = SpaceSpec::lp_space(kInf, 2.0 * (1.0 - 1.0 / p));
  double lo = kInf, hi = 0.0;
  for (std::size_t deg : {64, 128, 256, 512, 1024}) {
    fam.degrees = {deg};
    const OpNormEstimate est =
        opnorm_estimate(cauchy_power(1.0 / p, deg), domain, target, fam);
    lo = std::min(lo, est.sup_ratio);
    hi = std::max(hi, est.sup_ratio);
  }
  CHECK(hi / lo < 1.25);
}

TEST_CASE("zero-norm members are skipped with a count") {
  TestFamily fam;
  fam.seed = 1;
  fam.degrees = {0, 8};  // a lacunary series of degree 0 is the zero polynomial
  Generator lac;
  lac.kind = GeneratorKind::lacunary;
  lac.tag = "lacunary";
  fam.generators = {lac};
  const OpNormEstimate est = opnorm_estimate(
      cauchy_kernel(8), SpaceSpec::lp_space(2.0), SpaceSpec::lp_space(2.0), fam);
  CHECK(est.skipped == 1);
  CHECK(est.table.size() == 1);
  CHECK(est.sup_ratio == doctest::Approx(1.0));

  // a member with positive domain norm whose product vanishes is kept
  Generator cst;
  cst.kind = GeneratorKind::smooth_binomial;
  cst.gamma = 0.0;  // (1-z)^0 = 1
  cst.tag = "const";
  fam.generators = {cst};
  fam.degrees = {8};
  const OpNormEstimate est2 = opnorm_estimate(
      monomial(3), SpaceSpec::lp_space(2.0), SpaceSpec::lp_space(2.0), fam);
  CHECK(est2.skipped == 0);
  CHECK(est2.sup_ratio == 0.0);
}

TEST_CASE("duality pairing") {
  const CoefficientSeries f(std::vector<cplx>{1.0, 4.0, 7.0});
  CHECK(duality_pairing(monomial(2), f) == cplx{7.0, 0.0});
  // against the kernel section: sums the coefficients
  CHECK(duality_pairing(cauchy_kernel(5), f) == cplx{12.0, 0.0});
  // symmetric
  const CoefficientSeries g = random_polynomial(40, 4);
  const CoefficientSeries h = random_polynomial(52, 5);
  CHECK(duality_pairing(g, h) == duality_pairing(h, g));
}

TEST_CASE("pairing against dilation equals the transform of the product") {
  const CoefficientSeries f = random_polynomial(64, 6);
  const CoefficientSeries g = random_polynomial(64, 7);
  for (double r : {0.0, 0.3, 0.9}) {
    const cplx lhs = duality_pairing(g, dilate(f, cplx{r, 0.0}));
    const cplx rhs = evaluate_at(hadamard(f, g), cplx{r, 0.0});
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
  // and it agrees with the Abel limit of the product sequence
  const AbelSum abel = abel_sum(hadamard(f, g), {0.9, 0.999, 0.999999999}, 1.0);
  const cplx direct = duality_pairing(g, f);
  CHECK(std::abs(abel.estimate - direct) <= 1e-6 * (1.0 + std::abs(direct)));
}

TEST_CASE("analytic transform") {
  const std::vector<cplx> grid = default_w_grid();
  CHECK(grid.size() == 33);

  const std::vector<cplx> c0 = analytic_transform(monomial(0), grid);
  for (const cplx& v : c0) CHECK(v == cplx{1.0, 0.0});

  // kernel section: geometric sum
  const std::size_t N = 40;
  const std::vector<cplx> geo = analytic_transform(cauchy_kernel(N), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx w = grid[i];
    const cplx expect = w == cplx{1.0, 0.0}
                            ? cplx(double(N + 1), 0.0)
                            : (1.0 - std::pow(w, double(N + 1))) / (1.0 - w);
    CHECK(std::abs(geo[i] - expect) < 1e-12);
  }

  // truncations of (1-w)^{-2} converge geometrically on |w| <= 0.9
  const std::vector<cplx> tr = analytic_transform(cauchy_power(2.0, 200), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx w = grid[i];
    const cplx limit = 1.0 / ((1.0 - w) * (1.0 - w));
    CHECK(std::abs(tr[i] - limit) < 1e-4);
  }

  CHECK_THROWS_AS(analytic_transform(monomial(1), {cplx{1.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("hadamard against the Cauchy-power kernel shifts the fractional order") {
  // (g * F)(w) = Gamma(c)^{-1} g^{[c-1]}(w) for F = (1-z)^{-c}, exactly
  for (auto [alpha, p] : {std::pair{1.0, 0.5}, std::pair{0.5, 0.75}}) {
    const double c = alpha + 1.0 / p;
    const std::size_t N = 96;
    const CoefficientSeries F = cauchy_power(c, N);
    const std::vector<cplx> grid = default_w_grid();
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      const CoefficientSeries g = random_polynomial(N, seed);
      const CoefficientSeries lhs = hadamard(g, F);
      const CoefficientSeries rhs =
          frac_apply(g, FracOrder{c - 1.0, FracFlavor::gamma}, FracDirection::derivative);
      const double inv_gamma = std::exp(-std::lgamma(c));
      const std::vector<cplx> lv = analytic_transform(lhs, grid);
      const std::vector<cplx> rv = analytic_transform(rhs, grid);
      for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(lv[i] - inv_gamma * rv[i]) <= 1e-9 * (1.0 + std::abs(rv[i])));
    }
  }
}
