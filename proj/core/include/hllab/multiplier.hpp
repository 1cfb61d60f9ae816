#pragma once

#include "hllab/family.hpp"
#include "hllab/spaces.hpp"

namespace hllab {

/// B_lambda f: the coefficient multiplier action. Same arithmetic as the
/// Hadamard product; kept as a named alias for call-site clarity.
inline CoefficientSeries apply_multiplier(const CoefficientSeries& lambda,
                                          const CoefficientSeries& f) {
  return hadamard(lambda, f);
}

struct OpNormEntry {
  std::size_t degree = 0;
  std::string generator;
  double ratio = 0.0;
};

/// Empirical lower bound for || B_lambda : domain -> target ||: the sup of
/// ||lambda * f||_target / ||f||_domain over the probe family. Members with
/// zero domain norm are skipped (counted in skipped).
struct OpNormEstimate {
  double sup_ratio = 0.0;
  std::string argmax;
  std::vector<OpNormEntry> table;
  std::size_t skipped = 0;
};

OpNormEstimate opnorm_estimate(const CoefficientSeries& lambda, const SpaceSpec& domain,
                               const SpaceSpec& target, const TestFamily& family);

/// The pairing sum_n a_n lambda_n (finite, exact). For finite sequences the
/// Abel limit collapses to this plain sum.
cplx duality_pairing(const CoefficientSeries& g, const CoefficientSeries& f);

/// g_lambda(w) = sum lambda_n w^n for |w| < 1; rejects |w| >= 1.
std::vector<cplx> analytic_transform(const CoefficientSeries& lambda,
                                     const std::vector<cplx>& w_grid);

/// The frozen evaluation grid for transform/pairing checks:
/// radii {0, 0.5, 0.9} x 16 angles.
std::vector<cplx> default_w_grid();

}  // namespace hllab
