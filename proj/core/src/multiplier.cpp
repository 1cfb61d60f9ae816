#include "hllab/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hllab {

OpNormEstimate opnorm_estimate(const CoefficientSeries& lambda, const SpaceSpec& domain,
                               const SpaceSpec& target, const TestFamily& family) {
  if (family.generators.empty() || family.degrees.empty())
    throw std::invalid_argument("opnorm_estimate: empty probe family");
  struct Slot {
    OpNormEntry entry;
    bool skipped = false;
  };
  std::vector<Slot> slots(family.generators.size() * family.degrees.size());
  parallel_for(slots.size(), [&](std::size_t i) {
    const std::size_t gi = i / family.degrees.size();
    const std::size_t di = i % family.degrees.size();
    const Generator& gen = family.generators[gi];
    const std::size_t deg = family.degrees[di];
    const CoefficientSeries f = gen.make(deg, family.seed);
    const double den = space_norm(f, domain);
    Slot& slot = slots[i];
    slot.entry.degree = deg;
    slot.entry.generator = gen.tag;
    if (den == 0.0) {
      slot.skipped = true;
      return;
    }
    slot.entry.ratio = space_norm(apply_multiplier(lambda, f), target) / den;
  });
  OpNormEstimate out;
  for (const Slot& slot : slots) {
    if (slot.skipped) {
      ++out.skipped;
      continue;
    }
    out.table.push_back(slot.entry);
    if (slot.entry.ratio > out.sup_ratio) {
      out.sup_ratio = slot.entry.ratio;
      out.argmax = slot.entry.generator + "@" + std::to_string(slot.entry.degree);
    }
  }
  return out;
}

cplx duality_pairing(const CoefficientSeries& g, const CoefficientSeries& f) {
  const std::size_t n = std::min(g.size(), f.size());
  cplx acc{};
  for (std::size_t i = 0; i < n; ++i) acc += g.coeffs()[i] * f.coeffs()[i];
  return acc;
}

std::vector<cplx> analytic_transform(const CoefficientSeries& lambda,
                                     const std::vector<cplx>& w_grid) {
  std::vector<cplx> out(w_grid.size());
  for (std::size_t i = 0; i < w_grid.size(); ++i) {
    if (std::abs(w_grid[i]) >= 1.0)
      throw std::invalid_argument("analytic_transform: |w| >= 1 is outside the disk");
    out[i] = evaluate_at(lambda, w_grid[i]);
  }
  return out;
}

std::vector<cplx> default_w_grid() {
  std::vector<cplx> grid;
  grid.push_back(cplx{0.0, 0.0});
  for (double r : {0.5, 0.9}) {
    for (int k = 0; k < 16; ++k) {
      const double th = 2.0 * std::numbers::pi * double(k) / 16.0;
      grid.push_back(cplx{r * std::cos(th), r * std::sin(th)});
    }
  }
  return grid;
}

}  // namespace hllab
