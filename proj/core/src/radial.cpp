#include "hllab/radial.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace hllab {

namespace {

void check_spec(const MixedNormSpec& spec) {
  if (!(spec.p > 0.0) || !(spec.q > 0.0))
    throw std::invalid_argument("mixed norm: p, q must be positive");
  if (!(spec.alpha > 0.0)) throw std::invalid_argument("mixed norm: alpha must be positive");
  if (!std::isfinite(spec.beta)) throw std::invalid_argument("mixed norm: beta must be finite");
  if (spec.little_oh && !is_inf(spec.q))
    throw std::invalid_argument("mixed norm: the little-oh variant requires q = inf");
}

}  // namespace

RadialGrid graded_radial_grid(std::size_t K, double grade) {
  if (K < 2) throw std::invalid_argument("graded_radial_grid: K must be at least 2");
  if (!(grade >= 1.0)) throw std::invalid_argument("graded_radial_grid: grade must be >= 1");
  const auto phi = [grade](double u) { return 1.0 - std::pow(1.0 - u, grade); };
  const double h = 1.0 / double(K + 1);
  RadialGrid grid;
  grid.nodes.resize(K);
  grid.weights.resize(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double u = double(k) * h;
    grid.nodes[k - 1] = phi(u);
    grid.weights[k - 1] = phi(u + 0.5 * h) - phi(u - 0.5 * h);
  }
  grid.origin_weight = phi(0.5 * h);
  return grid;
}

double bergman_quasinorm(const CoefficientSeries& f, const MixedNormSpec& spec,
                         const RadialGrid& grid, std::size_t M) {
  check_spec(spec);
  if (spec.beta != 0.0)
    throw std::invalid_argument("bergman_quasinorm: beta must be 0; use sobolev_quasinorm");
  if (grid.nodes.empty()) throw std::invalid_argument("bergman_quasinorm: empty grid");

  const std::size_t K = grid.nodes.size();
  std::vector<double> means(K);
  parallel_for(K, [&](std::size_t k) {
    means[k] = lp_mean(evaluate_circle(f, grid.nodes[k], M), spec.p);
  });
  const double origin_mean = std::abs(f.coeffs()[0]);  // M_p(0,f) = |a_0| for every p

  if (is_inf(spec.q)) {
    double best = origin_mean;  // (1-0)^alpha = 1
    for (std::size_t k = 0; k < K; ++k)
      best = std::max(best, means[k] * std::pow(1.0 - grid.nodes[k], spec.alpha));
    return best;
  }
  const double q = spec.q;
  const double wexp = q * spec.alpha - 1.0;
  KahanSum sum;
  sum.add(grid.origin_weight * std::pow(origin_mean, q));  // (1-r)^{wexp} = 1 at r = 0
  for (std::size_t k = 0; k < K; ++k)
    sum.add(grid.weights[k] * std::pow(means[k], q) * std::pow(1.0 - grid.nodes[k], wexp));
  return std::pow(sum.value(), 1.0 / q);
}

double sobolev_quasinorm(const CoefficientSeries& f, const MixedNormSpec& spec,
                         const RadialGrid& grid, std::size_t M) {
  check_spec(spec);
  MixedNormSpec base = spec;
  base.beta = 0.0;
  base.little_oh = false;
  const CoefficientSeries g =
      frac_apply(f, FracOrder{spec.beta, FracFlavor::gamma}, FracDirection::derivative);
  return bergman_quasinorm(g, base, grid, M);
}

double dirichlet_norm(const CoefficientSeries& f, double s, const RadialGrid& grid,
                      std::size_t M) {
  return sobolev_quasinorm(f, MixedNormSpec{s, s, 1.0, 1.0}, grid, M);
}

double h0_decay_metric(const CoefficientSeries& f, const MixedNormSpec& spec,
                       const RadialGrid& grid, std::size_t M) {
  if (!is_inf(spec.q)) throw std::invalid_argument("h0_decay_metric: requires q = inf");
  const CoefficientSeries g =
      spec.beta == 0.0
          ? f
          : frac_apply(f, FracOrder{spec.beta, FracFlavor::gamma}, FracDirection::derivative);
  const std::size_t K = grid.nodes.size();
  std::vector<double> weighted(K);
  parallel_for(K, [&](std::size_t k) {
    weighted[k] = lp_mean(evaluate_circle(g, grid.nodes[k], M), spec.p) *
                  std::pow(1.0 - grid.nodes[k], spec.alpha);
  });
  double global = std::abs(g.coeffs()[0]);
  for (double w : weighted) global = std::max(global, w);
  if (global == 0.0) return 0.0;
  double tail = 0.0;
  for (std::size_t k = (3 * K) / 4; k < K; ++k) tail = std::max(tail, weighted[k]);
  return tail / global;
}

}  // namespace hllab
