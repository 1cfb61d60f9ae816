#pragma once

#include <vector>

#include "hllab/boundary.hpp"
#include "hllab/fracops.hpp"

namespace hllab {

/// Quadrature grid for int_0^1 (.) dr with nodes clustered toward r = 1.
/// origin_weight carries the [0, first cell) mass and is assigned to the
/// implicit node r = 0; without it the left-end sliver is lost and constants
/// integrate visibly wrong.
struct RadialGrid {
  std::vector<double> nodes;    // strictly increasing, inside (0,1)
  std::vector<double> weights;  // positive, sum + origin_weight <= 1
  double origin_weight = 0.0;
};

/// Nodes r_k = 1 - (1 - k/(K+1))^grade, k = 1..K; weights are the images of
/// the midpoint cells in the flat parameter. grade >= 1 clusters nodes at
/// the weight singularity r = 1; default grade is 3.
RadialGrid graded_radial_grid(std::size_t K, double grade = 3.0);

struct MixedNormSpec {
  double p = 2.0;
  double q = 2.0;
  double alpha = 1.0;
  double beta = 0.0;
  bool little_oh = false;
};

/// Weighted Bergman quasinorm
///   q < inf : ( int_0^1 M_p(r,f)^q (1-r)^{q alpha - 1} dr )^{1/q}
///   q = inf : sup_r M_p(r,f) (1-r)^alpha  (grid nodes plus r = 0).
/// spec.beta must be 0 here; sobolev_quasinorm handles the derivative.
double bergman_quasinorm(const CoefficientSeries& f, const MixedNormSpec& spec,
                         const RadialGrid& grid, std::size_t M);

/// ||f^{[beta]}||_{H(p,q,alpha)} with the gamma-flavor derivative.
double sobolev_quasinorm(const CoefficientSeries& f, const MixedNormSpec& spec,
                         const RadialGrid& grid, std::size_t M);

/// Dirichlet-type norm: H(s,s,1,1).
double dirichlet_norm(const CoefficientSeries& f, double s, const RadialGrid& grid,
                      std::size_t M);

/// Decay diagnostic for the little-oh space: the weighted-mean max over the
/// last quartile of grid nodes divided by the global max. Near 0 means the
/// weighted means die toward r = 1; near 1 means extremal non-decay.
double h0_decay_metric(const CoefficientSeries& f, const MixedNormSpec& spec,
                       const RadialGrid& grid, std::size_t M);

}  // namespace hllab
