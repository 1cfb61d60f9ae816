#pragma once

#include <vector>

#include "hllab/circle.hpp"

namespace hllab {

/// |values| sorted nonincreasing; the discrete decreasing rearrangement.
/// f*(s) = sorted_abs[floor(s*M)] for s in [0,1); each cell has measure 1/M.
struct RearrangementProfile {
  std::vector<double> sorted_abs;
  double step() const { return 1.0 / double(sorted_abs.size()); }
};

/// Distribution function: (1/M) #{ j : |v_j| > s }.
double distribution(const CircleSamples& samples, double s);

RearrangementProfile rearrangement(const CircleSamples& samples);

/// Lorentz functional ||f||_{p,q}. The discrete rearrangement is a step
/// function, so for q < infinity the integral
///   int_0^1 [f*(s) s^{1/p}]^q ds/s
/// is evaluated in closed form per step; no quadrature error enters.
/// Convention: p = infinity requires q = infinity (the space is trivial
/// otherwise) and the value is max |v_j|.
double lorentz_quasinorm(const RearrangementProfile& profile, double p, double q);

/// ||f||_{H^{p,q}} of a polynomial: rearrange boundary samples at r = 1.
/// M must be a power of two with M >= deg f + 1.
double hardy_lorentz_norm(const CoefficientSeries& f, double p, double q, std::size_t M);

/// Discrete p-mean ((1/M) sum |v_j|^p)^{1/p}; max for p = infinity.
double lp_mean(const CircleSamples& samples, double p);

/// Modulus of continuity at scale t over grid-aligned shifts h = 2 pi k/M:
/// order 1 uses T_h f - f, order 2 the symmetric second difference.
/// Requires samples at radius 1 and t >= 2 pi / M.
double modulus_of_continuity(const CircleSamples& samples, int order, double t, double p);

/// All first (or second) difference p-means, index k = 1 .. M/2.
/// modulus_of_continuity is a running max over a prefix of this table.
std::vector<double> shift_difference_table(const CircleSamples& samples, int order,
                                           double p);

/// Mean-oscillation seminorm over grid-aligned arcs. An arc is (offset,
/// length) in sample indices, wrap-around allowed.
struct Arc {
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// All dyadic-length arcs (M, M/2, ..., 2 samples) at every offset.
std::vector<Arc> dyadic_arcs(std::size_t M);

double bmoa_seminorm(const CircleSamples& samples, const std::vector<Arc>& arcs);

/// bmoa_seminorm over the default dyadic arc family.
double bmoa_seminorm(const CircleSamples& samples);

}  // namespace hllab
