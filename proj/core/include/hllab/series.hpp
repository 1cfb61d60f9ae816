#pragma once

#include <vector>

#include "hllab/common.hpp"

namespace hllab {

/// Finite Taylor coefficient list (a_0, ..., a_N) of a polynomial
/// f(z) = sum a_n z^n. Trailing zeros are permitted; degree() is the index
/// of the last stored coefficient, not of the last nonzero one.
class CoefficientSeries {
 public:
  CoefficientSeries() : coeffs_(1, cplx{0.0, 0.0}) {}
  explicit CoefficientSeries(std::vector<cplx> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx at(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

  bool operator==(const CoefficientSeries& other) const = default;

 private:
  std::vector<cplx> coeffs_;
};

/// z^n.
CoefficientSeries monomial(std::size_t n);

/// 1 + z + ... + z^N, the degree-N Cauchy kernel section.
CoefficientSeries cauchy_kernel(std::size_t N);

/// Coordinatewise product of coefficient lists; the result degree is
/// min(deg f, deg g).
CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g);

/// a_n -> a_n w^n for |w| <= 1. Rejects |w| > 1.
CoefficientSeries dilate(const CoefficientSeries& f, cplx w);

/// First N+1 coefficients, zero-extended when N > deg f.
CoefficientSeries partial_sum(const CoefficientSeries& f, std::size_t N);

/// Coefficients of (1-z)^{-gamma}: b_n = Gamma(n+gamma)/(Gamma(gamma) n!),
/// computed through stable log-gamma differences. Requires gamma > 0.
CoefficientSeries cauchy_power(double gamma, std::size_t N);

/// Sum a_n w^n by Horner; exact modulo round-off for finite lists.
cplx evaluate_at(const CoefficientSeries& f, cplx w);

struct AbelSum {
  cplx estimate{};
  bool converged = false;
};

/// Abel means A(r) = sum a_n r^n along an increasing radius schedule in
/// (0,1). Reports the final mean and whether the last two means agree
/// within tol. Non-convergence is a flag, never an error.
AbelSum abel_sum(const CoefficientSeries& seq, const std::vector<double>& r_schedule,
                 double tol);

}  // namespace hllab
