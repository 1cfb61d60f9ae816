#pragma once

#include <vector>

#include "hllab/common.hpp"

namespace hllab {

/// Exponent arithmetic for multiplier targets:
///   q*s = s            if q = inf,
///   q*s = qs/(q-s)     if 0 < s < q < inf,
///   q*s = inf          if 0 < q <= s <= inf.
double qstar(double q, double s);

/// Power weight w(0) = 1, w(n) = n^alpha.
struct PowerWeight {
  double alpha = 0.0;
  double operator()(std::size_t n) const;
};

/// Dyadic block index: block(0) = 0, block(n) = floor(log2 n) + 1, i.e.
/// I_0 = {0}, I_m = [2^{m-1}, 2^m).
std::size_t block_index(std::size_t n);

/// A finite sequence with its dyadic block structure.
struct BlockedSeq {
  std::vector<cplx> entries;

  std::size_t block_count() const;
};

/// || x ||_{l(p,q,alpha)}: weight entrywise, inner l^p per dyadic block,
/// outer l^q across blocks; infinite exponents are sups. The trailing,
/// partially filled block treats absent entries as zero.
double blocked_norm(const BlockedSeq& x, double p, double q, const PowerWeight& weight);

/// Plain weighted l^s norm.
double lp_seq_norm(const BlockedSeq& x, double s, const PowerWeight& weight);

/// Cesaro sequence-space norm, s in (1, inf):
///   ( sum_{n=1}^{L} ( (1/n) sum_{k=1}^{min(n, len-1)} |x_k| )^s )^{1/s}.
/// Index origin follows the classical definition: sums start at k = 1 and
/// the entry x_0 does not participate. Requires L >= length of x.
double ces_norm(const BlockedSeq& x, double s, std::size_t L);

/// Multiplier target parameters for blocked spaces:
/// (p,q,alpha) x (r,s,beta) -> (p*r, q*s, beta - alpha).
struct BlockedParams {
  double p, q, alpha;
};
BlockedParams kellogg_target_params(double p, double q, double alpha, double r, double s,
                                    double beta);

}  // namespace hllab
