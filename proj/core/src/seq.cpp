#include "hllab/seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hllab {

double qstar(double q, double s) {
  if (!(q > 0.0) || !(s > 0.0)) throw std::invalid_argument("qstar: exponents must be positive");
  if (is_inf(q)) return s;
  if (q <= s) return kInf;
  return q * s / (q - s);
}

double PowerWeight::operator()(std::size_t n) const {
  if (n == 0) return 1.0;
  return std::pow(double(n), alpha);
}

std::size_t block_index(std::size_t n) {
  if (n == 0) return 0;
  std::size_t m = 0;
  while ((std::size_t(1) << m) <= n) ++m;
  return m;  // n in [2^{m-1}, 2^m)
}

std::size_t BlockedSeq::block_count() const {
  if (entries.empty()) return 0;
  return block_index(entries.size() - 1) + 1;
}

namespace {

double scalar_lq(const std::vector<double>& vals, double q) {
  if (is_inf(q)) {
    double best = 0.0;
    for (double v : vals) best = std::max(best, v);
    return best;
  }
  KahanSum sum;
  for (double v : vals) sum.add(std::pow(v, q));
  return std::pow(sum.value(), 1.0 / q);
}

}  // namespace

double blocked_norm(const BlockedSeq& x, double p, double q, const PowerWeight& weight) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::invalid_argument("blocked_norm: exponents must be positive");
  if (x.entries.empty()) return 0.0;
  std::vector<double> inner(x.block_count(), 0.0);
  if (is_inf(p)) {
    for (std::size_t n = 0; n < x.entries.size(); ++n) {
      const std::size_t m = block_index(n);
      inner[m] = std::max(inner[m], weight(n) * std::abs(x.entries[n]));
    }
  } else {
    std::vector<KahanSum> sums(inner.size());
    for (std::size_t n = 0; n < x.entries.size(); ++n)
      sums[block_index(n)].add(std::pow(weight(n) * std::abs(x.entries[n]), p));
    for (std::size_t m = 0; m < inner.size(); ++m)
      inner[m] = std::pow(sums[m].value(), 1.0 / p);
  }
  return scalar_lq(inner, q);
}

double lp_seq_norm(const BlockedSeq& x, double s, const PowerWeight& weight) {
  if (!(s > 0.0)) throw std::invalid_argument("lp_seq_norm: s must be positive");
  if (is_inf(s)) {
    double best = 0.0;
    for (std::size_t n = 0; n < x.entries.size(); ++n)
      best = std::max(best, weight(n) * std::abs(x.entries[n]));
    return best;
  }
  KahanSum sum;
  for (std::size_t n = 0; n < x.entries.size(); ++n)
    sum.add(std::pow(weight(n) * std::abs(x.entries[n]), s));
  return std::pow(sum.value(), 1.0 / s);
}

double ces_norm(const BlockedSeq& x, double s, std::size_t L) {
  if (!(s > 1.0) || is_inf(s))
    throw std::invalid_argument("ces_norm: s must lie in (1, inf)");
  if (L < x.entries.size())
    throw std::invalid_argument("ces_norm: truncation length below sequence length");
  // prefix[n] = sum_{k=1}^{n} |x_k|
  const std::size_t len = x.entries.size();
  KahanSum outer;
  double prefix = 0.0;
  for (std::size_t n = 1; n <= L; ++n) {
    if (n < len) prefix += std::abs(x.entries[n]);
    outer.add(std::pow(prefix / double(n), s));
  }
  return std::pow(outer.value(), 1.0 / s);
}

BlockedParams kellogg_target_params(double p, double q, double alpha, double r, double s,
                                    double beta) {
  return BlockedParams{qstar(p, r), qstar(q, s), beta - alpha};
}

}  // namespace hllab
