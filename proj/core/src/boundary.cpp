#include "hllab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <stdexcept>

namespace hllab {

double distribution(const CircleSamples& samples, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("distribution: s must be nonnegative");
  std::size_t count = 0;
  for (const cplx& v : samples.values)
    if (std::abs(v) > s) ++count;
  return double(count) / double(samples.count());
}

RearrangementProfile rearrangement(const CircleSamples& samples) {
  RearrangementProfile out;
  out.sorted_abs.reserve(samples.count());
  for (const cplx& v : samples.values) out.sorted_abs.push_back(std::abs(v));
  std::sort(out.sorted_abs.begin(), out.sorted_abs.end(), std::greater<double>());
  return out;
}

double lorentz_quasinorm(const RearrangementProfile& profile, double p, double q) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::invalid_argument("lorentz_quasinorm: exponents must be positive");
  const std::vector<double>& a = profile.sorted_abs;
  if (a.empty()) throw std::invalid_argument("lorentz_quasinorm: empty profile");
  const double M = double(a.size());
  if (is_inf(p)) {
    if (!is_inf(q))
      throw std::invalid_argument(
          "lorentz_quasinorm: p = inf requires q = inf (the space is trivial otherwise)");
    return a[0];
  }
  if (is_inf(q)) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
      best = std::max(best, a[j] * std::pow(double(j + 1) / M, 1.0 / p));
    return best;
  }
  // step-exact: sum_j a_j^q * (p/q) [((j+1)/M)^{q/p} - (j/M)^{q/p}]
  const double e = q / p;
  KahanSum sum;
  double prev = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double next = std::pow(double(j + 1) / M, e);
    sum.add(std::pow(a[j], q) * (next - prev));
    prev = next;
  }
  return std::pow(sum.value() * (p / q), 1.0 / q);
}

double hardy_lorentz_norm(const CoefficientSeries& f, double p, double q, std::size_t M) {
  return lorentz_quasinorm(rearrangement(evaluate_circle(f, 1.0, M)), p, q);
}

double lp_mean(const CircleSamples& samples, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_mean: p must be positive");
  if (samples.count() == 0) throw std::invalid_argument("lp_mean: empty samples");
  if (is_inf(p)) {
    double best = 0.0;
    for (const cplx& v : samples.values) best = std::max(best, std::abs(v));
    return best;
  }
  KahanSum sum;
  for (const cplx& v : samples.values) sum.add(std::pow(std::abs(v), p));
  return std::pow(sum.value() / double(samples.count()), 1.0 / p);
}

namespace {

double diff_norm(const std::vector<cplx>& v, std::size_t k, int order, double p) {
  const std::size_t M = v.size();
  if (is_inf(p)) {
    double best = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      const cplx d = (order == 1)
                         ? v[(j + k) % M] - v[j]
                         : v[(j + k) % M] - 2.0 * v[j] + v[(j + M - k % M) % M];
      best = std::max(best, std::abs(d));
    }
    return best;
  }
  KahanSum sum;
  for (std::size_t j = 0; j < M; ++j) {
    const cplx d = (order == 1)
                       ? v[(j + k) % M] - v[j]
                       : v[(j + k) % M] - 2.0 * v[j] + v[(j + M - k % M) % M];
    sum.add(std::pow(std::abs(d), p));
  }
  return std::pow(sum.value() / double(M), 1.0 / p);
}

void require_boundary(const CircleSamples& samples) {
  if (samples.radius != 1.0)
    throw std::invalid_argument("moduli of continuity are boundary-value quantities; r must be 1");
}

}  // namespace

std::vector<double> shift_difference_table(const CircleSamples& samples, int order,
                                           double p) {
  require_boundary(samples);
  if (order != 1 && order != 2)
    throw std::invalid_argument("shift_difference_table: order must be 1 or 2");
  if (!(p >= 1.0))
    throw std::invalid_argument("shift_difference_table: mean exponent must be >= 1");
  const std::size_t M = samples.count();
  std::vector<double> out(M / 2);
  for (std::size_t k = 1; k <= M / 2; ++k)
    out[k - 1] = diff_norm(samples.values, k, order, p);
  return out;
}

double modulus_of_continuity(const CircleSamples& samples, int order, double t, double p) {
  require_boundary(samples);
  if (order != 1 && order != 2)
    throw std::invalid_argument("modulus_of_continuity: order must be 1 or 2");
  if (!(p >= 1.0))
    throw std::invalid_argument("modulus_of_continuity: mean exponent must be >= 1");
  const std::size_t M = samples.count();
  const double grid = 2.0 * std::numbers::pi / double(M);
  if (!(t >= grid))
    throw std::invalid_argument("modulus_of_continuity: t below the sample grid resolution");
  std::size_t kmax = std::size_t(t / grid + 1e-12);
  kmax = std::min(kmax, M / 2);  // +-h give equal norms, so half the circle suffices
  double best = 0.0;
  for (std::size_t k = 1; k <= kmax; ++k)
    best = std::max(best, diff_norm(samples.values, k, order, p));
  return best;
}

std::vector<Arc> dyadic_arcs(std::size_t M) {
  std::vector<Arc> arcs;
  for (std::size_t len = M; len >= 2; len /= 2)
    for (std::size_t off = 0; off < M; ++off) arcs.push_back({off, len});
  return arcs;
}

double bmoa_seminorm(const CircleSamples& samples, const std::vector<Arc>& arcs) {
  const std::size_t M = samples.count();
  const std::vector<cplx>& v = samples.values;
  // prefix sums over a doubled buffer make wrap-around arcs contiguous
  std::vector<cplx> prefix(2 * M + 1, cplx{});
  for (std::size_t i = 0; i < 2 * M; ++i) prefix[i + 1] = prefix[i] + v[i % M];
  double best = 0.0;
  for (const Arc& arc : arcs) {
    if (arc.length == 0 || arc.length > M)
      throw std::invalid_argument("bmoa_seminorm: arc length out of range");
    const cplx avg = (prefix[arc.offset + arc.length] - prefix[arc.offset]) /
                     double(arc.length);
    KahanSum dev;
    for (std::size_t j = 0; j < arc.length; ++j)
      dev.add(std::abs(v[(arc.offset + j) % M] - avg));
    best = std::max(best, dev.value() / double(arc.length));
  }
  return best;
}

double bmoa_seminorm(const CircleSamples& samples) {
  return bmoa_seminorm(samples, dyadic_arcs(samples.count()));
}

}  // namespace hllab
