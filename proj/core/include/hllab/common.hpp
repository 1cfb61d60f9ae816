#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hllab {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x) && x > 0; }

/// Thrown when a resolution parameter cannot represent the input
/// (e.g. sample count below the polynomial degree).
class resolution_error : public std::runtime_error {
 public:
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

/// Neumaier compensated accumulator. Quadrature and norm sums use this so
/// results do not depend on summation chunking.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// splitmix64; the project-wide deterministic bit source.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic stream of doubles in [-1, 1).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed ^ 0xd1b54a32d192ed03ULL) {
    // warm up so nearby seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }
  double next_symmetric() {
    const double u = double(splitmix64(state_) >> 11) * 0x1.0p-53;  // [0,1)
    return 2.0 * u - 1.0;
  }
  cplx next_cplx() {
    double re = next_symmetric();
    double im = next_symmetric();
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  std::uint64_t s = a * 0x9e3779b97f4a7c15ULL + b;
  splitmix64(s);
  s += c * 0xbf58476d1ce4e5b9ULL;
  splitmix64(s);
  return s;
}

std::size_t thread_budget();

/// Index-space parallel map with a deterministic (ordered) result.
/// Honors HLLAB_THREADS; runs inline when the budget is 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace hllab
