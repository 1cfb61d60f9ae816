#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "hllab/common.hpp"
#include "hllab/seq.hpp"

using namespace hllab;

namespace {

BlockedSeq seq_of(std::initializer_list<double> vs) {
  BlockedSeq x;
  for (double v : vs) x.entries.emplace_back(v, 0.0);
  return x;
}

BlockedSeq unit(std::size_t index, std::size_t len) {
  BlockedSeq x;
  x.entries.assign(len, cplx{});
  x.entries[index] = 1.0;
  return x;
}

BlockedSeq random_seq(std::size_t len, std::uint64_t seed) {
  RandomStream rng(seed);
  BlockedSeq x;
  x.entries.resize(len);
  for (cplx& v : x.entries) v = rng.next_cplx();
  return x;
}

}  // namespace

TEST_CASE("qstar three cases") {
  CHECK(qstar(kInf, 2.0) == 2.0);
  CHECK(qstar(4.0, 2.0) == 4.0);
  CHECK(is_inf(qstar(2.0, 2.0)));
  CHECK(is_inf(qstar(1.0, 2.0)));
  CHECK(is_inf(qstar(kInf, kInf)));
}

TEST_CASE("qstar composition (q*s)*s = max(q,s) bit-exactly on a harmonic grid") {
  // all pairwise case-2 values 3465/(v-u) are exactly representable, so the
  // composed identity holds with zero tolerance
  std::vector<double> grid;
  for (int u = 1; u <= 11; ++u) grid.push_back(3465.0 / double(u));
  grid.push_back(kInf);
  REQUIRE(grid.size() == 12);
  for (double q : grid) {
    for (double s : grid) {
      const double lhs = qstar(qstar(q, s), s);
      const double rhs = std::max(q, s);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("block index") {
  CHECK(block_index(0) == 0);
  CHECK(block_index(1) == 1);
  CHECK(block_index(2) == 2);
  CHECK(block_index(3) == 2);
  CHECK(block_index(4) == 3);
  CHECK(block_index(7) == 3);
  CHECK(block_index(8) == 4);
}

TEST_CASE("blocked norm basics") {
  // single entry at index 4 picks up the weight 4^alpha
  for (double alpha : {-1.0, 0.0, 0.5, 2.0})
    CHECK(blocked_norm(unit(4, 6), 2.0, 1.0, PowerWeight{alpha}) ==
          doctest::Approx(std::pow(4.0, alpha)).epsilon(1e-14));
  // ones on I_2 = {2,3}: single block, l2 = sqrt(2)
  BlockedSeq x = seq_of({0, 0, 1, 1});
  for (double q : {0.5, 1.0, 2.0, kInf})
    CHECK(blocked_norm(x, 2.0, q, PowerWeight{0.0}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // e_0 sees weight 1 in every space
  for (double p : {0.5, 2.0, kInf})
    CHECK(blocked_norm(unit(0, 1), p, 1.0, PowerWeight{3.0}) == 1.0);
}

TEST_CASE("diagonal collapse to the plain sequence norm") {
  const BlockedSeq x = random_seq(1000, 17);
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    const double a = blocked_norm(x, p, p, PowerWeight{0.0});
    const double b = lp_seq_norm(x, p, PowerWeight{0.0});
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("lp_seq_norm basics") {
  CHECK(lp_seq_norm(unit(0, 3), 1.0, PowerWeight{5.0}) == 1.0);
  CHECK(lp_seq_norm(seq_of({1, 1}), 2.0, PowerWeight{0.0}) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(lp_seq_norm(unit(9, 12), 2.0, PowerWeight{1.5}) ==
        doctest::Approx(std::pow(9.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("weight algebra composes exactly") {
  // w_a(n) w_b(n) = w_{a+b}(n) bit-true through pow on integer bases
  for (double a : {0.5, 1.0, -2.0}) {
    for (double b : {0.25, 2.0}) {
      for (std::size_t n : {1, 2, 37, 1024}) {
        const double lhs = PowerWeight{a}(n) * PowerWeight{b}(n);
        const double rhs = PowerWeight{a + b}(n);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("ces norm") {
  CHECK(ces_norm(seq_of({0, 0, 0}), 2.0, 8) == 0.0);
  // e_1: partial sums all equal 1, so the norm is (sum n^{-s})^{1/s}
  KahanSum ref;
  for (int n = 1; n <= 10; ++n) ref.add(1.0 / double(n * n));
  CHECK(ces_norm(unit(1, 2), 2.0, 10) ==
        doctest::Approx(std::sqrt(ref.value())).epsilon(1e-14));
  // homogeneity
  const BlockedSeq x = random_seq(40, 4);
  BlockedSeq x2 = x;
  for (cplx& v : x2.entries) v *= 2.0;
  CHECK(ces_norm(x2, 1.5, 80) == doctest::Approx(2.0 * ces_norm(x, 1.5, 80)).epsilon(1e-14));
  // x_0 does not participate
  BlockedSeq y = x;
  y.entries[0] += cplx{100.0, 0.0};
  CHECK(ces_norm(y, 1.5, 80) == ces_norm(x, 1.5, 80));
  CHECK_THROWS_AS(ces_norm(x, 1.0, 80), std::invalid_argument);
  CHECK_THROWS_AS(ces_norm(x, 2.0, 10), std::invalid_argument);
}

TEST_CASE("ces stays inside a narrow band of its blocked form") {
  for (double s : {1.5, 2.0, 3.0}) {
    double lo = kInf, hi = 0.0;
    for (std::size_t len : {64, 128, 256, 512, 1024}) {
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        BlockedSeq x = random_seq(len, seed);
        for (cplx& v : x.entries) v = std::abs(v);
        const double c = ces_norm(x, s, 2 * len);
        const double b = blocked_norm(x, 1.0, s, PowerWeight{1.0 / s - 1.0});
        lo = std::min(lo, c / b);
        hi = std::max(hi, c / b);
      }
    }
    CHECK(hi / lo < 10.0);
  }
}

TEST_CASE("kellogg target parameters") {
  const BlockedParams a = kellogg_target_params(1, 2, 0, 1, 2, 0);
  CHECK(is_inf(a.p));
  CHECK(is_inf(a.q));
  CHECK(a.alpha == 0.0);
  const BlockedParams b = kellogg_target_params(kInf, kInf, 0, 2, 2, 1);
  CHECK(b.p == 2.0);
  CHECK(b.q == 2.0);
  CHECK(b.alpha == 1.0);
  const BlockedParams c = kellogg_target_params(4, 4, 1, 2, 2, 0);
  CHECK(c.p == 4.0);
  CHECK(c.q == 4.0);
  CHECK(c.alpha == -1.0);
}

TEST_CASE("multiplier Holder inequality holds with constant one") {
  const double tuples[6][4] = {{2, 2, 1, 1},   {4, 2, 2, 1}, {1, 1, 1, 1},
                               {kInf, kInf, 2, 2}, {2, 4, 2, 4}, {3, 3, 2, 2}};
  int trials = 0;
  for (const auto& t : tuples) {
    const double p = t[0], q = t[1], r = t[2], s = t[3];
    const double pr = qstar(p, r), qs = qstar(q, s);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      std::uint64_t state = seed;
      const std::size_t len = 16 + std::size_t(splitmix64(state) % 1000);
      const BlockedSeq lam = random_seq(len, mix_seed(7, seed));
      const BlockedSeq x = random_seq(len, mix_seed(8, seed));
      BlockedSeq prod;
      prod.entries.resize(len);
      for (std::size_t i = 0; i < len; ++i)
        prod.entries[i] = lam.entries[i] * x.entries[i];
      const double lhs = blocked_norm(prod, r, s, PowerWeight{0.0});
      const double rhs = blocked_norm(lam, pr, qs, PowerWeight{0.0}) *
                         blocked_norm(x, p, q, PowerWeight{0.0});
      CHECK(lhs <= rhs * (1.0 + 1e-12));
      ++trials;
    }
  }
  CHECK(trials == 240);
}
