#include <gtest/gtest.h>

#include "qtail/errors.hpp"
#include "qtail/qfun.hpp"
#include "support.hpp"

using namespace qtail;
using qtail::testing::from_terms;
using qtail::testing::Gen;

namespace {

const SignedMonomial kQ = SignedMonomial::q_power(1);
TruncatedSeries q_(std::int64_t e, long c = 1) { return TruncatedSeries::monomial(e, c); }
const TruncatedSeries kOne = TruncatedSeries::constant(1);

// Pascal recurrence, independent of the division route.
std::vector<std::vector<TruncatedSeries>> pascal(int lmax) {
  std::vector<std::vector<TruncatedSeries>> t(static_cast<std::size_t>(lmax + 1));
  for (int l = 0; l <= lmax; ++l) {
    auto& row = t[static_cast<std::size_t>(l)];
    row.resize(static_cast<std::size_t>(l + 1), kOne);
    for (int i = 1; i < l; ++i) {
      const auto& up = t[static_cast<std::size_t>(l - 1)];
      row[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i - 1)] + q_(i) * up[static_cast<std::size_t>(i)];
    }
  }
  return t;
}

}  // namespace

TEST(Pochhammer, FiniteExamples) {
  EXPECT_EQ(pochhammer(kQ, 2), kOne - q_(1) - q_(2) + q_(3));
  EXPECT_EQ(pochhammer(kQ, 0), kOne);
  // (-q^{1/2}; q)_1 = 1 + q^{1/2}
  EXPECT_EQ(pochhammer({-1, 1}, 1), TruncatedSeries::constant(1, 2) + TruncatedSeries::monomial(1, 1, 2));
  EXPECT_THROW(pochhammer(kQ, -1), PreconditionViolated);
}

TEST(Pochhammer, PentagonalSmall) {
  const TruncatedSeries e = pochhammer(kQ, kInfinite, 16);
  EXPECT_EQ(e, from_terms(1, {{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}}, 16));
}

TEST(Pochhammer, PentagonalOracle) {
  for (std::int64_t n : {1, 2, 7, 100, 777, 2000}) {
    EXPECT_EQ(qtail::testing::window(pochhammer(kQ, kInfinite, n), n), qtail::testing::pentagonal(n)) << n;
  }
}

TEST(Pochhammer, InfiniteMatchesFiniteHead) {
  // (q^2;q)_oo (1 - q) = (q;q)_oo, and (-q;q)_oo (q;q)_oo = (q^2;q^2)_oo
  const std::int64_t n = 60;
  const TruncatedSeries a = pochhammer(SignedMonomial::q_power(2), kInfinite, n) * (kOne - q_(1));
  EXPECT_EQ(a, euler_function(n));
  const TruncatedSeries b = pochhammer(SignedMonomial::q_power(1, -1), kInfinite, n) * euler_function(n);
  TruncatedSeries even = TruncatedSeries::zero(1, n);
  const auto pent = qtail::testing::pentagonal(n);
  for (std::int64_t e = 0; 2 * e < n; ++e) even += q_(2 * e, pent[static_cast<std::size_t>(e)].get_si());
  EXPECT_EQ(b, even);
  EXPECT_THROW(pochhammer({1, 0}, kInfinite, 10), DivergentInfiniteProduct);
}

TEST(QuantumInt, Examples) {
  EXPECT_EQ(quantum_int(2), TruncatedSeries::monomial(-1, 1, 2) + TruncatedSeries::monomial(1, 1, 2));
  EXPECT_EQ(quantum_int(3), q_(-1) + kOne + q_(1));
  EXPECT_TRUE(quantum_int(0).empty());
  EXPECT_EQ(quantum_int(1), kOne);
}

TEST(GaussBinom, Examples) {
  EXPECT_EQ(gauss_binom(2, 1), kOne + q_(1));
  EXPECT_EQ(gauss_binom(3, 1), kOne + q_(1) + q_(2));
  for (int l = 0; l < 6; ++l) EXPECT_EQ(gauss_binom(l, 0), kOne);
  EXPECT_TRUE(gauss_binom(3, 4).empty());
  EXPECT_TRUE(gauss_binom(3, -1).empty());
}

TEST(GaussBinom, PascalAndSymmetry) {
  const auto table = pascal(31);
  for (int l = 0; l <= 31; ++l) {
    for (int i = 0; i <= l; ++i) {
      const TruncatedSeries g = gauss_binom(l, i);
      EXPECT_EQ(g, table[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)]) << l << " " << i;
      EXPECT_EQ(g, gauss_binom(l, l - i));
    }
  }
}

TEST(QuantumFactorial, MatchesPochhammerUpToMonomial) {
  for (int m = 0; m <= 15; ++m) {
    const TruncatedSeries qf = quantum_factorial(m);
    TruncatedSeries den = kOne;
    for (int j = 0; j < m; ++j) den = den * (kOne - q_(1));
    const TruncatedSeries ratio = divide(pochhammer(kQ, m), den);
    EXPECT_EQ(normalize_tail(qf).series, normalize_tail(ratio).series) << m;
  }
}

TEST(PochhammerProduct, MatchesGenericDivision) {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    PochhammerProduct p;
    TruncatedSeries num = kOne;
    TruncatedSeries den = kOne;
    const int sign = g.uniform(0, 1) ? 1 : -1;
    const std::int64_t h = g.uniform(-8, 8);
    p.times_sign(sign).times_half_power(h);
    for (int f = 0; f < 4; ++f) {
      const std::int64_t m = g.uniform(0, 7);
      const int power = static_cast<int>(g.uniform(-2, 2));
      p.times_pochhammer(m, power);
      const TruncatedSeries pm = pochhammer(kQ, m);
      for (int r = 0; r < std::abs(power); ++r) (power > 0 ? num : den) = (power > 0 ? num : den) * pm;
    }
    const Exponent below(g.uniform(-3, 20));
    const TruncatedSeries generic =
        shift(scale(divide(num, den, below - Exponent::half(h)), sign), Exponent::half(h)).capped(below);
    const TruncatedSeries closed = p.evaluate(below);
    EXPECT_EQ(closed.trunc(), generic.on_grid(2).trunc());
    EXPECT_EQ(closed, generic);
  }
  EXPECT_THROW(PochhammerProduct().times_pochhammer(-1), IndexOutOfRange);
}

TEST(PochhammerProduct, DeltaFactor) {
  // Delta_m = (-1)^m q^{-m/2} (1 - q^{m+1}) / (1 - q)
  for (int m = 0; m < 8; ++m) {
    PochhammerProduct p;
    p.times_delta(m);
    TruncatedSeries expected = TruncatedSeries::zero(2);
    for (int j = 0; j <= m; ++j) expected += TruncatedSeries::monomial(-m + 2 * j, (m % 2) ? -1 : 1, 2);
    EXPECT_EQ(p.evaluate(Exponent(m + 3)), expected.capped(Exponent(m + 3)));
  }
}
