#include <gtest/gtest.h>

#include "qtail/errors.hpp"
#include "qtail/qfun.hpp"
#include "qtail/theta_fn.hpp"
#include "support.hpp"

using namespace qtail;
using qtail::testing::from_terms;

namespace {

TruncatedSeries q_(std::int64_t e, long c = 1) { return TruncatedSeries::monomial(e, c); }

SignedMonomial qp(std::int64_t e, int sign = 1) { return SignedMonomial::q_power(e, sign); }

// Second sub-sum: sum_{i>=1} a^{i(i-1)/2} b^{i(i+1)/2} for a = s_a q^{ea}, b = s_b q^{eb}
TruncatedSeries second_sum(int sa, std::int64_t ea, int sb, std::int64_t eb, std::int64_t trunc) {
  TruncatedSeries s = TruncatedSeries::zero(1, trunc);
  for (std::int64_t i = 1;; ++i) {
    const std::int64_t pa = i * (i - 1) / 2;
    const std::int64_t pb = i * (i + 1) / 2;
    const std::int64_t e = ea * pa + eb * pb;
    if (e >= trunc) break;
    const long c = ((sa < 0 && pa % 2) ? -1 : 1) * ((sb < 0 && pb % 2) ? -1 : 1);
    s += q_(e, c);
  }
  return s.capped_units(trunc);
}

// The specialization display of f(-q^{2k}, -q).
TruncatedSeries specialization(std::int64_t k, std::int64_t trunc) {
  TruncatedSeries s = TruncatedSeries::zero(1, trunc);
  for (std::int64_t i = 0; k * (i * i + i) + i * (i - 1) / 2 < trunc; ++i) {
    s += q_(k * (i * i + i) + i * (i - 1) / 2, i % 2 ? -1 : 1);
  }
  for (std::int64_t i = 1; k * (i * i - i) + i * (i + 1) / 2 < trunc; ++i) {
    s += q_(k * (i * i - i) + i * (i + 1) / 2, i % 2 ? -1 : 1);
  }
  return s.capped_units(trunc);
}

}  // namespace

TEST(FalseTheta, Examples) {
  EXPECT_EQ(false_theta(qp(3), qp(1), 11), from_terms(1, {{0, 1}, {1, -1}, {3, 1}, {6, -1}, {10, 1}}, 11));
  EXPECT_EQ(false_theta(qp(2), qp(2), 40), TruncatedSeries::constant(1).capped_units(40));
  EXPECT_EQ(false_theta(qp(5), qp(1), 9), from_terms(1, {{0, 1}, {1, -1}, {5, 1}, {8, -1}}, 9));
}

TEST(FalseTheta, TriangularNumbers) {
  const std::int64_t n = 600;
  const TruncatedSeries psi = false_theta(qp(3), qp(1), n);
  for (std::int64_t k = 0; k * (k + 1) / 2 < n; ++k) {
    EXPECT_EQ(psi.coeff(k * (k + 1) / 2), (k % 2) ? -1 : 1);
  }
  std::int64_t nonzero = 0;
  for (const auto& c : psi.coeffs()) nonzero += sgn(c) != 0;
  std::int64_t triangular = 0;
  while (triangular * (triangular + 1) / 2 < n) ++triangular;
  EXPECT_EQ(nonzero, triangular);
}

TEST(RamanujanTheta, Examples) {
  EXPECT_EQ(ramanujan_theta(qp(2, -1), qp(1, -1), 40), euler_function(40));
  EXPECT_EQ(ramanujan_theta(qp(4, -1), qp(1, -1), 5), from_terms(1, {{0, 1}, {1, -1}, {4, -1}}, 5));
  EXPECT_TRUE(ramanujan_theta(qp(1), qp(1), 0).empty());
  EXPECT_TRUE(false_theta(qp(1), qp(1), -3).empty());
}

TEST(RamanujanTheta, NonConvergent) {
  EXPECT_THROW(ramanujan_theta(qp(0), qp(0), 10), NonConvergent);
  EXPECT_THROW(false_theta(qp(1), qp(-1), 10), NonConvergent);
}

TEST(ThetaProperty, DifferByTwiceSecondSum) {
  for (std::int64_t ea = 1; ea <= 5; ++ea) {
    for (std::int64_t eb = 1; eb <= 4; ++eb) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          const std::int64_t n = 120;
          const TruncatedSeries f = ramanujan_theta(qp(ea, sa), qp(eb, sb), n);
          const TruncatedSeries psi = false_theta(qp(ea, sa), qp(eb, sb), n);
          EXPECT_EQ(f - psi, scale(second_sum(sa, ea, sb, eb, n), 2));
          EXPECT_EQ(f.coeff(0), psi.coeff(0));
        }
      }
    }
  }
}

TEST(ThetaProperty, SpecializationDisplay) {
  for (std::int64_t k = 1; k <= 5; ++k) {
    for (std::int64_t n : {1, 50, 500}) {
      EXPECT_EQ(ramanujan_theta(qp(2 * k, -1), qp(1, -1), n), specialization(k, n)) << k << " " << n;
    }
  }
}

TEST(ThetaProperty, HalfIntegerArguments) {
  // Psi(q^{3/2}, q^{1/2}) is Psi(q^3, q) with q -> q^{1/2}
  const TruncatedSeries half = false_theta({1, 3}, {1, 1}, 20);
  const TruncatedSeries whole = false_theta(qp(3), qp(1), 40);
  for (std::int64_t u = 0; u < 40; ++u) EXPECT_EQ(half.on_grid(2).coeff(u), whole.coeff(u));
}
