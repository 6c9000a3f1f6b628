#include "qtail/qfun.hpp"

#include <mutex>

#include "qtail/errors.hpp"

namespace qtail {

void mul_one_minus_qj(std::vector<Integer>& c, std::int64_t j) {
  const auto n = static_cast<std::int64_t>(c.size());
  for (std::int64_t x = n - 1; x >= j; --x) c[static_cast<std::size_t>(x)] -= c[static_cast<std::size_t>(x - j)];
}

void div_one_minus_qj(std::vector<Integer>& c, std::int64_t j) {
  const auto n = static_cast<std::int64_t>(c.size());
  for (std::int64_t x = j; x < n; ++x) c[static_cast<std::size_t>(x)] += c[static_cast<std::size_t>(x - j)];
}

namespace {

// 1 - sign * q^{h/2} on grid 2
TruncatedSeries binomial_factor(int sign, std::int64_t h) {
  if (h == 0) return TruncatedSeries::constant(1 - sign, 2);
  TruncatedSeries one = TruncatedSeries::constant(1, 2);
  return one + TruncatedSeries::monomial(h, -sign, 2);
}

}  // namespace

TruncatedSeries pochhammer(SignedMonomial a, std::int64_t n) {
  if (n < 0) throw PreconditionViolated("pochhammer length must be nonnegative");
  TruncatedSeries r = TruncatedSeries::constant(1, 2);
  for (std::int64_t j = 0; j < n; ++j) r = r * binomial_factor(a.sign, a.halfexp + 2 * j);
  return r.coarsened();
}

TruncatedSeries pochhammer(SignedMonomial a, InfiniteTag, std::int64_t trunc) {
  // Factors with nonpositive exponent form an exact polynomial head.
  TruncatedSeries head = TruncatedSeries::constant(1, 2);
  std::int64_t j = 0;
  for (; a.halfexp + 2 * j <= 0; ++j) {
    const std::int64_t h = a.halfexp + 2 * j;
    if (h == 0 && a.sign > 0) throw DivergentInfiniteProduct("(a;q)_oo has a vanishing factor 1 - q^0");
    head = head * binomial_factor(a.sign, h);
  }
  const std::int64_t limit = 2 * trunc;
  if (head.empty() || head.offset() >= limit) return TruncatedSeries::zero(2, limit).coarsened();
  std::vector<Integer> c(static_cast<std::size_t>(limit - head.offset()));
  std::copy(head.coeffs().begin(),
            head.coeffs().begin() + static_cast<std::ptrdiff_t>(std::min(head.coeffs().size(), c.size())),
            c.begin());
  const auto len = static_cast<std::int64_t>(c.size());
  for (; a.halfexp + 2 * j < len; ++j) {
    const std::int64_t h = a.halfexp + 2 * j;
    for (std::int64_t x = len - 1; x >= h; --x) {
      if (a.sign > 0) {
        c[static_cast<std::size_t>(x)] -= c[static_cast<std::size_t>(x - h)];
      } else {
        c[static_cast<std::size_t>(x)] += c[static_cast<std::size_t>(x - h)];
      }
    }
  }
  return TruncatedSeries(2, head.offset(), std::move(c), limit).coarsened();
}

TruncatedSeries euler_function(std::int64_t trunc) {
  if (trunc <= 0) return TruncatedSeries::zero(1, trunc);
  std::vector<Integer> c(static_cast<std::size_t>(trunc));
  c[0] = 1;
  for (std::int64_t j = 1; j < trunc; ++j) mul_one_minus_qj(c, j);
  return {1, 0, std::move(c), trunc};
}

TruncatedSeries quantum_int(std::int64_t m) {
  if (m < 0) throw PreconditionViolated("quantum integer index must be nonnegative");
  if (m == 0) return TruncatedSeries::zero(2);
  std::vector<Integer> c(static_cast<std::size_t>(2 * m - 1));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  return {2, -(m - 1), std::move(c)};
}

TruncatedSeries quantum_factorial(std::int64_t m) {
  if (m < 0) throw PreconditionViolated("quantum factorial index must be nonnegative");
  static std::mutex mu;
  static std::vector<TruncatedSeries> cache{TruncatedSeries::constant(1, 2)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<std::int64_t>(cache.size()) <= m) {
    const auto next = static_cast<std::int64_t>(cache.size());
    cache.push_back(cache.back() * quantum_int(next));
  }
  return cache[static_cast<std::size_t>(m)];
}

TruncatedSeries gauss_binom(std::int64_t l, std::int64_t i) {
  if (l < 0 || i < 0 || i > l) return TruncatedSeries::zero(1);
  const SignedMonomial q{1, 2};
  return divide(pochhammer(q, l), pochhammer(q, i) * pochhammer(q, l - i));
}

// ------------------------------------------------------- PochhammerProduct

PochhammerProduct& PochhammerProduct::times_sign(int sign) {
  if (sign < 0) sign_ = -sign_;
  return *this;
}

PochhammerProduct& PochhammerProduct::times_half_power(std::int64_t halfexp) {
  halfexp_ += halfexp;
  return *this;
}

PochhammerProduct& PochhammerProduct::times_pochhammer(std::int64_t m, int power) {
  if (m < 0) throw IndexOutOfRange("(q;q)_m with negative m = " + std::to_string(m));
  for (std::int64_t j = 1; j <= m; ++j) {
    auto& p = powers_[j];
    p += power;
    if (p == 0) powers_.erase(j);
  }
  return *this;
}

PochhammerProduct& PochhammerProduct::times_one_minus_q(int power) {
  auto& p = powers_[1];
  p += power;
  if (p == 0) powers_.erase(1);
  return *this;
}

PochhammerProduct& PochhammerProduct::times_delta(std::int64_t m, int power) {
  if (m < 0) throw IndexOutOfRange("Delta_m with negative m");
  if ((m * power) % 2 != 0) sign_ = -sign_;
  halfexp_ -= m * power;
  auto& p = powers_[m + 1];
  p += power;
  if (p == 0) powers_.erase(m + 1);
  return times_one_minus_q(-power);
}

PochhammerProduct& PochhammerProduct::times(const PochhammerProduct& other) {
  sign_ *= other.sign_;
  halfexp_ += other.halfexp_;
  for (const auto& [j, p] : other.powers_) {
    auto& mine = powers_[j];
    mine += p;
    if (mine == 0) powers_.erase(j);
  }
  return *this;
}

TruncatedSeries PochhammerProduct::evaluate(const Exponent& below) const {
  const std::int64_t trunc = below.ceil_units(2);
  const std::int64_t len = (below - valuation()).ceil_units(1);
  if (len <= 0) return TruncatedSeries::zero(2, trunc);
  std::vector<Integer> c(static_cast<std::size_t>(len));
  c[0] = sign_;
  for (const auto& [j, p] : powers_) {
    if (j >= len) break;
    for (std::int64_t r = 0; r < (p < 0 ? -p : p); ++r) {
      if (p > 0) {
        mul_one_minus_qj(c, j);
      } else {
        div_one_minus_qj(c, j);
      }
    }
  }
  std::vector<Integer> spread(static_cast<std::size_t>(2 * len - 1));
  for (std::int64_t x = 0; x < len; ++x) spread[static_cast<std::size_t>(2 * x)] = std::move(c[static_cast<std::size_t>(x)]);
  return {2, halfexp_, std::move(spread), trunc};
}

}  // namespace qtail
