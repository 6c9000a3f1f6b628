#include "qtail/skein.hpp"

#include <algorithm>
#include <string>

#include "qtail/errors.hpp"

namespace qtail {

namespace {

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

FactorProduct zero_product() {
  FactorProduct z;
  z.times(TruncatedSeries::zero(2));
  return z;
}

void check_monotone(std::int64_t n, std::span<const std::int64_t> idx) {
  if (idx.empty()) throw NonMonotoneIndices("at least one index required");
  std::int64_t prev = n;
  for (std::int64_t i : idx) {
    if (i < 0 || i > prev) throw NonMonotoneIndices("indices must satisfy n >= i_1 >= ... >= i_k >= 0");
    prev = i;
  }
}

}  // namespace

bool AdmissibleTriple::admissible() const {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return c <= a + b && c >= (a > b ? a - b : b - a);
}

TruncatedSeries delta(std::int64_t n) {
  if (n < 0) throw PreconditionViolated("Delta_n needs n >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(2 * n + 1));
  const int s = parity_sign(n);
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = s;
  return {2, -n, std::move(c)};
}

namespace terms {

FactorProduct theta(const AdmissibleTriple& t) {
  if (!t.admissible()) return zero_product();
  const std::int64_t x = t.x();
  const std::int64_t y = t.y();
  const std::int64_t z = t.z();
  FactorProduct p;
  p.times_sign(parity_sign(x + y + z));
  p.times(quantum_factorial(x + y + z + 1));
  p.times(quantum_factorial(x));
  p.times(quantum_factorial(y));
  p.times(quantum_factorial(z));
  p.times(quantum_factorial(x + y), -1);
  p.times(quantum_factorial(x + z), -1);
  p.times(quantum_factorial(y + z), -1);
  return p;
}

FactorProduct bubble(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t i) {
  if (m < 0 || n < 0 || l < 0 || k < l) {
    throw PreconditionViolated("bubble coefficient needs m, n >= 0 and k >= l >= 0");
  }
  if (i < 0 || i > std::min({m, n, l})) return zero_product();
  FactorProduct p;
  const std::int64_t e = i * (i - l);
  p.times_sign(parity_sign(e));
  p.times_monomial(Exponent::half(e));
  for (std::int64_t j = 0; j < l - i; ++j) {
    p.times(delta(k - j - 1));
    p.times(delta(m + n + k - i - j));
  }
  for (std::int64_t s = 0; s < i; ++s) {
    p.times(delta(n - s - 1));
    p.times(delta(m - s - 1));
  }
  p.times(gauss_binom(l, i));
  for (std::int64_t t = 0; t < l; ++t) {
    p.times(delta(n + k - t - 1), -1);
    p.times(delta(m + k - t - 1), -1);
  }
  return p;
}

namespace {

FactorProduct ep_definitional(std::int64_t n, std::span<const std::int64_t> idx, bool last_ratio) {
  check_monotone(n, idx);
  FactorProduct p;
  const auto k = idx.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::int64_t top = (j == 0) ? n : idx[j - 1];
    p.times(bubble(n, top, n, n, idx[j]));
    if (j + 1 < k || last_ratio) {
      p.times(delta(2 * n));
      p.times(delta(n + idx[j]), -1);
    }
  }
  return p;
}

PochhammerProduct ep_closed(std::int64_t n, std::span<const std::int64_t> idx, bool last_ratio) {
  check_monotone(n, idx);
  const auto k = static_cast<std::int64_t>(idx.size());
  std::int64_t sum = 0;
  std::int64_t half = -k * n;
  for (std::int64_t i : idx) {
    sum += i;
    half += 2 * i * i + i;
  }
  const std::int64_t first = idx.front();
  const std::int64_t last = idx.back();
  PochhammerProduct p;
  p.times_sign(parity_sign(k * n + sum));
  p.times_half_power(half);
  p.times_pochhammer(n, static_cast<int>(4 * k + 2));
  p.times_pochhammer(3 * n - first + 1);
  p.times_pochhammer(2 * n, static_cast<int>(-(k + 1)));
  p.times_pochhammer(2 * n + 1, -1);
  p.times_pochhammer(n - first, -1);
  p.times_pochhammer(n - last, -2);
  p.times_pochhammer(last, -2);
  for (std::int64_t j = 1; j < k; ++j) {
    const std::int64_t a = idx[static_cast<std::size_t>(j - 1)];
    const std::int64_t b = idx[static_cast<std::size_t>(j)];
    p.times_pochhammer(a - b + 2 * n + 1);
    p.times_pochhammer(a - b, -1);
    p.times_pochhammer(n + a, -1);
    p.times_pochhammer(n - a, -2);
    p.times_pochhammer(n + a + 1, -1);
  }
  const std::int64_t ratios = last_ratio ? k : k - 1;
  for (std::int64_t j = 0; j < ratios; ++j) {
    p.times_delta(2 * n);
    p.times_delta(n + idx[static_cast<std::size_t>(j)], -1);
  }
  return p;
}

}  // namespace

FactorProduct coeff_E_definitional(std::int64_t n, std::span<const std::int64_t> idx) {
  return ep_definitional(n, idx, true);
}

FactorProduct coeff_P_definitional(std::int64_t n, std::span<const std::int64_t> idx) {
  return ep_definitional(n, idx, false);
}

FactorProduct gamma_assembled(std::int64_t n, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0 || i > n || j > n) throw IndexOutOfRange("Gamma needs 0 <= i, j <= n");
  FactorProduct p;
  p.times(bubble(i, n, n, n - j, 0));
  p.times(bubble(j, n, n, n - i, 0));
  p.times(bubble(j, i, n, n, 0));
  p.times(delta(i + j));
  return p;
}

PochhammerProduct theta_nn2i(std::int64_t n, std::int64_t i) {
  if (i < 0 || i > n) throw IndexOutOfRange("theta_nn2i needs 0 <= i <= n");
  PochhammerProduct p;
  p.times_sign(parity_sign(i + n));
  p.times_half_power(-(n + i));
  p.times_pochhammer(i, 2);
  p.times_pochhammer(n - i);
  p.times_pochhammer(1 + i + n);
  p.times_one_minus_q(-1);
  p.times_pochhammer(2 * i, -1);
  p.times_pochhammer(n, -2);
  return p;
}

PochhammerProduct bubble_nann(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (b < 0 || b > std::min(a, n)) throw IndexOutOfRange("bubble_nann needs 0 <= b <= min(a, n)");
  PochhammerProduct p;
  p.times_sign(parity_sign(n + b));
  p.times_half_power(b + 2 * b * b - n);
  p.times_pochhammer(a, 2);
  p.times_pochhammer(n, 4);
  p.times_pochhammer(1 + a - b + 2 * n);
  p.times_pochhammer(a - b, -1);
  p.times_pochhammer(b, -2);
  p.times_pochhammer(2 * n, -1);
  p.times_pochhammer(a + n, -1);
  p.times_pochhammer(1 + a + n, -1);
  p.times_pochhammer(n - b, -2);
  return p;
}

PochhammerProduct bubble_sym(std::int64_t n, std::int64_t a, std::int64_t i) {
  if (i < 0 || a < 0 || a + i > n) throw IndexOutOfRange("bubble_sym needs i, a >= 0 and a + i <= n");
  PochhammerProduct p;
  p.times_sign(parity_sign(i + n));
  p.times_half_power(i + 2 * a * i + 2 * i * i - n);
  p.times_pochhammer(n, 3);
  p.times_pochhammer(n - a, 2);
  p.times_pochhammer(a + n);
  p.times_pochhammer(1 - a - i + 3 * n);
  p.times_pochhammer(i, -1);
  p.times_pochhammer(a + i, -1);
  p.times_pochhammer(2 * n, -2);
  p.times_pochhammer(n - i, -1);
  p.times_pochhammer(n - a - i, -2);
  p.times_pochhammer(1 - a + 2 * n, -1);
  return p;
}

PochhammerProduct coeff_E_closed(std::int64_t n, std::span<const std::int64_t> idx) {
  return ep_closed(n, idx, true);
}

PochhammerProduct coeff_P_closed(std::int64_t n, std::span<const std::int64_t> idx) {
  return ep_closed(n, idx, false);
}

PochhammerProduct gamma_closed(std::int64_t n, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0 || i > n || j > n) throw IndexOutOfRange("Gamma needs 0 <= i, j <= n");
  PochhammerProduct p;
  p.times_sign(parity_sign(n));
  p.times_half_power(-3 * n);
  p.times_pochhammer(i + j);
  p.times_pochhammer(n, 3);
  p.times_pochhammer(1 + i + 2 * n);
  p.times_pochhammer(1 + j + 2 * n);
  p.times_pochhammer(2 * n, -2);
  p.times_pochhammer(i + n, -1);
  p.times_pochhammer(j + n, -1);
  p.times_pochhammer(1 + i + j + n, -1);
  p.times_one_minus_q(-1);
  return p;
}

}  // namespace terms

TruncatedSeries theta_coeff(const AdmissibleTriple& t, const Exponent& below) {
  return terms::theta(t).evaluate(below);
}

TruncatedSeries theta_nn2i(std::int64_t n, std::int64_t i, const Exponent& below) {
  return terms::theta_nn2i(n, i).evaluate(below);
}

TruncatedSeries bubble_general(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t i,
                               const Exponent& below) {
  return terms::bubble(m, n, k, l, i).evaluate(below);
}

TruncatedSeries bubble_nann(std::int64_t n, std::int64_t a, std::int64_t b, const Exponent& below) {
  return terms::bubble_nann(n, a, b).evaluate(below);
}

TruncatedSeries bubble_sym(std::int64_t n, std::int64_t a, std::int64_t i, const Exponent& below) {
  return terms::bubble_sym(n, a, i).evaluate(below);
}

TruncatedSeries coeff_E(std::int64_t n, std::span<const std::int64_t> idx, CoeffMethod method,
                        const Exponent& below) {
  if (method == CoeffMethod::Closed) return terms::coeff_E_closed(n, idx).evaluate(below);
  return terms::coeff_E_definitional(n, idx).evaluate(below);
}

TruncatedSeries coeff_P(std::int64_t n, std::span<const std::int64_t> idx, CoeffMethod method,
                        const Exponent& below) {
  if (method == CoeffMethod::Closed) return terms::coeff_P_closed(n, idx).evaluate(below);
  return terms::coeff_P_definitional(n, idx).evaluate(below);
}

TruncatedSeries gamma_coeff(std::int64_t n, std::int64_t i, std::int64_t j, GammaMethod method,
                            const Exponent& below) {
  if (method == GammaMethod::Closed) return terms::gamma_closed(n, i, j).evaluate(below);
  return terms::gamma_assembled(n, i, j).evaluate(below);
}

TruncatedSeries c_coeff(std::int64_t n, std::int64_t i, std::int64_t k, const Exponent& below) {
  if (i < 0 || i > n) throw IndexOutOfRange("C_{n,i} needs 0 <= i <= n");
  if (k < 1) throw PreconditionViolated("C_{n,i} needs k >= 1");
  const FactorProduct big = terms::theta({2 * n, 2 * n, 2 * i});
  const FactorProduct small_inv = terms::theta({n, n, 2 * i}).inverse();
  FactorProduct p;
  for (std::int64_t r = 0; r < k; ++r) p.times(big);
  for (std::int64_t r = 0; r <= k; ++r) p.times(small_inv);
  p.times(delta(2 * i));
  return p.evaluate(below);
}

}  // namespace qtail
