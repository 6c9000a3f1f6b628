#pragma once

#include <cstdint>
#include <map>

#include "qtail/series.hpp"

namespace qtail {

/// sign * q^{halfexp/2}
struct SignedMonomial {
  int sign = 1;
  std::int64_t halfexp = 0;

  static SignedMonomial q_power(std::int64_t e, int sign = 1) { return {sign, 2 * e}; }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

struct InfiniteTag {};
inline constexpr InfiniteTag kInfinite{};

/// (a;q)_n, exact.
TruncatedSeries pochhammer(SignedMonomial a, std::int64_t n);
/// (a;q)_oo known below q^{trunc}.
TruncatedSeries pochhammer(SignedMonomial a, InfiniteTag, std::int64_t trunc);
/// (q;q)_oo known below q^{trunc}.
TruncatedSeries euler_function(std::int64_t trunc);

/// [m] = (q^{m/2} - q^{-m/2}) / (q^{1/2} - q^{-1/2}), grid 2.
TruncatedSeries quantum_int(std::int64_t m);
/// [m]! = [1][2]...[m], grid 2.
TruncatedSeries quantum_factorial(std::int64_t m);
/// Gaussian binomial in q; zero outside 0 <= i <= l.
TruncatedSeries gauss_binom(std::int64_t l, std::int64_t i);

/// In-place kernels on a power series c[0..N) in q.
void mul_one_minus_qj(std::vector<Integer>& c, std::int64_t j);
void div_one_minus_qj(std::vector<Integer>& c, std::int64_t j);

/// ±q^{h/2} * prod_j (1 - q^j)^{e_j}. Evaluates in O(N * sum |e_j|).
class PochhammerProduct {
 public:
  PochhammerProduct& times_sign(int sign);
  PochhammerProduct& times_half_power(std::int64_t halfexp);
  /// (q;q)_m^{power}; m >= 0.
  PochhammerProduct& times_pochhammer(std::int64_t m, int power = 1);
  PochhammerProduct& times_one_minus_q(int power = 1);
  /// Delta_m^{power}, Delta_m = (-1)^m q^{-m/2} (1 - q^{m+1}) / (1 - q).
  PochhammerProduct& times_delta(std::int64_t m, int power = 1);
  PochhammerProduct& times(const PochhammerProduct& other);

  int sign() const { return sign_; }
  std::int64_t half_exponent() const { return halfexp_; }
  Exponent valuation() const { return Exponent::half(halfexp_); }
  const std::map<std::int64_t, std::int64_t>& factor_powers() const { return powers_; }

  /// Value known below q^{below}, on grid 2.
  TruncatedSeries evaluate(const Exponent& below) const;

 private:
  int sign_ = 1;
  std::int64_t halfexp_ = 0;
  std::map<std::int64_t, std::int64_t> powers_;
};

}  // namespace qtail
