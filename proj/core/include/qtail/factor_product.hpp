#pragma once

#include <utility>
#include <vector>

#include "qtail/series.hpp"

namespace qtail {

/// Lazy product  ±q^{e} * prod_i p_i^{k_i}  of exact Laurent polynomials with
/// integer powers. Every factor with a negative power needs a unit lowest
/// coefficient. Evaluation works at relative precision, so the caller only
/// names the absolute exponent below which the value must be known.
class FactorProduct {
 public:
  FactorProduct& times(const TruncatedSeries& exact_poly, int power = 1);
  FactorProduct& times(const FactorProduct& other);
  FactorProduct& times_sign(int sign);
  FactorProduct& times_monomial(const Exponent& e);
  /// Reciprocal; every factor needs a unit lowest coefficient.
  FactorProduct inverse() const;

  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  /// Exponent of the lowest term (meaningless when is_zero()).
  const Exponent& valuation() const { return shift_; }

  TruncatedSeries evaluate(const Exponent& below) const;

 private:
  int sign_ = 1;
  bool zero_ = false;
  Exponent shift_;
  std::vector<std::pair<TruncatedSeries, int>> factors_;
};

}  // namespace qtail
