#include "qtail/factor_product.hpp"

#include "qtail/errors.hpp"

namespace qtail {

FactorProduct& FactorProduct::times(const TruncatedSeries& p, int power) {
  if (!p.is_exact()) throw PreconditionViolated("factor products take exact polynomials only");
  if (power == 0) return *this;
  if (p.empty()) {
    if (power < 0) throw DivisionByZero("zero factor with negative power");
    zero_ = true;
    return *this;
  }
  const Integer& lead = p.coeffs().front();
  if (power < 0 && lead != 1 && lead != -1) {
    throw DenominatorNotUnit("lowest denominator coefficient is " + lead.get_str());
  }
  const Exponent v = p.valuation();
  shift_ = shift_ + Exponent(v.num() * power, v.den());
  if (sgn(lead) < 0 && (power % 2 != 0)) sign_ = -sign_;
  Normalization n = normalize_tail(p);
  factors_.emplace_back(n.series.coarsened(), power);
  return *this;
}

FactorProduct& FactorProduct::times(const FactorProduct& other) {
  zero_ = zero_ || other.zero_;
  sign_ *= other.sign_;
  shift_ = shift_ + other.shift_;
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

FactorProduct& FactorProduct::times_sign(int sign) {
  if (sign < 0) sign_ = -sign_;
  return *this;
}

FactorProduct& FactorProduct::times_monomial(const Exponent& e) {
  shift_ = shift_ + e;
  return *this;
}

FactorProduct FactorProduct::inverse() const {
  if (zero_) throw DivisionByZero("reciprocal of a zero product");
  FactorProduct r;
  r.sign_ = sign_;
  r.shift_ = Exponent(0) - shift_;
  for (const auto& [f, k] : factors_) {
    const Integer& lead = f.coeffs().front();
    if (lead != 1 && lead != -1) throw DenominatorNotUnit("lowest coefficient is " + lead.get_str());
    r.factors_.emplace_back(f, -k);
  }
  return r;
}

TruncatedSeries FactorProduct::evaluate(const Exponent& below) const {
  int grid = static_cast<int>(shift_.den());
  for (const auto& [f, k] : factors_) grid = std::max(grid, f.grid());
  if (zero_ || !(shift_ < below)) return TruncatedSeries::zero(grid).capped(below);
  const Exponent rel = below - shift_;
  TruncatedSeries num = TruncatedSeries::constant(1, grid).capped(rel);
  TruncatedSeries den = TruncatedSeries::constant(1, grid).capped(rel);
  for (const auto& [f, k] : factors_) {
    if (k > 0) {
      num = multiply(num, pow(f, static_cast<unsigned>(k), rel), rel);
    } else {
      den = multiply(den, pow(f, static_cast<unsigned>(-k), rel), rel);
    }
  }
  TruncatedSeries unit = den.empty() ? num : divide(num, den, rel);
  if (sign_ < 0) unit = -unit;
  return shift(unit, shift_).capped(below);
}

}  // namespace qtail
