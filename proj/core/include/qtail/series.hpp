#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtail {

using Integer = mpz_class;

/// Rational exponent of q with denominator in {1, 2, 4}, kept reduced.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr Exponent(std::int64_t whole) : num_(whole), den_(1) {}  // NOLINT
  Exponent(std::int64_t num, std::int64_t den);

  static Exponent half(std::int64_t h) { return {h, 2}; }
  static Exponent quarter(std::int64_t x) { return {x, 4}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Smallest count of 1/grid steps that is >= this exponent.
  std::int64_t ceil_units(int grid) const;
  std::string str() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend bool operator<(const Exponent& a, const Exponent& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Laurent series in q on the grid q^{1/d}, d in {1,2,4}.
///
/// Coefficient i sits at q^{(offset+i)/d}. Everything strictly below
/// q^{trunc/d} is known exactly; nothing at or above it is stored.
/// An exact Laurent polynomial has trunc == kExact.
class TruncatedSeries {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

  TruncatedSeries() = default;
  TruncatedSeries(int grid, std::int64_t offset, std::vector<Integer> coeffs,
                  std::int64_t trunc = kExact);

  static TruncatedSeries zero(int grid = 1, std::int64_t trunc = kExact);
  static TruncatedSeries constant(const Integer& c, int grid = 1);
  /// c * q^{units/grid}
  static TruncatedSeries monomial(std::int64_t units, const Integer& c = 1, int grid = 1);

  int grid() const { return grid_; }
  std::int64_t offset() const { return offset_; }
  std::int64_t trunc() const { return trunc_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_exact() const { return trunc_ == kExact; }
  /// Zero modulo truncation (or exactly zero).
  bool empty() const { return coeffs_.empty(); }
  /// One past the last stored position, in grid units.
  std::int64_t end() const { return offset_ + static_cast<std::int64_t>(coeffs_.size()); }
  /// Lowest exponent that may be nonzero: offset if nonempty, trunc otherwise.
  std::int64_t effective_valuation() const { return empty() ? trunc_ : offset_; }

  /// Coefficient at q^{units/grid}; throws UnknownCoefficient at or above trunc.
  Integer coeff(std::int64_t units) const;
  Integer coeff_at(const Exponent& e) const;

  Exponent valuation() const;
  std::optional<Exponent> truncation() const;

  /// Same series on a finer or coarser grid; GridError if not representable.
  TruncatedSeries on_grid(int grid) const;
  /// Coarsest grid that represents the stored terms and the truncation.
  TruncatedSeries coarsened() const;
  /// Forget everything at or above q^{e}.
  TruncatedSeries capped(const Exponent& e) const;
  TruncatedSeries capped_units(std::int64_t trunc_units) const;
  /// q -> q^{-1}; exact series only.
  TruncatedSeries reflected() const;

  std::string str() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void canonicalize();

  int grid_ = 1;
  std::int64_t offset_ = 0;
  std::vector<Integer> coeffs_;
  std::int64_t trunc_ = kExact;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries& operator+=(TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Integer& c);

/// Product, additionally forgetting everything at or above q^{cap}.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                         std::optional<Exponent> cap = std::nullopt);
/// Multiply by q^{e}.
TruncatedSeries shift(const TruncatedSeries& a, const Exponent& e);
TruncatedSeries shift_units(const TruncatedSeries& a, std::int64_t units);
TruncatedSeries pow(const TruncatedSeries& a, unsigned k, std::optional<Exponent> cap = std::nullopt);

/// num/den. The lowest coefficient of den must be +1 or -1.
/// With both operands exact and no cap the division must be exact
/// (InexactDivision otherwise).
TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den,
                       std::optional<Exponent> cap = std::nullopt);

struct Normalization {
  TruncatedSeries series;
  int sign = 1;
  Exponent shift;
};

/// Strip sign and lowest monomial so the result starts at q^0 with a positive coefficient.
Normalization normalize_tail(const TruncatedSeries& s);

struct ComparisonReport {
  std::int64_t agreed_terms = 0;
  std::optional<std::int64_t> first_mismatch;
  bool sign_flip = false;
  /// Shift stripped from the first operand minus the one stripped from the second.
  Exponent monomial_shift;
  Exponent shift_a;
  Exponent shift_b;
  std::int64_t window = 0;
  /// first_mismatch counts units of q^{1/grid}.
  int grid = 1;

  bool agrees() const { return !first_mismatch.has_value(); }
};

/// First n coefficients agree after sign and monomial normalization.
ComparisonReport agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, std::int64_t n);

/// Coefficientwise comparison without normalization for all exponents below q^{below}.
ComparisonReport compare_exact(const TruncatedSeries& a, const TruncatedSeries& b,
                               std::int64_t below);

std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(std::string_view text);
/// One "exponent,coefficient" row per stored nonzero term.
std::string to_csv(const TruncatedSeries& s);

}  // namespace qtail
