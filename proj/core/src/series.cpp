#include "qtail/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qtail/errors.hpp"

namespace qtail {

namespace {

constexpr std::int64_t kExact = TruncatedSeries::kExact;

void check_grid(int grid) {
  if (grid != 1 && grid != 2 && grid != 4) {
    throw GridError("grid must be 1, 2 or 4, got " + std::to_string(grid));
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t add_trunc(std::int64_t t, std::int64_t delta) { return t == kExact ? kExact : t + delta; }

int common_grid(const TruncatedSeries& a, const TruncatedSeries& b) { return std::max(a.grid(), b.grid()); }

}  // namespace

// ---------------------------------------------------------------- Exponent

Exponent::Exponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw GridError("exponent denominator must be positive");
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (den_ != 1 && den_ != 2 && den_ != 4) {
    throw GridError("exponent denominator must divide 4");
  }
}

std::int64_t Exponent::ceil_units(int grid) const { return ceil_div(num_ * grid, den_); }

std::string Exponent::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  return {a.num_ * 4 / a.den_ + b.num_ * 4 / b.den_, 4};
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  return {a.num_ * 4 / a.den_ - b.num_ * 4 / b.den_, 4};
}

bool operator<(const Exponent& a, const Exponent& b) {
  return a.num_ * 4 / a.den_ < b.num_ * 4 / b.den_;
}

// --------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(int grid, std::int64_t offset, std::vector<Integer> coeffs,
                                 std::int64_t trunc)
    : grid_(grid), offset_(offset), coeffs_(std::move(coeffs)), trunc_(trunc) {
  check_grid(grid_);
  canonicalize();
}

TruncatedSeries TruncatedSeries::zero(int grid, std::int64_t trunc) { return {grid, 0, {}, trunc}; }

TruncatedSeries TruncatedSeries::constant(const Integer& c, int grid) { return {grid, 0, {c}}; }

TruncatedSeries TruncatedSeries::monomial(std::int64_t units, const Integer& c, int grid) {
  return {grid, units, {c}};
}

void TruncatedSeries::canonicalize() {
  if (trunc_ != kExact) {
    if (offset_ >= trunc_) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > trunc_ - offset_) {
      coeffs_.resize(static_cast<std::size_t>(trunc_ - offset_));
    }
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<std::int64_t>(lead);
  }
  while (sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer TruncatedSeries::coeff(std::int64_t units) const {
  if (units >= trunc_) {
    throw UnknownCoefficient("coefficient at or above the truncation is unknown");
  }
  if (units < offset_ || units >= end()) return 0;
  return coeffs_[static_cast<std::size_t>(units - offset_)];
}

Integer TruncatedSeries::coeff_at(const Exponent& e) const {
  std::int64_t scaled = e.num() * grid_;
  if (scaled % e.den() != 0) {
    Exponent t = truncation().value_or(Exponent(std::numeric_limits<std::int32_t>::max()));
    if (!(e < t)) throw UnknownCoefficient("coefficient at or above the truncation is unknown");
    return 0;
  }
  return coeff(scaled / e.den());
}

Exponent TruncatedSeries::valuation() const {
  if (empty()) throw ZeroSeries("valuation of a series that is zero modulo truncation");
  return {offset_, grid_};
}

std::optional<Exponent> TruncatedSeries::truncation() const {
  if (is_exact()) return std::nullopt;
  return Exponent(trunc_, grid_);
}

TruncatedSeries TruncatedSeries::on_grid(int grid) const {
  check_grid(grid);
  if (grid == grid_) return *this;
  if (grid % grid_ == 0) {
    const std::int64_t f = grid / grid_;
    std::vector<Integer> out;
    if (!coeffs_.empty()) {
      out.resize((coeffs_.size() - 1) * static_cast<std::size_t>(f) + 1);
      for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(f)] = coeffs_[i];
    }
    return {grid, offset_ * f, std::move(out), is_exact() ? kExact : trunc_ * f};
  }
  const std::int64_t f = grid_ / grid;
  if (!coeffs_.empty() && offset_ % f != 0) throw GridError("series not representable on coarser grid");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i % static_cast<std::size_t>(f) == 0) {
      out.push_back(coeffs_[i]);
    } else if (sgn(coeffs_[i]) != 0) {
      throw GridError("series not representable on coarser grid");
    }
  }
  return {grid, coeffs_.empty() ? 0 : offset_ / f, std::move(out), is_exact() ? kExact : ceil_div(trunc_, f)};
}

TruncatedSeries TruncatedSeries::coarsened() const {
  for (int g : {1, 2}) {
    if (g >= grid_) break;
    try {
      return on_grid(g);
    } catch (const GridError&) {
    }
  }
  return *this;
}

TruncatedSeries TruncatedSeries::capped(const Exponent& e) const {
  return capped_units(e.ceil_units(grid_));
}

TruncatedSeries TruncatedSeries::capped_units(std::int64_t trunc_units) const {
  if (trunc_units >= trunc_) return *this;
  return {grid_, offset_, coeffs_, trunc_units};
}

TruncatedSeries TruncatedSeries::reflected() const {
  if (!is_exact()) throw PreconditionViolated("only exact series can be reflected");
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return {grid_, -(end() - 1), std::move(out)};
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Exponent e(offset_ + static_cast<std::int64_t>(i), grid_);
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (e.num() == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << "q";
    if (!(e == Exponent(1))) {
      os << "^" << (e.is_integer() && e.num() > 0 ? e.str() : "(" + e.str() + ")");
    }
  }
  if (first) os << "0";
  if (!is_exact()) {
    Exponent t(trunc_, grid_);
    os << " + O(q^" << (t.is_integer() && t.num() >= 0 ? t.str() : "(" + t.str() + ")") << ")";
  }
  return os.str();
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int g = common_grid(a, b);
  TruncatedSeries x = a.on_grid(g);
  TruncatedSeries y = b.on_grid(g);
  return x.trunc() == y.trunc() && x.offset() == y.offset() && x.coeffs() == y.coeffs();
}

// --------------------------------------------------------------- arithmetic

TruncatedSeries operator+(const TruncatedSeries& a0, const TruncatedSeries& b0) {
  const int g = common_grid(a0, b0);
  TruncatedSeries a = a0.on_grid(g);
  TruncatedSeries b = b0.on_grid(g);
  const std::int64_t t = std::min(a.trunc(), b.trunc());
  if (a.empty()) return b.capped_units(t);
  if (b.empty()) return a.capped_units(t);
  std::int64_t lo = std::min(a.offset(), b.offset());
  std::int64_t hi = std::max(a.end(), b.end());
  if (t != TruncatedSeries::kExact) hi = std::min(hi, t);
  if (hi <= lo) return TruncatedSeries::zero(g, t);
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo));
  for (const TruncatedSeries* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->coeffs().size(); ++i) {
      std::int64_t pos = s->offset() + static_cast<std::int64_t>(i) - lo;
      if (pos >= hi - lo) break;
      out[static_cast<std::size_t>(pos)] += s->coeffs()[i];
    }
  }
  return {g, lo, std::move(out), t};
}

TruncatedSeries& operator+=(TruncatedSeries& a, const TruncatedSeries& b) {
  a = a + b;
  return a;
}

TruncatedSeries operator-(const TruncatedSeries& a) { return scale(a, -1); }

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries scale(const TruncatedSeries& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs());
  for (auto& x : out) x *= c;
  return {a.grid(), a.offset(), std::move(out), a.trunc()};
}

TruncatedSeries multiply(const TruncatedSeries& a0, const TruncatedSeries& b0, std::optional<Exponent> cap) {
  const int g = common_grid(a0, b0);
  if ((a0.empty() && a0.is_exact()) || (b0.empty() && b0.is_exact())) {
    TruncatedSeries z = TruncatedSeries::zero(g);
    return cap ? z.capped(*cap) : z;
  }
  TruncatedSeries a = a0.on_grid(g);
  TruncatedSeries b = b0.on_grid(g);
  std::int64_t t = std::min(add_trunc(a.trunc(), b.effective_valuation()),
                            add_trunc(b.trunc(), a.effective_valuation()));
  if (cap) t = std::min(t, cap->ceil_units(g));
  if (a.empty() || b.empty()) return TruncatedSeries::zero(g, t);
  const std::int64_t off = a.offset() + b.offset();
  std::int64_t len = static_cast<std::int64_t>(a.coeffs().size() + b.coeffs().size() - 1);
  if (t != TruncatedSeries::kExact) len = std::min(len, t - off);
  if (len <= 0) return TruncatedSeries::zero(g, t);
  std::vector<Integer> out(static_cast<std::size_t>(len));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const std::int64_t nb = static_cast<std::int64_t>(bc.size());
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(ac.size()) && i < len; ++i) {
    if (sgn(ac[static_cast<std::size_t>(i)]) == 0) continue;
    const mpz_srcptr x = ac[static_cast<std::size_t>(i)].get_mpz_t();
    const std::int64_t jmax = std::min(nb, len - i);
    for (std::int64_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[static_cast<std::size_t>(i + j)].get_mpz_t(), x, bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return {g, off, std::move(out), t};
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b); }

TruncatedSeries shift_units(const TruncatedSeries& a, std::int64_t units) {
  return {a.grid(), a.offset() + units, a.coeffs(), add_trunc(a.trunc(), units)};
}

TruncatedSeries shift(const TruncatedSeries& a, const Exponent& e) {
  const int g = std::max<int>(a.grid(), static_cast<int>(e.den()));
  return shift_units(a.on_grid(g), e.num() * g / e.den());
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned k, std::optional<Exponent> cap) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.grid());
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base, cap);
    k >>= 1U;
    if (k > 0) base = multiply(base, base, cap);
  }
  return cap ? result.capped(*cap) : result;
}

TruncatedSeries divide(const TruncatedSeries& num0, const TruncatedSeries& den0, std::optional<Exponent> cap) {
  const int g = common_grid(num0, den0);
  if (den0.empty()) throw DivisionByZero("denominator is zero modulo its truncation");
  const Integer& lead = den0.coeffs().front();
  if (lead != 1 && lead != -1) {
    throw DenominatorNotUnit("lowest denominator coefficient is " + lead.get_str());
  }
  const int u0 = sgn(lead);
  TruncatedSeries num = num0.on_grid(g);
  TruncatedSeries den = den0.on_grid(g);
  std::int64_t t = kExact;
  if (!num.is_exact()) t = num.trunc() - den.offset();
  if (!den.is_exact()) t = std::min(t, den.trunc() - 2 * den.offset() + num.effective_valuation());
  if (cap) t = std::min(t, cap->ceil_units(g));
  if (num.empty()) return TruncatedSeries::zero(g, t);

  const auto& dc = den.coeffs();
  const std::int64_t nd = static_cast<std::int64_t>(dc.size());
  const std::int64_t off = num.offset() - den.offset();
  const bool exact = (t == kExact);
  std::int64_t len;
  if (exact) {
    len = static_cast<std::int64_t>(num.coeffs().size()) - nd + 1;
    if (len <= 0) throw InexactDivision("denominator degree exceeds numerator degree");
  } else {
    len = t - off;
    if (len <= 0) return TruncatedSeries::zero(g, t);
  }
  std::vector<Integer> r(num.coeffs());
  const std::int64_t rlen = exact ? static_cast<std::int64_t>(r.size()) : len;
  r.resize(static_cast<std::size_t>(rlen));
  std::vector<Integer> quo(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) {
    Integer& c = quo[static_cast<std::size_t>(i)];
    c = r[static_cast<std::size_t>(i)];
    if (u0 < 0) c = -c;
    if (sgn(c) == 0) continue;
    const std::int64_t jmax = std::min(nd, rlen - i);
    for (std::int64_t j = 1; j < jmax; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), c.get_mpz_t(), dc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  if (exact) {
    for (std::int64_t i = len; i < rlen; ++i) {
      if (sgn(r[static_cast<std::size_t>(i)]) != 0) throw InexactDivision("nonzero remainder");
    }
  }
  return {g, off, std::move(quo), t};
}

// ------------------------------------------------------------- comparisons

Normalization normalize_tail(const TruncatedSeries& s) {
  if (s.empty()) throw ZeroSeries("cannot normalize a series that is zero modulo truncation");
  Normalization n;
  n.sign = sgn(s.coeffs().front());
  n.shift = Exponent(s.offset(), s.grid());
  TruncatedSeries moved = shift_units(s, -s.offset());
  n.series = n.sign < 0 ? -moved : moved;
  return n;
}

namespace {

TruncatedSeries integer_grid(const TruncatedSeries& s) {
  TruncatedSeries c = s.coarsened();
  if (c.grid() != 1) {
    throw NonIntegerGridAfterNormalization("normalized series has fractional exponents: " + s.str());
  }
  return c;
}

}  // namespace

ComparisonReport agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, std::int64_t n) {
  Normalization na = normalize_tail(a);
  Normalization nb = normalize_tail(b);
  TruncatedSeries x = integer_grid(na.series);
  TruncatedSeries y = integer_grid(nb.series);
  if (x.trunc() < n || y.trunc() < n) {
    throw InsufficientTruncation("fewer than " + std::to_string(n) + " known normalized coefficients");
  }
  std::int64_t window = std::min(x.trunc(), y.trunc());
  if (window == TruncatedSeries::kExact) window = std::max({x.end(), y.end(), n});
  ComparisonReport r;
  r.window = n;
  r.sign_flip = na.sign != nb.sign;
  r.shift_a = na.shift;
  r.shift_b = nb.shift;
  r.monomial_shift = na.shift - nb.shift;
  std::int64_t m = 0;
  while (m < window && x.coeff(m) == y.coeff(m)) ++m;
  r.agreed_terms = m;
  if (m < n) r.first_mismatch = m;
  return r;
}

ComparisonReport compare_exact(const TruncatedSeries& a0, const TruncatedSeries& b0, std::int64_t below) {
  const int g = common_grid(a0, b0);
  TruncatedSeries a = a0.on_grid(g);
  TruncatedSeries b = b0.on_grid(g);
  const std::int64_t limit = below * g;
  if (a.trunc() < limit || b.trunc() < limit) {
    throw InsufficientTruncation("series not known below q^" + std::to_string(below));
  }
  std::int64_t lo = 0;
  if (!a.empty()) lo = std::min(lo, a.offset());
  if (!b.empty()) lo = std::min(lo, b.offset());
  ComparisonReport r;
  r.window = below;
  r.grid = g;
  std::int64_t u = lo;
  while (u < limit && a.coeff(u) == b.coeff(u)) ++u;
  r.agreed_terms = u - lo;
  if (u < limit) r.first_mismatch = u;
  return r;
}

}  // namespace qtail
