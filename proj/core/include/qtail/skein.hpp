#pragma once

#include <cstdint>
#include <span>

#include "qtail/factor_product.hpp"
#include "qtail/qfun.hpp"
#include "qtail/series.hpp"

namespace qtail {

/// Colors (a,b,c) around a trivalent vertex.
struct AdmissibleTriple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  bool admissible() const;
  // interior colors
  std::int64_t x() const { return (a + b - c) / 2; }
  std::int64_t y() const { return (a + c - b) / 2; }
  std::int64_t z() const { return (b + c - a) / 2; }
};

enum class CoeffMethod { Definitional, Closed };
enum class GammaMethod { Closed, Assembled };

/// Delta_n = (-1)^n [n+1], exact on grid 2.
TruncatedSeries delta(std::int64_t n);

// Every remaining coefficient is a rational function of q^{1/2}; the value
// returned is known strictly below q^{below}.

TruncatedSeries theta_coeff(const AdmissibleTriple& t, const Exponent& below);
TruncatedSeries theta_nn2i(std::int64_t n, std::int64_t i, const Exponent& below);

/// Bubble expansion coefficient with rows (m n) over (k l) and index i.
TruncatedSeries bubble_general(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t i,
                               const Exponent& below);
/// Closed form of bubble_general(n, a, n, n, b).
TruncatedSeries bubble_nann(std::int64_t n, std::int64_t a, std::int64_t b, const Exponent& below);
/// Closed form of bubble_general(n-a, n-a, n+a, n, i).
TruncatedSeries bubble_sym(std::int64_t n, std::int64_t a, std::int64_t i, const Exponent& below);

TruncatedSeries coeff_E(std::int64_t n, std::span<const std::int64_t> indices, CoeffMethod method,
                        const Exponent& below);
TruncatedSeries coeff_P(std::int64_t n, std::span<const std::int64_t> indices, CoeffMethod method,
                        const Exponent& below);
TruncatedSeries gamma_coeff(std::int64_t n, std::int64_t i, std::int64_t j, GammaMethod method,
                            const Exponent& below);
/// Theta(2n,2n,2i)^k / Theta(n,n,2i)^{k+1} * Delta_{2i}
TruncatedSeries c_coeff(std::int64_t n, std::int64_t i, std::int64_t k, const Exponent& below);

/// Unevaluated forms of the coefficients above. The factor-product forms go
/// through quantum factorials, Delta polynomials and Gaussian binomials; the
/// Pochhammer forms are the closed formulas.
namespace terms {

FactorProduct theta(const AdmissibleTriple& t);
FactorProduct bubble(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t i);
FactorProduct coeff_E_definitional(std::int64_t n, std::span<const std::int64_t> indices);
FactorProduct coeff_P_definitional(std::int64_t n, std::span<const std::int64_t> indices);
FactorProduct gamma_assembled(std::int64_t n, std::int64_t i, std::int64_t j);

PochhammerProduct theta_nn2i(std::int64_t n, std::int64_t i);
PochhammerProduct bubble_nann(std::int64_t n, std::int64_t a, std::int64_t b);
PochhammerProduct bubble_sym(std::int64_t n, std::int64_t a, std::int64_t i);
PochhammerProduct coeff_E_closed(std::int64_t n, std::span<const std::int64_t> indices);
PochhammerProduct coeff_P_closed(std::int64_t n, std::span<const std::int64_t> indices);
PochhammerProduct gamma_closed(std::int64_t n, std::int64_t i, std::int64_t j);

}  // namespace terms

}  // namespace qtail
