#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qtail/series.hpp"

namespace qtail::testing {

/// Series on `grid` from exponent-unit -> coefficient pairs.
inline TruncatedSeries from_terms(int grid, const std::map<std::int64_t, long>& terms,
                                  std::int64_t trunc = TruncatedSeries::kExact) {
  TruncatedSeries s = TruncatedSeries::zero(grid, trunc);
  for (const auto& [u, c] : terms) s += TruncatedSeries::monomial(u, c, grid);
  return s.capped_units(trunc);
}

/// Coefficients of q^0 .. q^{n-1} (grid 1).
inline std::vector<Integer> window(const TruncatedSeries& s, std::int64_t n) {
  std::vector<Integer> out;
  const TruncatedSeries g = s.on_grid(1);
  for (std::int64_t e = 0; e < n; ++e) out.push_back(g.coeff(e));
  return out;
}

/// sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
inline std::vector<Integer> pentagonal(std::int64_t n) {
  std::vector<Integer> c(static_cast<std::size_t>(n));
  for (std::int64_t k = 0;; ++k) {
    bool any = false;
    for (std::int64_t kk : {k, -k}) {
      const std::int64_t e = kk * (3 * kk - 1) / 2;
      if (e < n) {
        any = true;
        if (kk != 0 || k == 0) c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
      }
      if (k == 0) break;
    }
    if (!any) break;
  }
  return c;
}

/// Schoolbook product of exact coefficient maps.
inline std::map<std::int64_t, Integer> naive_product(const std::map<std::int64_t, Integer>& a,
                                                     const std::map<std::int64_t, Integer>& b) {
  std::map<std::int64_t, Integer> out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

inline std::map<std::int64_t, Integer> as_map(const TruncatedSeries& s) {
  std::map<std::int64_t, Integer> out;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (sgn(s.coeffs()[i]) != 0) out[s.offset() + static_cast<std::int64_t>(i)] = s.coeffs()[i];
  }
  return out;
}

/// Seeded generator of small random series.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  int grid() {
    static constexpr int kGrids[] = {1, 2, 4};
    return kGrids[uniform(0, 2)];
  }

  /// Exact polynomial with offset in [-6, 6] and up to 8 terms.
  TruncatedSeries poly(int grid) {
    std::map<std::int64_t, long> t;
    const std::int64_t off = uniform(-6, 6);
    const std::int64_t len = uniform(0, 8);
    for (std::int64_t i = 0; i < len; ++i) t[off + i] = static_cast<long>(uniform(-9, 9));
    return from_terms(grid, t);
  }

  /// Exact polynomial whose lowest coefficient is +-1.
  TruncatedSeries unit_poly(int grid) {
    const std::int64_t off = uniform(-6, 6);
    std::map<std::int64_t, long> t{{off, uniform(0, 1) ? 1L : -1L}};
    const std::int64_t len = uniform(0, 6);
    for (std::int64_t i = 1; i <= len; ++i) t[off + i] = static_cast<long>(uniform(-9, 9));
    return from_terms(grid, t);
  }

  /// Truncated series on `grid` with a random truncation above the offset.
  TruncatedSeries truncated(int grid) {
    const TruncatedSeries p = poly(grid);
    const std::int64_t base = p.empty() ? uniform(-6, 6) : p.offset();
    return p.capped_units(base + uniform(1, 12));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qtail::testing
