#include "qtail/theta_fn.hpp"

#include <algorithm>
#include <map>

#include "qtail/errors.hpp"

namespace qtail {

namespace {

// a^s b^t as (sign, halfexp)
std::pair<int, std::int64_t> power_pair(SignedMonomial a, std::int64_t s, SignedMonomial b, std::int64_t t) {
  int sign = 1;
  if (a.sign < 0 && s % 2 != 0) sign = -sign;
  if (b.sign < 0 && t % 2 != 0) sign = -sign;
  return {sign, a.halfexp * s + b.halfexp * t};
}

TruncatedSeries theta_like(SignedMonomial a, SignedMonomial b, std::int64_t trunc, int joiner) {
  if (a.halfexp + b.halfexp <= 0) {
    throw NonConvergent("theta sum needs a positive combined exponent");
  }
  const std::int64_t limit = 2 * trunc;
  std::map<std::int64_t, Integer> terms;
  const std::int64_t past_vertex = std::max(std::abs(a.halfexp), std::abs(b.halfexp)) + 1;
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t lo = i * (i - 1) / 2;
    const std::int64_t hi = i * (i + 1) / 2;
    auto [s1, e1] = power_pair(a, hi, b, lo);
    bool live = false;
    if (e1 < limit) {
      terms[e1] += s1;
      live = true;
    }
    if (i >= 1) {
      auto [s2, e2] = power_pair(a, lo, b, hi);
      if (e2 < limit) {
        terms[e2] += joiner * s2;
        live = true;
      }
    }
    if (!live && i > past_vertex) break;
  }
  if (terms.empty()) return TruncatedSeries::zero(1, trunc);
  const std::int64_t lo = terms.begin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(terms.rbegin()->first - lo + 1));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
  return TruncatedSeries(2, lo, std::move(c), limit).coarsened();
}

}  // namespace

TruncatedSeries false_theta(SignedMonomial a, SignedMonomial b, std::int64_t trunc) {
  return theta_like(a, b, trunc, -1);
}

TruncatedSeries ramanujan_theta(SignedMonomial a, SignedMonomial b, std::int64_t trunc) {
  return theta_like(a, b, trunc, +1);
}

}  // namespace qtail
