#pragma once

#include "qtail/qfun.hpp"
#include "qtail/series.hpp"

namespace qtail {

/// Psi(a,b) = sum_{i>=0} a^{i(i+1)/2} b^{i(i-1)/2} - sum_{i>=1} a^{i(i-1)/2} b^{i(i+1)/2}
TruncatedSeries false_theta(SignedMonomial a, SignedMonomial b, std::int64_t trunc);

/// f(a,b), same sums joined by a plus sign.
TruncatedSeries ramanujan_theta(SignedMonomial a, SignedMonomial b, std::int64_t trunc);

}  // namespace qtail
