#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qtail/series.hpp"

namespace qtail {

enum class TailFamily { TorusEven, TorusOdd, Phi, LkProduct, LkMultisum };

struct TailSpec {
  TailFamily family = TailFamily::TorusOdd;
  std::int64_t k = 1;
  std::int64_t u = 1;
  /// Known below q^{trunc}.
  std::int64_t trunc = 100;

  /// Throws PreconditionViolated when k or u is outside the family's range.
  void validate() const;
};

struct TailOptions {
  int jobs = 1;
  /// Test hook: leave out the (q;q)_{l_k+p_u} factor of the Phi family.
  bool drop_phi_pochhammer = false;
};

std::string_view family_name(TailFamily f);
std::optional<TailFamily> parse_family(std::string_view name);

/// (q;q)_oo sum_{l_1..l_{k-1}} q^{sum i_j(i_j+1)} / prod (q;q)_{l_j},  i_j = l_j + ... + l_{k-1}
TruncatedSeries tail_torus_odd(std::int64_t k, std::int64_t trunc, const TailOptions& opt = {});
/// As tail_torus_odd with (q;q)_{l_{k-1}} squared; k >= 2.
TruncatedSeries tail_torus_even(std::int64_t k, std::int64_t trunc, const TailOptions& opt = {});
/// (q;q)_oo^2 sum g(l_1..l_k) g(p_1..p_u) (q;q)_{l_k+p_u}
TruncatedSeries tail_phi(std::int64_t k, std::int64_t u, std::int64_t trunc, const TailOptions& opt = {});
/// (q;q)_oo^{k+1} sum_i q^i / (q;q)_i^{k+1}
TruncatedSeries tail_lk_product(std::int64_t k, std::int64_t trunc, const TailOptions& opt = {});
/// (q;q)_oo^k times the k-fold sum with quadratic exponent
TruncatedSeries tail_lk_multisum(std::int64_t k, std::int64_t trunc, const TailOptions& opt = {});

TruncatedSeries evaluate_tail(const TailSpec& spec, const TailOptions& opt = {});

}  // namespace qtail
