#pragma once

#include <cstdint>

#include "qtail/series.hpp"
#include "qtail/skein.hpp"
#include "qtail/tails.hpp"

namespace qtail {

/// Upper summation bound of the closing Delta in the nested-bubble route for
/// L_k: the printed one stops at k-1, the corrected one at k.
enum class BubbleBound { Printed, Corrected };

// All evaluations return S_B^{(n)} known below q^{below}. They are rational
// functions of q^{1/2}, so a window has to be chosen by the caller.

/// sum_i Theta(2n,2n,2i)^{k+1} / Theta(n,n,2i)^{k+1} * Delta_{2i}
TruncatedSeries skein_eval_lk_theta(std::int64_t n, std::int64_t k, const Exponent& below, int jobs = 1);

/// Nested bubble coefficients times Delta_{2n}^2 / Delta_{n + i_1 + ... + i_K}.
TruncatedSeries skein_eval_lk_bubble(std::int64_t n, std::int64_t k, BubbleBound bound, const Exponent& below,
                                     int jobs = 1);

/// sum over monotone tuples of P_I P_J Delta_{2n}^2/(Delta_{n+i_k} Delta_{n+j_u}) Gamma_{n,i_k,j_u}.
/// The Closed method uses the Pochhammer forms of P and Gamma, Definitional the
/// bubble products and the assembled Gamma.
TruncatedSeries skein_eval_phi(std::int64_t n, std::int64_t k, std::int64_t u, const Exponent& below, int jobs = 1,
                               CoeffMethod method = CoeffMethod::Closed);

/// Normalized S_B^{(n)} / Delta_n with at least `terms` known coefficients.
/// The window is widened until enough coefficients survive normalization.
/// Family must be Phi or LkProduct (the latter evaluated by the theta route).
TruncatedSeries normalized_skein_value(const TailSpec& spec, std::int64_t n, std::int64_t terms, int jobs = 1);

/// Compares normalized S_B^{(n)} / Delta_n with the family tail on n terms.
ComparisonReport stabilization_check(const TailSpec& spec, std::int64_t n, int jobs = 1);

}  // namespace qtail
