#include "qtail/stabilization.hpp"

#include <functional>
#include <vector>

#include "qtail/errors.hpp"
#include "qtail/parallel.hpp"

namespace qtail {

namespace {

using Tuple = std::vector<std::int64_t>;

// n >= i_1 >= ... >= i_k >= 0
std::vector<Tuple> monotone_tuples(std::int64_t n, std::int64_t k) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t top) {
    if (static_cast<std::int64_t>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t i = 0; i <= top; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

// i_1 <= n, i_{j+1} <= n - (i_1 + ... + i_j)
std::vector<Tuple> nested_tuples(std::int64_t n, std::int64_t k) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t left) {
    if (static_cast<std::int64_t>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t i = 0; i <= left; ++i) {
      cur.push_back(i);
      rec(left - i);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

void check_nk(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw PreconditionViolated("skein evaluation needs n, k >= 1");
}

}  // namespace

TruncatedSeries skein_eval_lk_theta(std::int64_t n, std::int64_t k, const Exponent& below, int jobs) {
  check_nk(n, k);
  return parallel_sum(
      static_cast<std::size_t>(n + 1), jobs,
      [&](std::size_t idx) {
        const auto i = static_cast<std::int64_t>(idx);
        const FactorProduct big = terms::theta({2 * n, 2 * n, 2 * i});
        const FactorProduct small_inv = terms::theta({n, n, 2 * i}).inverse();
        FactorProduct p;
        for (std::int64_t r = 0; r <= k; ++r) {
          p.times(big);
          p.times(small_inv);
        }
        p.times(delta(2 * i));
        return p.evaluate(below);
      },
      TruncatedSeries::zero(2).capped(below));
}

TruncatedSeries skein_eval_lk_bubble(std::int64_t n, std::int64_t k, BubbleBound bound, const Exponent& below,
                                     int jobs) {
  check_nk(n, k);
  const auto tuples = nested_tuples(n, k);
  const std::int64_t closing = (bound == BubbleBound::Corrected) ? k : k - 1;
  return parallel_sum(
      tuples.size(), jobs,
      [&](std::size_t t) {
        const Tuple& idx = tuples[t];
        PochhammerProduct p;
        std::int64_t a = 0;
        for (std::int64_t i : idx) {
          p.times(terms::bubble_sym(n, a, i));
          a += i;
        }
        std::int64_t s = 0;
        for (std::int64_t j = 0; j < closing; ++j) s += idx[static_cast<std::size_t>(j)];
        p.times_delta(2 * n, 2);
        p.times_delta(n + s, -1);
        return p.evaluate(below);
      },
      TruncatedSeries::zero(2).capped(below));
}

TruncatedSeries skein_eval_phi(std::int64_t n, std::int64_t k, std::int64_t u, const Exponent& below, int jobs,
                               CoeffMethod method) {
  check_nk(n, k);
  check_nk(n, u);
  const auto left = monotone_tuples(n, k);
  const auto right = monotone_tuples(n, u);
  const std::size_t count = left.size() * right.size();
  return parallel_sum(
      count, jobs,
      [&](std::size_t t) {
        const Tuple& I = left[t / right.size()];
        const Tuple& J = right[t % right.size()];
        const std::int64_t ik = I.back();
        const std::int64_t ju = J.back();
        if (method == CoeffMethod::Closed) {
          PochhammerProduct p = terms::coeff_P_closed(n, I);
          p.times(terms::coeff_P_closed(n, J));
          p.times_delta(2 * n, 2);
          p.times_delta(n + ik, -1);
          p.times_delta(n + ju, -1);
          p.times(terms::gamma_closed(n, ik, ju));
          return p.evaluate(below);
        }
        FactorProduct p = terms::coeff_P_definitional(n, I);
        p.times(terms::coeff_P_definitional(n, J));
        p.times(delta(2 * n), 2);
        p.times(delta(n + ik), -1);
        p.times(delta(n + ju), -1);
        p.times(terms::gamma_assembled(n, ik, ju));
        return p.evaluate(below);
      },
      TruncatedSeries::zero(2).capped(below));
}

TruncatedSeries normalized_skein_value(const TailSpec& spec, std::int64_t n, std::int64_t terms, int jobs) {
  if (spec.family != TailFamily::Phi && spec.family != TailFamily::LkProduct) {
    throw PreconditionViolated("stabilization is implemented for the phi and lk-product families");
  }
  spec.validate();
  const TruncatedSeries dn = delta(n);
  std::int64_t below = 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const TruncatedSeries value = spec.family == TailFamily::Phi
                                      ? skein_eval_phi(n, spec.k, spec.u, below, jobs)
                                      : skein_eval_lk_theta(n, spec.k, below, jobs);
    const TruncatedSeries x = divide(value, dn);
    if (!x.empty()) {
      const TruncatedSeries norm = normalize_tail(x).series;
      const std::int64_t known = Exponent(norm.trunc(), norm.grid()).ceil_units(1);
      if (known >= terms) return norm;
      below += terms - known + 1;
    } else {
      below += terms + 1;
    }
  }
  throw InsufficientTruncation("skein value did not produce enough coefficients");
}

ComparisonReport stabilization_check(const TailSpec& spec, std::int64_t n, int jobs) {
  if (n < 1) throw PreconditionViolated("stabilization_check needs n >= 1");
  const TruncatedSeries value = normalized_skein_value(spec, n, n, jobs);
  const TruncatedSeries tail = evaluate_tail(spec, {jobs, false});
  return agree_up_to(value, tail, n);
}

}  // namespace qtail
