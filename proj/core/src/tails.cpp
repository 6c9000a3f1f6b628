#include "qtail/tails.hpp"

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "qtail/errors.hpp"
#include "qtail/parallel.hpp"
#include "qtail/qfun.hpp"

namespace qtail {

namespace {

// q^{e} * prod (q;q)_{m}^{p}
struct Summand {
  std::int64_t e = 0;
  std::vector<std::pair<std::int64_t, int>> pochs;
};

void apply_pochhammer(std::vector<Integer>& c, std::int64_t m, int power) {
  const auto len = static_cast<std::int64_t>(c.size());
  for (std::int64_t j = 1; j <= m && j < len; ++j) {
    for (int r = 0; r < (power < 0 ? -power : power); ++r) {
      if (power > 0) {
        mul_one_minus_qj(c, j);
      } else {
        div_one_minus_qj(c, j);
      }
    }
  }
}

std::vector<Integer> sum_summands(const std::vector<Summand>& terms, std::int64_t trunc, int jobs) {
  const auto n = static_cast<std::size_t>(trunc);
  std::vector<std::vector<Integer>> partial(block_count(terms.size(), jobs), std::vector<Integer>(n));
  parallel_blocks(terms.size(), jobs, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& acc = partial[w];
    for (std::size_t t = begin; t < end; ++t) {
      const Summand& s = terms[t];
      std::vector<Integer> c(static_cast<std::size_t>(trunc - s.e));
      c[0] = 1;
      for (const auto& [m, p] : s.pochs) apply_pochhammer(c, m, p);
      for (std::size_t x = 0; x < c.size(); ++x) acc[static_cast<std::size_t>(s.e) + x] += c[x];
    }
  });
  std::vector<Integer> total(n);
  for (const auto& p : partial) {
    for (std::size_t x = 0; x < n; ++x) total[x] += p[x];
  }
  return total;
}

// multiply by (q;q)_oo^{power}
void times_euler(std::vector<Integer>& c, int power) {
  const auto len = static_cast<std::int64_t>(c.size());
  for (std::int64_t j = 1; j < len; ++j) {
    for (int r = 0; r < power; ++r) mul_one_minus_qj(c, j);
  }
}

TruncatedSeries finish(std::vector<Integer> c, std::int64_t trunc) { return {1, 0, std::move(c), trunc}; }

// Index tuples (l_1..l_m) with i_j = l_j + ... + l_m and sum i_j(i_j+1) < trunc.
// Levels are chosen innermost first; every outer level contributes at least
// i(i+1) for the current running sum i, which gives the cutoff.
struct TorusTuple {
  std::vector<std::int64_t> l;
  std::int64_t e = 0;
};

std::vector<TorusTuple> torus_tuples(std::int64_t m, std::int64_t trunc) {
  std::vector<TorusTuple> out;
  std::vector<std::int64_t> l(static_cast<std::size_t>(m));
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec = [&](std::int64_t level, std::int64_t running,
                                                                        std::int64_t e) {
    if (level < 0) {
      out.push_back({l, e});
      return;
    }
    for (std::int64_t v = 0;; ++v) {
      const std::int64_t i = running + v;
      const std::int64_t step = i * (i + 1);
      // this level plus `level` outer levels, all with running sum >= i
      if (e + step * (level + 1) >= trunc) break;
      l[static_cast<std::size_t>(level)] = v;
      rec(level - 1, i, e + step);
    }
  };
  if (m == 0) {
    if (trunc > 0) out.push_back({{}, 0});
    return out;
  }
  rec(m - 1, 0, 0);
  return out;
}

TruncatedSeries torus_family(std::int64_t k, std::int64_t trunc, bool square_innermost, const TailOptions& opt) {
  if (trunc <= 0) return TruncatedSeries::zero(1, trunc);
  std::vector<Summand> terms;
  for (const auto& t : torus_tuples(k - 1, trunc)) {
    Summand s{t.e, {}};
    for (std::size_t j = 0; j < t.l.size(); ++j) {
      const bool inner = (j + 1 == t.l.size());
      s.pochs.emplace_back(t.l[j], (inner && square_innermost) ? -2 : -1);
    }
    terms.push_back(std::move(s));
  }
  auto c = sum_summands(terms, trunc, opt.jobs);
  times_euler(c, 1);
  return finish(std::move(c), trunc);
}

}  // namespace

void TailSpec::validate() const {
  switch (family) {
    case TailFamily::TorusEven:
      if (k < 2) throw PreconditionViolated("torus-even needs k >= 2");
      break;
    case TailFamily::Phi:
      if (k < 1 || u < 1) throw PreconditionViolated("phi needs k, u >= 1");
      break;
    default:
      if (k < 1) throw PreconditionViolated("family needs k >= 1");
  }
}

std::string_view family_name(TailFamily f) {
  switch (f) {
    case TailFamily::TorusEven:
      return "torus-even";
    case TailFamily::TorusOdd:
      return "torus-odd";
    case TailFamily::Phi:
      return "phi";
    case TailFamily::LkProduct:
      return "lk-product";
    case TailFamily::LkMultisum:
      return "lk-multisum";
  }
  return "?";
}

std::optional<TailFamily> parse_family(std::string_view name) {
  for (TailFamily f : {TailFamily::TorusEven, TailFamily::TorusOdd, TailFamily::Phi, TailFamily::LkProduct,
                       TailFamily::LkMultisum}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

TruncatedSeries tail_torus_odd(std::int64_t k, std::int64_t trunc, const TailOptions& opt) {
  TailSpec{TailFamily::TorusOdd, k, 1, trunc}.validate();
  return torus_family(k, trunc, false, opt);
}

TruncatedSeries tail_torus_even(std::int64_t k, std::int64_t trunc, const TailOptions& opt) {
  TailSpec{TailFamily::TorusEven, k, 1, trunc}.validate();
  return torus_family(k, trunc, true, opt);
}

TruncatedSeries tail_phi(std::int64_t k, std::int64_t u, std::int64_t trunc, const TailOptions& opt) {
  TailSpec{TailFamily::Phi, k, u, trunc}.validate();
  if (trunc <= 0) return TruncatedSeries::zero(1, trunc);
  // g(l_1..l_k): the last index is the innermost one and carries the square
  const auto left = torus_tuples(k, trunc);
  const auto right = torus_tuples(u, trunc);
  std::vector<Summand> terms;
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (a.e + b.e >= trunc) continue;
      Summand s{a.e + b.e, {}};
      for (std::size_t j = 0; j < a.l.size(); ++j) s.pochs.emplace_back(a.l[j], j + 1 == a.l.size() ? -2 : -1);
      for (std::size_t j = 0; j < b.l.size(); ++j) s.pochs.emplace_back(b.l[j], j + 1 == b.l.size() ? -2 : -1);
      if (!opt.drop_phi_pochhammer) s.pochs.emplace_back(a.l.back() + b.l.back(), 1);
      terms.push_back(std::move(s));
    }
  }
  auto c = sum_summands(terms, trunc, opt.jobs);
  times_euler(c, 2);
  return finish(std::move(c), trunc);
}

TruncatedSeries tail_lk_product(std::int64_t k, std::int64_t trunc, const TailOptions& opt) {
  TailSpec{TailFamily::LkProduct, k, 1, trunc}.validate();
  (void)opt;
  if (trunc <= 0) return TruncatedSeries::zero(1, trunc);
  const auto n = static_cast<std::size_t>(trunc);
  std::vector<Integer> acc(n);
  std::vector<Integer> term(n);
  term[0] = 1;
  for (std::int64_t i = 0; i < trunc; ++i) {
    if (i > 0) {
      // q^i/(q;q)_i^{k+1} from the previous summand
      for (std::size_t x = n - 1; x > 0; --x) term[x] = term[x - 1];
      term[0] = 0;
      for (std::int64_t r = 0; r <= k; ++r) div_one_minus_qj(term, i);
    }
    for (std::size_t x = static_cast<std::size_t>(i); x < n; ++x) acc[x] += term[x];
  }
  times_euler(acc, static_cast<int>(k + 1));
  return finish(std::move(acc), trunc);
}

TruncatedSeries tail_lk_multisum(std::int64_t k, std::int64_t trunc, const TailOptions& opt) {
  TailSpec{TailFamily::LkMultisum, k, 1, trunc}.validate();
  if (trunc <= 0) return TruncatedSeries::zero(1, trunc);
  std::vector<Summand> terms;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
  // adding i_j contributes i_j + i_j^2 + i_j * (i_1 + ... + i_{j-1}) >= 0
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec = [&](std::int64_t j, std::int64_t prefix,
                                                                        std::int64_t e) {
    if (j == k) {
      Summand s{e, {}};
      std::int64_t partial = 0;
      for (std::int64_t i : idx) {
        partial += i;
        s.pochs.emplace_back(i, -1);
        s.pochs.emplace_back(partial, -1);
      }
      terms.push_back(std::move(s));
      return;
    }
    for (std::int64_t i = 0;; ++i) {
      const std::int64_t step = i + i * i + i * prefix;
      if (e + step >= trunc) break;
      idx[static_cast<std::size_t>(j)] = i;
      rec(j + 1, prefix + i, e + step);
    }
  };
  rec(0, 0, 0);
  auto c = sum_summands(terms, trunc, opt.jobs);
  times_euler(c, static_cast<int>(k));
  return finish(std::move(c), trunc);
}

TruncatedSeries evaluate_tail(const TailSpec& spec, const TailOptions& opt) {
  switch (spec.family) {
    case TailFamily::TorusOdd:
      return tail_torus_odd(spec.k, spec.trunc, opt);
    case TailFamily::TorusEven:
      return tail_torus_even(spec.k, spec.trunc, opt);
    case TailFamily::Phi:
      return tail_phi(spec.k, spec.u, spec.trunc, opt);
    case TailFamily::LkProduct:
      return tail_lk_product(spec.k, spec.trunc, opt);
    case TailFamily::LkMultisum:
      return tail_lk_multisum(spec.k, spec.trunc, opt);
  }
  throw PreconditionViolated("unknown tail family");
}

}  // namespace qtail
