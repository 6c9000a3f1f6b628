#include "qtail/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "qtail/errors.hpp"
#include "qtail/parallel.hpp"

namespace qtail {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// labels -> dense indices 0..arc_count-1
std::vector<std::array<int, 4>> dense_crossings(const PDDiagram& d) {
  std::map<int, int> index;
  for (const auto& x : d.crossings) {
    for (int l : x) index.emplace(l, 0);
  }
  int next = 0;
  for (auto& [label, i] : index) i = next++;
  std::vector<std::array<int, 4>> out;
  out.reserve(d.crossings.size());
  for (const auto& x : d.crossings) out.push_back({index[x[0]], index[x[1]], index[x[2]], index[x[3]]});
  return out;
}

// Orientation sign from labels increasing along the strands.
int label_sign(const std::array<int, 4>& x) {
  const int j = x[1];
  const int l = x[3];
  if (x[0] == j || x[2] == l) return 1;
  if (j - l == 1 || l - j > 1) return 1;
  return -1;
}

}  // namespace

int PDDiagram::writhe() const {
  if (signs.size() != crossings.size()) throw MalformedDiagram("diagram carries no orientation signs");
  return std::accumulate(signs.begin(), signs.end(), 0);
}

int PDDiagram::component_count() const {
  if (crossings.empty()) return 1;
  const auto dense = dense_crossings(*this);
  UnionFind uf(arc_count);
  int comps = arc_count;
  for (const auto& x : dense) {
    if (uf.unite(x[0], x[2])) --comps;
    if (uf.unite(x[1], x[3])) --comps;
  }
  return comps;
}

void PDDiagram::validate() const {
  std::map<int, int> seen;
  for (const auto& x : crossings) {
    for (int l : x) ++seen[l];
  }
  for (const auto& [label, count] : seen) {
    if (count != 2) {
      throw MalformedDiagram("arc " + std::to_string(label) + " appears " + std::to_string(count) + " times");
    }
  }
  if (static_cast<int>(seen.size()) != arc_count) throw MalformedDiagram("arc_count does not match the labels");
  if (!signs.empty() && signs.size() != crossings.size()) throw MalformedDiagram("one sign per crossing required");
}

std::string PDDiagram::str() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    if (c > 0) os << ";";
    const auto& x = crossings[c];
    os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  return os.str();
}

PDDiagram parse_pd(std::string_view text) {
  PDDiagram d;
  std::size_t pos = 0;
  while ((pos = text.find("X[", pos)) != std::string_view::npos) {
    pos += 2;
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw MalformedDiagram("unterminated crossing");
    std::array<int, 4> x{};
    int filled = 0;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      if (filled == 4) throw MalformedDiagram("crossing with more than four labels");
      x[static_cast<std::size_t>(filled++)] = std::stoi(cur);
      cur.clear();
    };
    for (std::size_t i = pos; i < close; ++i) {
      const char ch = text[i];
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
        cur.push_back(ch);
      } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        throw MalformedDiagram(std::string("unexpected character '") + ch + "' in crossing");
      }
    }
    flush();
    if (filled != 4) throw MalformedDiagram("crossing needs four labels");
    d.crossings.push_back(x);
    pos = close + 1;
  }
  std::map<int, int> labels;
  for (const auto& x : d.crossings) {
    for (int l : x) labels[l]++;
  }
  d.arc_count = static_cast<int>(labels.size());
  for (const auto& x : d.crossings) d.signs.push_back(label_sign(x));
  d.validate();
  return d;
}

PDDiagram pretzel_pd(const std::vector<std::int64_t>& twists) {
  std::int64_t total = 0;
  for (std::int64_t a : twists) {
    if (a < 1) throw PreconditionViolated("pretzel twist counts must be positive");
    total += a;
  }
  if (twists.size() < 2 || total < 2) throw TooFewStrands("a pretzel diagram needs at least two twist regions");
  if (total > 4096) throw TooManyCrossings("pretzel diagram too large");

  // Ports of crossing c: 4c + {0: NW, 1: NE, 2: SW, 3: SE}. NW-SE is the over strand.
  enum : int { NW = 0, NE = 1, SW = 2, SE = 3 };
  const int crossings = static_cast<int>(total);
  std::vector<int> partner(static_cast<std::size_t>(4 * crossings), -1);
  auto link = [&](int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  };
  std::vector<int> first;
  std::vector<int> last;
  int next = 0;
  for (std::int64_t a : twists) {
    first.push_back(next);
    for (std::int64_t j = 0; j + 1 < a; ++j) {
      link(4 * (next + static_cast<int>(j)) + SW, 4 * (next + static_cast<int>(j) + 1) + NW);
      link(4 * (next + static_cast<int>(j)) + SE, 4 * (next + static_cast<int>(j) + 1) + NE);
    }
    next += static_cast<int>(a);
    last.push_back(next - 1);
  }
  const std::size_t m = twists.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    link(4 * first[i] + NE, 4 * first[i + 1] + NW);
    link(4 * last[i] + SE, 4 * last[i + 1] + SW);
  }
  link(4 * first[0] + NW, 4 * first[m - 1] + NE);
  link(4 * last[0] + SW, 4 * last[m - 1] + SE);

  auto opposite = [](int port) { return (port & ~3) | (3 - (port & 3)); };
  std::vector<int> label(partner.size(), 0);
  std::vector<bool> incoming(partner.size(), false);
  std::vector<bool> visited(partner.size(), false);
  int arc = 0;
  for (std::size_t start = 0; start < partner.size(); ++start) {
    if (visited[start]) continue;
    int exit = static_cast<int>(start);
    do {
      ++arc;
      const int entry = partner[static_cast<std::size_t>(exit)];
      visited[static_cast<std::size_t>(exit)] = true;
      visited[static_cast<std::size_t>(entry)] = true;
      label[static_cast<std::size_t>(exit)] = arc;
      label[static_cast<std::size_t>(entry)] = arc;
      incoming[static_cast<std::size_t>(entry)] = true;
      exit = opposite(entry);
    } while (exit != static_cast<int>(start));
  }

  PDDiagram d;
  d.arc_count = arc;
  static constexpr std::array<int, 4> kCounterClockwise{NW, SW, SE, NE};
  for (int c = 0; c < crossings; ++c) {
    const int under_in = incoming[static_cast<std::size_t>(4 * c + SW)] ? SW : NE;
    const int over_in = incoming[static_cast<std::size_t>(4 * c + NW)] ? NW : SE;
    const auto at = static_cast<std::size_t>(
        std::find(kCounterClockwise.begin(), kCounterClockwise.end(), under_in) - kCounterClockwise.begin());
    std::array<int, 4> x{};
    std::array<int, 4> ports{};
    for (std::size_t r = 0; r < 4; ++r) {
      ports[r] = kCounterClockwise[(at + r) % 4];
      x[r] = label[static_cast<std::size_t>(4 * c + ports[r])];
    }
    d.crossings.push_back(x);
    // positive when the over strand runs from the fourth slot to the second
    d.signs.push_back(over_in == ports[3] ? 1 : -1);
  }
  d.validate();
  return d;
}

TruncatedSeries kauffman_bracket(const PDDiagram& d, int jobs) {
  d.validate();
  const int c = static_cast<int>(d.crossings.size());
  if (c > 30) throw TooManyCrossings("state sum limited to 30 crossings");
  if (c == 0) return TruncatedSeries::constant(1, 4);
  const auto dense = dense_crossings(d);
  const int arcs = d.arc_count;
  const std::uint64_t states = std::uint64_t{1} << c;
  // histogram[(#A - #B) + c][loops]
  using Histogram = std::vector<std::vector<std::int64_t>>;
  const std::size_t chunks = std::min<std::uint64_t>(states, 1024);
  std::vector<Histogram> partial(block_count(chunks, jobs),
                                 Histogram(static_cast<std::size_t>(2 * c + 1),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(arcs + 1))));
  parallel_blocks(chunks, jobs, [&](std::size_t w, std::size_t begin, std::size_t end) {
    UnionFind uf(arcs);
    auto& hist = partial[w];
    const std::uint64_t lo = states * begin / chunks;
    const std::uint64_t hi = states * end / chunks;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      uf.reset();
      int loops = arcs;
      int a_count = 0;
      for (int x = 0; x < c; ++x) {
        const auto& q = dense[static_cast<std::size_t>(x)];
        if ((mask >> x) & 1U) {
          // B: (a,d) (b,c)
          if (uf.unite(q[0], q[3])) --loops;
          if (uf.unite(q[1], q[2])) --loops;
        } else {
          ++a_count;
          if (uf.unite(q[0], q[1])) --loops;
          if (uf.unite(q[2], q[3])) --loops;
        }
      }
      ++hist[static_cast<std::size_t>(2 * a_count)][static_cast<std::size_t>(loops)];
    }
  });
  // (-A^2 - A^{-2})^{L}
  std::vector<TruncatedSeries> loop_power{TruncatedSeries::constant(1, 4)};
  const TruncatedSeries d_loop = TruncatedSeries(4, -2, {-1, 0, 0, 0, -1});
  for (int l = 1; l <= arcs; ++l) loop_power.push_back(loop_power.back() * d_loop);
  TruncatedSeries total = TruncatedSeries::zero(4);
  for (std::size_t s = 0; s < static_cast<std::size_t>(2 * c + 1); ++s) {
    for (std::size_t l = 1; l <= static_cast<std::size_t>(arcs); ++l) {
      Integer count = 0;
      for (const auto& h : partial) count += static_cast<long>(h[s][l]);
      if (sgn(count) == 0) continue;
      // A^{#A - #B} with #A - #B = s - c
      total += shift_units(scale(loop_power[l - 1], count), static_cast<std::int64_t>(s) - c);
    }
  }
  return total;
}

TruncatedSeries jones2(const PDDiagram& d, int jobs, bool allow_links) {
  if (!allow_links && d.component_count() != 1) {
    throw MultiComponent("J_2 normalization is defined here for knots only");
  }
  const int w = d.crossings.empty() ? 0 : d.writhe();
  const TruncatedSeries br = kauffman_bracket(d, jobs);
  // (-A^3)^{-w}
  const TruncatedSeries framing = TruncatedSeries::monomial(-3 * w, (w % 2 == 0) ? 1 : -1, 4);
  return (br * framing).coarsened();
}

HeadTailReport head_tail_match(const TruncatedSeries& j2, const TruncatedSeries& tail) {
  HeadTailReport r;
  r.tail_end = agree_up_to(j2, tail, 2);
  r.head_end = agree_up_to(j2.reflected(), tail, 2);
  const bool head_better = r.head_end.agreed_terms > r.tail_end.agreed_terms;
  r.end = head_better ? MatchedEnd::Head : MatchedEnd::Tail;
  r.best = head_better ? r.head_end : r.tail_end;
  return r;
}

}  // namespace qtail
