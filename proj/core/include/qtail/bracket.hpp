#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtail/series.hpp"

namespace qtail {

/// Planar diagram code. Each crossing lists four arc labels counterclockwise,
/// starting with the incoming under-strand.
struct PDDiagram {
  std::vector<std::array<int, 4>> crossings;
  int arc_count = 0;
  /// +1/-1 per crossing for the chosen orientation; empty if unknown.
  std::vector<int> signs;

  int writhe() const;
  int component_count() const;
  /// Throws MalformedDiagram unless every label occurs exactly twice.
  void validate() const;
  std::string str() const;
};

/// Parses "X[1,4,2,3];X[3,1,4,2]" (also accepts "PD[X[...], X[...]]").
/// Signs follow from the labels when consecutive labels run along the orientation.
PDDiagram parse_pd(std::string_view text);

/// Standard diagram of P(a_1,...,a_m): m vertical twist regions side by side.
PDDiagram pretzel_pd(const std::vector<std::int64_t>& twists);

/// <D> in A = q^{1/4} (grid 4), normalized so the crossingless circle is 1.
TruncatedSeries kauffman_bracket(const PDDiagram& d, int jobs = 1);

/// (-A^3)^{-w} <D> in q. Links are rejected unless allow_links is set, in
/// which case the value depends on the chosen orientation only through a
/// monomial factor.
TruncatedSeries jones2(const PDDiagram& d, int jobs = 1, bool allow_links = false);

enum class MatchedEnd { Tail, Head };

struct HeadTailReport {
  ComparisonReport best;
  MatchedEnd end = MatchedEnd::Tail;
  ComparisonReport tail_end;
  ComparisonReport head_end;
};

/// Compares the two lowest normalized coefficients of j2 and of j2(q^{-1})
/// with those of tail.
HeadTailReport head_tail_match(const TruncatedSeries& j2, const TruncatedSeries& tail);

}  // namespace qtail
