#pragma once

#include <cstddef>
#include <functional>

#include "qtail/series.hpp"

namespace qtail {

/// Runs body(worker, begin, end) over contiguous blocks of [0, count) on up to
/// `jobs` threads. Exceptions from workers are rethrown on the caller.
void parallel_blocks(std::size_t count, int jobs,
                     const std::function<void(std::size_t worker, std::size_t begin, std::size_t end)>& body);

/// Number of blocks parallel_blocks will use.
std::size_t block_count(std::size_t count, int jobs);

/// sum_{i < count} term(i). Partial sums are combined in block order; since
/// series addition is exact the result does not depend on `jobs`.
TruncatedSeries parallel_sum(std::size_t count, int jobs, const std::function<TruncatedSeries(std::size_t)>& term,
                             const TruncatedSeries& zero);

}  // namespace qtail
