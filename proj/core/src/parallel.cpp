#include "qtail/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace qtail {

std::size_t block_count(std::size_t count, int jobs) {
  const std::size_t j = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
  return std::max<std::size_t>(1, std::min(j, count));
}

void parallel_blocks(std::size_t count, int jobs,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t blocks = block_count(count, jobs);
  if (blocks == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::thread> threads;
  threads.reserve(blocks);
  for (std::size_t w = 0; w < blocks; ++w) {
    const std::size_t begin = count * w / blocks;
    const std::size_t end = count * (w + 1) / blocks;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

TruncatedSeries parallel_sum(std::size_t count, int jobs, const std::function<TruncatedSeries(std::size_t)>& term,
                             const TruncatedSeries& zero) {
  std::vector<TruncatedSeries> partial(block_count(count, jobs), zero);
  parallel_blocks(count, jobs, [&](std::size_t w, std::size_t begin, std::size_t end) {
    TruncatedSeries acc = zero;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[w] = std::move(acc);
  });
  TruncatedSeries total = zero;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace qtail
