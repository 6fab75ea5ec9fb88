#ifndef SUBCOUNT_SRC_PARALLEL_HPP
#define SUBCOUNT_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace subcount::detail {

inline unsigned worker_count(unsigned jobs, std::size_t tasks)
{
  unsigned n = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

/// Runs fn(i) for i in [0, n) on a pool; fn must only touch slot i of any
/// shared output.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn)
{
  const unsigned workers = worker_count(jobs, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < n;)
      fn(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
}

} // namespace subcount::detail

#endif // SUBCOUNT_SRC_PARALLEL_HPP
