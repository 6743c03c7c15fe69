#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace ribbonsieve {

// Worker count: RIBBONSIEVE_THREADS if set and positive, else hardware concurrency.
int worker_count();

// Calls fn(i) for i in [0, n) across workers; results land in index order. The first
// exception raised by any call is rethrown after all workers join.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace ribbonsieve
