#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace zmsp {

/// Applies fn to every item on up to `jobs` threads. Results are stored by
/// index, so output order never depends on scheduling. If any call throws,
/// the exception of the lowest failing index is rethrown.
template <class T, class F>
auto parallel_map(std::span<const T> items, unsigned jobs, F&& fn)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<R> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace zmsp
