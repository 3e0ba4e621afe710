#ifndef SEVERI_PARALLEL_HPP
#define SEVERI_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace severi {

// Sums term(0) + ... + term(count - 1) over `jobs` threads. Each thread takes a
// contiguous block and partial sums are combined in block order, so the
// result does not depend on scheduling.
template <typename T, typename Term>
T parallel_sum(std::size_t count, int jobs, const Term& term) {
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), 1,
                                                      std::max<std::size_t>(count, 1));
  std::vector<T> partial(workers, T(0));
  std::vector<std::exception_ptr> errors(workers);
  auto run_block = [&](std::size_t w) {
    try {
      const std::size_t lo = count * w / workers;
      const std::size_t hi = count * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) partial[w] += term(i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_block, w);
    for (std::thread& thread : threads) thread.join();
  }
  T total(0);
  for (std::size_t w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    total += partial[w];
  }
  return total;
}

}  // namespace severi

#endif  // SEVERI_PARALLEL_HPP
