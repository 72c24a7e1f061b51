#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace hill4 {

// out[i] = fn(i) for i < n. The parallel flavour splits indices over OpenMP
// threads; results land by index so ordering never depends on scheduling.
// An exception thrown for any index is rethrown (lowest index first) after
// the loop, since it cannot cross the parallel region.
template <class T, class Fn>
std::vector<T> index_map(std::size_t n, Fn&& fn, bool parallel) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
  auto body = [&](long long i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = fn(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) body(i);
  } else {
    for (long long i = 0; i < count; ++i) body(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace hill4
