#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace bjorth {

/// How independent work items (restarts, trials) are scheduled. Serial is the
/// reference path; Parallel must produce identical results.
enum class Exec { Serial, Parallel };

/// Evaluates f(0), ..., f(n-1) and returns the results in index order. The
/// first exception thrown (by index) is rethrown after all items finish.
template <class F>
auto map_indexed(std::size_t n, Exec exec, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);

  auto run = [&](long i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) run(i);
  } else {
    for (long i = 0; i < count; ++i) run(i);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Index of the best element under `better(a, b)`; ties keep the lowest index.
template <class T, class Better>
std::size_t best_index(const std::vector<T>& items, Better better) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (better(items[i], items[best])) best = i;
  }
  return best;
}

}  // namespace bjorth
