#pragma once

// Table-filling kernels: a serial reference loop and an OpenMP loop over rows.
// Both produce identical output; the serial one is kept for testing.

#include <cstddef>
#include <exception>
#include <vector>

#include "lazard/modarith.hpp"

namespace lazard {

enum class Exec { Serial, Parallel };

int maxThreads();

/// out[a * n + b] = f(a, b) for all a, b < n.
template <class F>
std::vector<Index> tabulate(Index n, F&& f, Exec exec = Exec::Parallel) {
  std::vector<Index> out(static_cast<std::size_t>(n) * n);
  if (exec == Exec::Serial) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) out[static_cast<std::size_t>(a) * n + b] = f(a, b);
    return out;
  }
  std::exception_ptr err;
  const long long rows = n;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long a = 0; a < rows; ++a) {
    try {
      for (Index b = 0; b < n; ++b) out[static_cast<std::size_t>(a) * n + b] = f(static_cast<Index>(a), b);
    } catch (...) {
#pragma omp critical(lazard_tabulate_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

/// out[a] = f(a) for all a < n.
template <class T, class F>
std::vector<T> tabulate1(Index n, F&& f, Exec exec = Exec::Parallel) {
  std::vector<T> out(n);
  if (exec == Exec::Serial) {
    for (Index a = 0; a < n; ++a) out[a] = f(a);
    return out;
  }
  std::exception_ptr err;
  const long long rows = n;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long a = 0; a < rows; ++a) {
    try {
      out[a] = f(static_cast<Index>(a));
    } catch (...) {
#pragma omp critical(lazard_tabulate_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

/// First a < n with pred(a) false, or n when pred holds everywhere.
template <class F>
Index findFailure(Index n, F&& pred, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial) {
    for (Index a = 0; a < n; ++a)
      if (!pred(a)) return a;
    return n;
  }
  Index first = n;
  const long long rows = n;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
  for (long long a = 0; a < rows; ++a)
    if (static_cast<Index>(a) < first && !pred(static_cast<Index>(a))) first = static_cast<Index>(a);
  return first;
}

}  // namespace lazard
