#include "qgl/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgl {

namespace {

bool better(const ArgMax& a, const ArgMax& b) {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

}  // namespace

int worker_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("QGL_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < n) n = cap;
    } catch (const std::exception&) {
      // ignored: malformed values leave the default in place
    }
  }
  return n;
}

ArgMax argmax_serial(std::size_t n, const std::function<double(std::size_t)>& f) {
  ArgMax best;
  for (std::size_t k = 0; k < n; ++k) {
    const ArgMax cand{f(k), k};
    if (k == 0 || better(cand, best)) best = cand;
  }
  return best;
}

ArgMax argmax_parallel(std::size_t n, const std::function<double(std::size_t)>& f) {
  if (n == 0) return {};
  std::vector<double> values(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (long k = 0; k < static_cast<long>(n); ++k) {
    try {
      values[k] = f(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return argmax_serial(n, [&](std::size_t k) { return values[k]; });
}

ArgMax argmax(std::size_t n, const std::function<double(std::size_t)>& f, Execution exec) {
  return exec == Execution::Parallel ? argmax_parallel(n, f) : argmax_serial(n, f);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec) {
  if (exec == Execution::Serial) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (long k = 0; k < static_cast<long>(n); ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace qgl
