#pragma once

// Data-parallel kernels. Each kernel has a serial reference and an OpenMP
// version that must produce identical results; tests compare the two.

#include <cstddef>
#include <functional>
#include <limits>

namespace qgl {

enum class Execution { Serial, Parallel };

/// Worker count for parallel kernels: the OpenMP default, capped by the
/// QGL_THREADS environment variable when it holds a positive integer.
int worker_count();

struct ArgMax {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

/// max_k f(k) over k in [0, n). Ties resolve to the lowest index, so the
/// parallel and serial versions agree exactly.
ArgMax argmax_serial(std::size_t n, const std::function<double(std::size_t)>& f);
ArgMax argmax_parallel(std::size_t n, const std::function<double(std::size_t)>& f);
ArgMax argmax(std::size_t n, const std::function<double(std::size_t)>& f, Execution exec);

/// Runs body(k) for k in [0, n). Bodies must write only to slot k of their output.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec);

}  // namespace qgl
