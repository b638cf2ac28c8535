#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <vector>

namespace nlk::parallel {

/// Execution lane for the data-parallel kernels. Serial is the reference
/// implementation; Auto uses OpenMP when compiled in and more than one
/// thread is allowed. Both lanes produce bit-identical results: every
/// parallel loop writes to caller-owned indexed slots and reductions are
/// combined in fixed chunk order.
enum class Exec { Serial, Auto };

/// True when the library was built with OpenMP support.
bool openmp_compiled();

/// Thread cap. 0 = hardware/OpenMP default. The CLI seeds this from the
/// NLK_THREADS environment variable.
void set_max_threads(int n);
int max_threads();

/// Apply body(i) for i in [0, n). Exceptions thrown by any iteration are
/// captured and the first one is rethrown after the loop completes.
void for_each_index(std::int64_t n, const std::function<void(std::int64_t)>& body,
                    Exec exec = Exec::Auto);

/// Deterministic indexed sum: partial sums over fixed chunks of 1024
/// indices, chunks evaluated possibly in parallel, then combined serially
/// in chunk order. Bit-identical for any thread count.
double sum_indexed(std::int64_t n, const std::function<double(std::int64_t)>& term,
                   Exec exec = Exec::Auto);

} // namespace nlk::parallel
