#include "nlk/parallel.hpp"

#include <atomic>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlk::parallel {

namespace {
std::atomic<int> g_max_threads{0};

int effective_threads() {
    int cap = g_max_threads.load(std::memory_order_relaxed);
#ifdef _OPENMP
    int hw = omp_get_max_threads();
    if (cap <= 0) return hw;
    return cap < hw ? cap : hw;
#else
    (void)cap;
    return 1;
#endif
}
} // namespace

bool openmp_compiled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

int max_threads() { return effective_threads(); }

void for_each_index(std::int64_t n, const std::function<void(std::int64_t)>& body, Exec exec) {
    if (n <= 0) return;
    const bool go_parallel = exec == Exec::Auto && openmp_compiled() && effective_threads() > 1 && n > 1;
    if (!go_parallel) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr first_error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads())
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#endif
}

double sum_indexed(std::int64_t n, const std::function<double(std::int64_t)>& term, Exec exec) {
    if (n <= 0) return 0.0;
    constexpr std::int64_t kChunk = 1024;
    const std::int64_t n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(static_cast<std::size_t>(n_chunks), 0.0);
    for_each_index(
        n_chunks,
        [&](std::int64_t c) {
            const std::int64_t lo = c * kChunk;
            const std::int64_t hi = lo + kChunk < n ? lo + kChunk : n;
            double s = 0.0;
            for (std::int64_t i = lo; i < hi; ++i) s += term(i);
            partial[static_cast<std::size_t>(c)] = s;
        },
        exec);
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

} // namespace nlk::parallel
