#pragma once

// Index-space fan-out for the verification sweeps. With threads <= 1 (or no
// OpenMP) the body runs in a plain loop, which is the reference path the
// tests compare against. Results must be written by index so the output
// order never depends on scheduling.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schubcalc {

/// SCHUBCALC_THREADS if set and positive, otherwise the OpenMP default (1
/// without OpenMP).
int default_threads();

template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
#ifdef _OPENMP
    if (threads > 1 && count > 1) {
        std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
            try {
                body(static_cast<std::size_t>(k));
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        return;
    }
#endif
    (void)threads;
    for (std::size_t k = 0; k < count; ++k) body(k);
}

}  // namespace schubcalc
