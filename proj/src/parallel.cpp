#include "schubcalc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace schubcalc {

int default_threads() {
    if (const char* env = std::getenv("SCHUBCALC_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace schubcalc
