#include <chrotop/parallel.hpp>

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace chrotop {

auto worker_count() -> int
{
    int threads = omp_get_max_threads();
    if (const char * cap = std::getenv("CHROTOP_THREADS")) {
        try {
            int requested = std::stoi(cap);
            if (requested > 0)
                threads = std::min(threads, requested);
        }
        catch (const std::exception &) {
        }
    }
    return std::max(threads, 1);
}

}
