#pragma once

namespace chrotop {

/// Worker threads for parallel kernels: omp_get_max_threads(), capped by the
/// CHROTOP_THREADS environment variable when it holds a positive integer.
auto worker_count() -> int;

}
