#include "lazard/kernels.hpp"

#include <omp.h>

namespace lazard {

int maxThreads() { return omp_get_max_threads(); }

}  // namespace lazard
