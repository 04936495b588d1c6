#ifndef WALLCROSS_PARALLEL_HPP
#define WALLCROSS_PARALLEL_HPP

#include <optional>

namespace wallcross
{

// Value of WALLCROSS_THREADS when it holds a positive integer.
std::optional<int> thread_cap_from_env();

// Caps the OpenMP team size used by the parallel kernels.
void set_thread_cap(int threads);

int max_threads();

} // namespace wallcross

#endif
