#ifndef WALLCROSS_SERIES_KERNELS_HPP
#define WALLCROSS_SERIES_KERNELS_HPP

#include <cstddef>

#include <wallcross/series.hpp>

namespace wallcross::kernels
{

// Reference product: scatter every pair of nonzero terms. Single-threaded.
BiSeries mul_serial(const BiSeries &a, const BiSeries &b);

// Row-gather product: each output row v0 is owned by one OpenMP thread, so
// the result does not depend on the thread count or schedule.
BiSeries mul_parallel(const BiSeries &a, const BiSeries &b);

// Boxes with at least this many cells go through mul_parallel from mul().
inline constexpr std::size_t parallel_mul_cells = 64;

} // namespace wallcross::kernels

#endif
