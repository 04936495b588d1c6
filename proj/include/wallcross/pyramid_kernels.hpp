#ifndef WALLCROSS_PYRAMID_KERNELS_HPP
#define WALLCROSS_PYRAMID_KERNELS_HPP

#include <cstdint>
#include <vector>

#include <wallcross/pyramid.hpp>

namespace wallcross::kernels
{

// The stones that can occur in some partition inside the limits, in
// layer-major order (a linear extension of the removal order), with the
// covering relation as index lists.
struct StonePoset {
    std::vector<Stone> stones;
    std::vector<std::uint8_t> white;
    std::vector<std::vector<std::uint32_t>> parents;
    std::vector<std::vector<std::uint32_t>> children;
};

StonePoset build_poset(const ErcSpec &spec, const EnumerationLimits &limits);

struct IdealCounts {
    TruncationBox box;
    std::vector<std::uint64_t> counts; // row-major over box
    std::uint64_t visited = 0;         // search nodes

    std::uint64_t at(std::int64_t white, std::int64_t black) const
    {
        return counts[static_cast<std::size_t>(white * box.cols() + black)];
    }
    std::uint64_t total() const;
};

// Reference count: decide include/exclude for every stone in order.
IdealCounts count_ideals_serial(const StonePoset &poset, const EnumerationLimits &limits);

// Reverse search (each ideal is reached once, by adding stones in increasing
// index order). The first levels are expanded serially into tasks that OpenMP
// threads then finish independently.
IdealCounts count_ideals_parallel(const StonePoset &poset, const EnumerationLimits &limits);

BiSeries to_series(const IdealCounts &counts);

} // namespace wallcross::kernels

#endif
