#ifndef WALLCROSS_PYRAMID_HPP
#define WALLCROSS_PYRAMID_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <wallcross/series.hpp>

namespace wallcross
{

enum class ErcKind { infinite_pyramid, finite_type };

// Empty room configuration of length m.
//
// Infinite pyramid: layer 2k holds white stones (i, j) with 0 <= i <= m+k-1,
// 0 <= j <= k; layer 2k+1 holds black stones with 0 <= i <= m+k, 0 <= j <= k.
//
// Finite type: layer 2k (0 <= k <= m-1) holds black stones with
// 0 <= i <= m-k-1, 0 <= j <= k; layer 2k+1 (0 <= k <= m-2) holds white
// stones with 0 <= i <= m-k-2, 0 <= j <= k.
struct ErcSpec {
    ErcKind kind;
    std::int64_t m;

    ErcSpec(ErcKind kind, std::int64_t m);
};

enum class StoneColor { white, black };

struct Stone {
    std::int64_t layer = 0;
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend constexpr auto operator<=>(const Stone &, const Stone &) = default;
};

class not_in_erc : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

bool is_member(const ErcSpec &spec, const Stone &s);
StoneColor color_of(const ErcSpec &spec, const Stone &s);
// Number of stones in a layer; 0 past the bottom of a finite configuration.
std::int64_t layer_size(const ErcSpec &spec, std::int64_t layer);
// Deepest layer index, or nullopt for the infinite pyramid.
std::optional<std::int64_t> last_layer(const ErcSpec &spec);
std::vector<Stone> stones_in_layer(const ErcSpec &spec, std::int64_t layer);

// Stones that must be removed before s can be. Throws not_in_erc.
std::vector<Stone> above_neighbors(const ErcSpec &spec, const Stone &s);

// A finite up-closed set of stones.
struct PyramidPartition {
    std::vector<Stone> stones; // sorted
    Bidegree counts;           // (white, black)
};

// Dimension-vector grading -> stone-count grading:
//   finite type      [[m-1, -m], [m, -(m+1)]]
//   infinite pyramid [[m, -(m-1)], [m+1, -m]]
IntMatrix2 stone_matrix(const ErcSpec &spec);

// Optional cap on the total stone count n0 + n1, on top of the box.
struct EnumerationLimits {
    TruncationBox box;
    std::optional<std::int64_t> max_stones;

    bool admits(std::int64_t white, std::int64_t black) const noexcept
    {
        return white <= box.n0_max && black <= box.n1_max && (!max_stones || white + black <= *max_stones);
    }
};

// Series in (p0, p1) whose coefficient at (n0, n1) is the exact number of
// pyramid partitions with n0 white and n1 black stones, inside the limits.
BiSeries enumerate_counts(const ErcSpec &spec, TruncationBox box);
BiSeries enumerate_counts(const ErcSpec &spec, const EnumerationLimits &limits);

// Every partition inside the limits, in generation order.
std::vector<PyramidPartition> list_partitions(const ErcSpec &spec, const EnumerationLimits &limits);

// [[[layer, i, j], ...], ...]
nlohmann::json partitions_to_json(const std::vector<PyramidPartition> &partitions);

std::string to_label(const ErcSpec &spec);

} // namespace wallcross

#endif
