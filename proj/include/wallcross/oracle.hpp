#ifndef WALLCROSS_ORACLE_HPP
#define WALLCROSS_ORACLE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <wallcross/series.hpp>

namespace wallcross::oracle
{

// Letter counts of a path out of vertex 0 in the conifold path algebra.
// The relations symmetrize the a-letters among themselves and the b-letters
// among themselves, so the counts are a normal form. Paths ending at vertex 1
// (one more a than b) are black; paths back at vertex 0 are white.
struct CountVector {
    std::int64_t na1 = 0;
    std::int64_t na2 = 0;
    std::int64_t nb1 = 0;
    std::int64_t nb2 = 0;

    std::int64_t excess() const noexcept { return na1 + na2 - nb1 - nb2; }
    bool valid() const noexcept
    {
        return na1 >= 0 && na2 >= 0 && nb1 >= 0 && nb2 >= 0 && (excess() == 0 || excess() == 1);
    }
    bool is_black() const noexcept { return excess() == 1; }

    friend constexpr auto operator<=>(const CountVector &, const CountVector &) = default;
};

class invalid_count_vector : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The central element xy = zw adds one of each letter.
inline constexpr CountVector central{1, 1, 1, 1};

// Shorter paths m' with m = letter * m', i.e. the outermost letter stripped.
std::vector<CountVector> parents(const CountVector &v);

using Ideal = std::vector<CountVector>; // sorted

// Every parent-closed finite set with (white, black) inside the box and,
// when given, at most max_stones elements.
std::vector<Ideal> list_ideals(TruncationBox box, std::optional<std::int64_t> max_stones = std::nullopt);

// Generating series in (p0, p1) = (white, black) of list_ideals.
BiSeries enumerate_ideals(TruncationBox box, std::optional<std::int64_t> max_stones = std::nullopt);

// True when w in S and w - c >= 0 imply w - c in S, i.e. each weight line
// C[c] v of the quotient is cut by a monomial ideal of C[c].
bool closed_under_central_division(const Ideal &ideal);

} // namespace wallcross::oracle

#endif
