#ifndef WALLCROSS_CHAMBERS_HPP
#define WALLCROSS_CHAMBERS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <wallcross/series.hpp>

namespace wallcross
{

using Rational = mpq_class;

// Weights (zeta0, zeta1) on the two quiver vertices, kept in lowest terms.
struct StabilityParam {
    Rational zeta0;
    Rational zeta1;

    StabilityParam(Rational z0, Rational z1);
};

// Parses "3", "-2/3" and similar. Throws std::invalid_argument.
Rational parse_rational(const std::string &text);

enum class WallFamily {
    minus_plus,  // m zeta0 + (m-1) zeta1 = 0, zeta0 < zeta1, m >= 1
    minus_inf,   // zeta0 + zeta1 = 0, zeta0 < zeta1
    minus_minus, // m zeta0 + (m+1) zeta1 = 0, zeta0 < zeta1, m >= 0
    plus_plus,   // m zeta0 + (m-1) zeta1 = 0, zeta0 > zeta1, m >= 1
    plus_inf,    // zeta0 + zeta1 = 0, zeta0 > zeta1
    plus_minus,  // m zeta0 + (m+1) zeta1 = 0, zeta0 > zeta1, m >= 0
};

struct Wall {
    WallFamily family;
    std::int64_t m = 0; // unused for the infinite walls

    bool is_infinite() const noexcept
    {
        return family == WallFamily::minus_inf || family == WallFamily::plus_inf;
    }
    // Coefficients (c0, c1) of the defining form c0 zeta0 + c1 zeta1 = 0.
    std::pair<std::int64_t, std::int64_t> linear_form() const;
    // Dimension vector of the unique stable module on the wall; nullopt on
    // the infinite walls.
    std::optional<Bidegree> dim_vector() const;
    bool contains(const StabilityParam &zeta) const;

    friend bool operator==(const Wall &, const Wall &) = default;
};

enum class ChamberKind {
    trivial,
    minus_plus, // between walls minus_plus(k) and minus_plus(k+1)
    pty,        // beyond every minus_plus wall, before minus_inf
    dty,        // virtual: just past minus_inf, before every minus_minus wall
    minus_minus, // between walls minus_minus(k) and minus_minus(k-1)
    ncdt,
    plus_minus, // between walls plus_minus(k-1) and plus_minus(k)
    pty_plus,   // beyond every plus_minus wall, before plus_inf
    dty_plus,   // virtual: just past plus_inf, before every plus_plus wall
    plus_plus,  // between walls plus_plus(k+1) and plus_plus(k)
};

struct Chamber {
    ChamberKind kind;
    std::int64_t k = 0; // index for the indexed kinds, 0 otherwise

    friend bool operator==(const Chamber &, const Chamber &) = default;
};

struct OnWall {
    Wall wall;
    friend bool operator==(const OnWall &, const OnWall &) = default;
};

struct Degenerate {
    friend bool operator==(const Degenerate &, const Degenerate &) = default;
};

using Classification = std::variant<Chamber, OnWall, Degenerate>;

// Exact rational classification of a stability parameter. Every parameter
// lands in exactly one of: a chamber, one wall, or the origin.
Classification classify(const StabilityParam &zeta);

// -zeta0 v0 - zeta1 v1.
Rational framing_weight(const StabilityParam &zeta, const Bidegree &v);

class no_finite_factor : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// (1 + q^{dim C})^{dim C_0} for the stable module C of a finite wall.
// Throws no_finite_factor on an infinite wall.
BiSeries wall_factor(const Wall &w, TruncationBox box);

// Crossing factor of the infinite walls, prod_{k>=1} (1 - (q0 q1)^k)^{-2k}.
// This factor is imported from the closed DT formula rather than derived from
// the finite-wall crossing rule; results that use it carry
// external_factor_flag.
BiSeries dtpt_factor(TruncationBox box);

inline constexpr const char *external_factor_flag = "uses-dtpt-external-factor";

enum class FactorKind { finite, external };

struct Crossing {
    Wall wall;
    FactorKind kind;
    friend bool operator==(const Crossing &, const Crossing &) = default;
};

// Which way round the origin to walk from the trivial chamber. Minus-side
// chambers are only reachable counterclockwise and plus-side ones clockwise;
// the choice matters only for ncdt.
enum class Route { automatic, minus, plus };

// Walls separating the trivial chamber from c, in crossing order, omitting
// walls whose factor is the identity inside the box.
std::vector<Crossing> crossing_path(const Chamber &c, TruncationBox box, Route route = Route::automatic);

// True when the chamber lies past an infinite wall, so its series uses dtpt_factor.
bool uses_external_factor(const Chamber &c);

// Naive Euler-characteristic series Z' of the chamber.
BiSeries z_unsigned(const Chamber &c, TruncationBox box, Route route = Route::automatic);

// Virtual series Z = Z'(q0, -q1).
BiSeries z_signed(const Chamber &c, TruncationBox box, Route route = Route::automatic);

// Text labels: "trivial", "ncdt", "pty", "dty", "pty_plus", "dty_plus",
// "minus_plus:2", "minus_minus:1", "plus_minus:3", "plus_plus:1";
// walls: "wall:minus_plus:1", "wall:minus_inf", ...
std::string to_label(const Chamber &c);
std::string to_label(const Wall &w);
std::string to_label(const Classification &c);
// Throws std::invalid_argument on an unknown label.
Chamber parse_chamber(const std::string &label);
Wall parse_wall(const std::string &label);

} // namespace wallcross

#endif
