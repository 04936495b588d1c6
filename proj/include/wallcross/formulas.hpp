#ifndef WALLCROSS_FORMULAS_HPP
#define WALLCROSS_FORMULAS_HPP

#include <cstdint>
#include <string>

#include <wallcross/series.hpp>

namespace wallcross
{

enum class FormulaKind {
    zfin,        // finite-type pyramid partitions of length m, in (p0, p1)
    zpyr,        // pyramid partitions of length m, in (p0, p1)
    zpt_y,       // signed PT series of Y in (q0, q1)
    zpt_yplus,   // signed PT series of the flop Y+
    zncdt,       // signed NCDT series
    zdt_y_qt,    // signed DT series of Y, (q, t) form moved to (q0, q1)
    macmahon_sq, // prod_k (1 - (q0 q1)^k)^{-2k}
};

struct FormulaId {
    FormulaKind kind;
    std::int64_t m = 0; // length, for zfin and zpyr only
};

// Closed-form products, expanded inside the box. Each one is the form with
// the sign convention it is usually printed in; use sign_twist for the
// unsigned counterpart.
BiSeries evaluate(const FormulaId &id, TruncationBox box);

// Smallest box holding every term of the polynomial zfin(m).
TruncationBox zfin_support(std::int64_t m);

// "zfin:3", "zpyr:2", "zpt_y", "zpt_yplus", "zncdt", "zdt_y_qt", "macmahon_sq".
std::string to_label(const FormulaId &id);
// Throws std::invalid_argument on unknown ids or m < 1.
FormulaId parse_formula(const std::string &label);

} // namespace wallcross

#endif
