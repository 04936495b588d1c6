#ifndef WALLCROSS_SERIES_HPP
#define WALLCROSS_SERIES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wallcross
{

using Integer = mpz_class;

// Exponent pair (v0, v1) of the monomial q0^v0 q1^v1. The same type carries
// stone counts (n0, n1) for the p0, p1 variables of the pyramid series.
struct Bidegree {
    std::int64_t v0 = 0;
    std::int64_t v1 = 0;

    friend constexpr auto operator<=>(const Bidegree &, const Bidegree &) = default;
};

// Rectangular truncation: monomials with v0 > n0_max or v1 > n1_max are zero.
struct TruncationBox {
    std::int64_t n0_max = 0;
    std::int64_t n1_max = 0;

    constexpr bool contains(const Bidegree &d) const noexcept
    {
        return d.v0 >= 0 && d.v1 >= 0 && d.v0 <= n0_max && d.v1 <= n1_max;
    }
    constexpr std::int64_t rows() const noexcept { return n0_max + 1; }
    constexpr std::int64_t cols() const noexcept { return n1_max + 1; }

    friend constexpr bool operator==(const TruncationBox &, const TruncationBox &) = default;
};

class series_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class invalid_terms : public series_error
{
public:
    using series_error::series_error;
};

class box_mismatch : public series_error
{
public:
    using series_error::series_error;
};

class not_invertible : public series_error
{
public:
    using series_error::series_error;
};

class non_negativity_violation : public series_error
{
public:
    using series_error::series_error;
};

class invalid_box : public series_error
{
public:
    using series_error::series_error;
};

using Term = std::pair<Bidegree, Integer>;

// Bivariate power series in q0, q1 over the integers, truncated to a box.
//
// Storage is dense row-major (v0 major) over the box; the public surface only
// exposes the nonzero terms. Values are immutable once built, so sharing them
// across threads is safe.
class BiSeries
{
public:
    // The zero series.
    explicit BiSeries(TruncationBox box);

    // Builds a series from a term list. Terms outside the box are dropped,
    // zero coefficients are dropped, duplicate bidegrees throw invalid_terms.
    static BiSeries make(TruncationBox box, std::span<const Term> terms);
    static BiSeries make(TruncationBox box, std::initializer_list<Term> terms)
    {
        return make(box, std::span<const Term>(terms.begin(), terms.size()));
    }
    static BiSeries one(TruncationBox box);
    static BiSeries monomial(TruncationBox box, Bidegree d, const Integer &coeff = 1);
    // Adopts a dense coefficient table of size rows() * cols().
    static BiSeries from_dense(TruncationBox box, std::vector<Integer> dense);

    const TruncationBox &box() const noexcept { return box_; }
    Integer coefficient(Bidegree d) const;
    // Nonzero terms ordered by (v0, v1) ascending.
    std::vector<Term> terms() const;
    std::size_t term_count() const;
    bool is_zero() const;
    std::span<const Integer> dense() const noexcept { return coeffs_; }

    friend bool operator==(const BiSeries &a, const BiSeries &b);

private:
    std::size_t index(Bidegree d) const noexcept
    {
        return static_cast<std::size_t>(d.v0 * box_.cols() + d.v1);
    }

    TruncationBox box_;
    std::vector<Integer> coeffs_;
};

BiSeries add(const BiSeries &a, const BiSeries &b);
BiSeries sub(const BiSeries &a, const BiSeries &b);
BiSeries negate(const BiSeries &a);
BiSeries mul(const BiSeries &a, const BiSeries &b);
BiSeries pow(const BiSeries &a, std::int64_t e);
BiSeries sign_twist(const BiSeries &a);

inline BiSeries operator+(const BiSeries &a, const BiSeries &b) { return add(a, b); }
inline BiSeries operator-(const BiSeries &a, const BiSeries &b) { return sub(a, b); }
inline BiSeries operator*(const BiSeries &a, const BiSeries &b) { return mul(a, b); }

// One factor (1 + c * q0^a * q1^b)^e of a product expansion.
struct BinomialFactor {
    std::int64_t c = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t e = 1;
};

// Product over a finite factor list. Factors whose monomial lies outside the
// box are identity in the quotient ring and are skipped.
BiSeries expand_binomial_product(TruncationBox box, std::span<const BinomialFactor> factors);

// Product over an infinite family k = first, first + 1, ... The family is
// consumed until the first factor whose monomial leaves the box; every later
// factor must lie outside the box as well (families with monotone exponents).
using FactorFamily = std::function<BinomialFactor(std::int64_t)>;
BiSeries expand_binomial_product(TruncationBox box, const FactorFamily &family, std::int64_t first = 1);

// Integer 2x2 matrix acting on column vectors (v0, v1).
using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

constexpr Bidegree apply(const IntMatrix2 &m, const Bidegree &d) noexcept
{
    return {m[0][0] * d.v0 + m[0][1] * d.v1, m[1][0] * d.v0 + m[1][1] * d.v1};
}

constexpr std::int64_t determinant(const IntMatrix2 &m) noexcept
{
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// Moves the coefficient at v to M v. Images outside new_box are dropped;
// coincident images are summed. A negative image component throws
// non_negativity_violation.
BiSeries reindex(const IntMatrix2 &m, const BiSeries &a, TruncationBox new_box);

// (q, t) view with q = q0 q1 and t = q1^{-1}: (v0, v1) -> (n, d) = (v0, v0 - v1).
using QtTable = std::map<std::pair<std::int64_t, std::int64_t>, Integer>;
QtTable to_qt(const BiSeries &a);

// Human-readable form, e.g. "1 + q0 - 2*q0^2*q1".
std::string to_string(const BiSeries &a, const std::string &x0 = "q0", const std::string &x1 = "q1");

// First bidegree (canonical order) where a and b differ; boxes must match.
std::optional<Bidegree> first_difference(const BiSeries &a, const BiSeries &b);

// Coefficientwise restriction to bidegrees in a smaller box.
BiSeries restrict_to(const BiSeries &a, TruncationBox box);

} // namespace wallcross

#endif
