#include <wallcross/series.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

#include <wallcross/series_kernels.hpp>

namespace wallcross
{

namespace
{

constexpr std::int64_t max_box_cells = std::int64_t{1} << 26;

std::size_t checked_cells(const TruncationBox &box)
{
    if (box.n0_max < 0 || box.n1_max < 0) {
        throw invalid_box("truncation box dimensions must be nonnegative");
    }
    if (box.rows() > max_box_cells / box.cols()) {
        throw invalid_box("truncation box has too many cells");
    }
    return static_cast<std::size_t>(box.rows() * box.cols());
}

void require_same_box(const BiSeries &a, const BiSeries &b)
{
    if (!(a.box() == b.box())) {
        throw box_mismatch("series have different truncation boxes");
    }
}

std::string describe(const Bidegree &d)
{
    return "(" + std::to_string(d.v0) + "," + std::to_string(d.v1) + ")";
}

// (1 + c q0^a q1^b)^e by the binomial series, e of either sign, (a, b) != (0, 0).
BiSeries binomial_power(const TruncationBox &box, const BinomialFactor &f)
{
    std::vector<Integer> dense(checked_cells(box));
    const std::size_t cols = static_cast<std::size_t>(box.cols());
    const Integer c = Integer(static_cast<long>(f.c));
    Integer coeff = 1; // C(e, k) c^k, with generalized binomial C(e, k)
    for (std::int64_t k = 0;; ++k) {
        const Bidegree d{k * f.a, k * f.b};
        if (!box.contains(d) || coeff == 0) {
            break;
        }
        dense[static_cast<std::size_t>(d.v0) * cols + static_cast<std::size_t>(d.v1)] = coeff;
        // C(e, k+1) = C(e, k) (e - k) / (k + 1)
        coeff *= c;
        coeff *= Integer(static_cast<long>(f.e - k));
        mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return BiSeries::from_dense(box, std::move(dense));
}

} // namespace

BiSeries::BiSeries(TruncationBox box) : box_(box), coeffs_(checked_cells(box)) {}

BiSeries BiSeries::make(TruncationBox box, std::span<const Term> terms)
{
    std::vector<Bidegree> seen;
    seen.reserve(terms.size());
    for (const auto &[d, c] : terms) {
        seen.push_back(d);
    }
    std::sort(seen.begin(), seen.end());
    if (const auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
        throw invalid_terms("duplicate bidegree " + describe(*dup) + " in term list");
    }
    BiSeries out(box);
    for (const auto &[d, c] : terms) {
        if (d.v0 < 0 || d.v1 < 0) {
            throw invalid_terms("negative exponent " + describe(d) + " in term list");
        }
        if (box.contains(d)) {
            out.coeffs_[out.index(d)] = c;
        }
    }
    return out;
}

BiSeries BiSeries::one(TruncationBox box)
{
    return monomial(box, {0, 0}, 1);
}

BiSeries BiSeries::monomial(TruncationBox box, Bidegree d, const Integer &coeff)
{
    BiSeries out(box);
    if (d.v0 < 0 || d.v1 < 0) {
        throw invalid_terms("negative exponent " + describe(d));
    }
    if (box.contains(d)) {
        out.coeffs_[out.index(d)] = coeff;
    }
    return out;
}

BiSeries BiSeries::from_dense(TruncationBox box, std::vector<Integer> dense)
{
    BiSeries out(box);
    if (dense.size() != out.coeffs_.size()) {
        throw invalid_terms("dense table size does not match the box");
    }
    out.coeffs_ = std::move(dense);
    return out;
}

Integer BiSeries::coefficient(Bidegree d) const
{
    if (!box_.contains(d)) {
        return 0;
    }
    return coeffs_[index(d)];
}

std::vector<Term> BiSeries::terms() const
{
    std::vector<Term> out;
    for (std::int64_t v0 = 0; v0 <= box_.n0_max; ++v0) {
        for (std::int64_t v1 = 0; v1 <= box_.n1_max; ++v1) {
            const Integer &c = coeffs_[index({v0, v1})];
            if (c != 0) {
                out.emplace_back(Bidegree{v0, v1}, c);
            }
        }
    }
    return out;
}

std::size_t BiSeries::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c != 0; }));
}

bool BiSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c == 0; });
}

bool operator==(const BiSeries &a, const BiSeries &b)
{
    return a.box_ == b.box_ && a.coeffs_ == b.coeffs_;
}

BiSeries add(const BiSeries &a, const BiSeries &b)
{
    require_same_box(a, b);
    std::vector<Integer> out(a.dense().begin(), a.dense().end());
    const auto rhs = b.dense();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += rhs[i];
    }
    return BiSeries::from_dense(a.box(), std::move(out));
}

BiSeries sub(const BiSeries &a, const BiSeries &b)
{
    return add(a, negate(b));
}

BiSeries negate(const BiSeries &a)
{
    std::vector<Integer> out(a.dense().begin(), a.dense().end());
    for (auto &c : out) {
        c = -c;
    }
    return BiSeries::from_dense(a.box(), std::move(out));
}

BiSeries mul(const BiSeries &a, const BiSeries &b)
{
    require_same_box(a, b);
    if (a.dense().size() >= kernels::parallel_mul_cells) {
        return kernels::mul_parallel(a, b);
    }
    return kernels::mul_serial(a, b);
}

BiSeries pow(const BiSeries &a, std::int64_t e)
{
    const TruncationBox &box = a.box();
    if (e < 0) {
        const Integer c0 = a.coefficient({0, 0});
        if (c0 != 1 && c0 != -1) {
            throw not_invertible("negative power of a series whose constant term is not +1 or -1");
        }
        // a = c0 (1 + x) with x(0,0) = 0; (1 + x)^{-1} = sum_k (-x)^k, and x^k
        // vanishes in the box once k exceeds n0_max + n1_max.
        const BiSeries unit = c0 == 1 ? a : negate(a);
        const BiSeries minus_x = sub(BiSeries::one(box), unit);
        BiSeries inverse = BiSeries::one(box);
        BiSeries term = BiSeries::one(box);
        for (std::int64_t k = 1; k <= box.n0_max + box.n1_max; ++k) {
            term = mul(term, minus_x);
            if (term.is_zero()) {
                break;
            }
            inverse = add(inverse, term);
        }
        if (c0 == -1) {
            inverse = negate(inverse);
        }
        if (e == std::numeric_limits<std::int64_t>::min()) {
            throw series_error("exponent out of range");
        }
        return pow(inverse, -e);
    }
    BiSeries result = BiSeries::one(box);
    BiSeries base = a;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

BiSeries sign_twist(const BiSeries &a)
{
    std::vector<Integer> out(a.dense().begin(), a.dense().end());
    const std::size_t cols = static_cast<std::size_t>(a.box().cols());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((i % cols) % 2 == 1) {
            out[i] = -out[i];
        }
    }
    return BiSeries::from_dense(a.box(), std::move(out));
}

BiSeries expand_binomial_product(TruncationBox box, std::span<const BinomialFactor> factors)
{
    BiSeries result = BiSeries::one(box);
    for (const auto &f : factors) {
        if (f.a < 0 || f.b < 0) {
            throw invalid_terms("factor monomial has a negative exponent");
        }
        if (f.a == 0 && f.b == 0) {
            const BiSeries constant = BiSeries::monomial(box, {0, 0}, 1 + Integer(static_cast<long>(f.c)));
            result = mul(result, pow(constant, f.e));
            continue;
        }
        if (!box.contains({f.a, f.b}) || f.e == 0 || f.c == 0) {
            continue;
        }
        result = mul(binomial_power(box, f), result);
    }
    return result;
}

BiSeries expand_binomial_product(TruncationBox box, const FactorFamily &family, std::int64_t first)
{
    std::vector<BinomialFactor> factors;
    for (std::int64_t k = first;; ++k) {
        const BinomialFactor f = family(k);
        if (f.a == 0 && f.b == 0) {
            throw invalid_terms("factor family contains the constant monomial");
        }
        if (!box.contains({f.a, f.b})) {
            break;
        }
        factors.push_back(f);
    }
    return expand_binomial_product(box, factors);
}

BiSeries reindex(const IntMatrix2 &m, const BiSeries &a, TruncationBox new_box)
{
    BiSeries out(new_box);
    std::vector<Integer> dense(out.dense().size());
    const std::size_t cols = static_cast<std::size_t>(new_box.cols());
    for (const auto &[d, c] : a.terms()) {
        const Bidegree image = apply(m, d);
        if (image.v0 < 0 || image.v1 < 0) {
            throw non_negativity_violation("bidegree " + describe(d) + " maps to " + describe(image));
        }
        if (new_box.contains(image)) {
            dense[static_cast<std::size_t>(image.v0) * cols + static_cast<std::size_t>(image.v1)] += c;
        }
    }
    return BiSeries::from_dense(new_box, std::move(dense));
}

QtTable to_qt(const BiSeries &a)
{
    QtTable out;
    for (const auto &[d, c] : a.terms()) {
        out.emplace(std::pair{d.v0, d.v0 - d.v1}, c);
    }
    return out;
}

std::string to_string(const BiSeries &a, const std::string &x0, const std::string &x1)
{
    const auto terms = a.terms();
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[d, c] : terms) {
        const bool negative = c < 0;
        const Integer magnitude = abs(c);
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (magnitude != 1 || (d.v0 == 0 && d.v1 == 0)) {
            factors.push_back(magnitude.get_str());
        }
        if (d.v0 > 0) {
            factors.push_back(d.v0 == 1 ? x0 : x0 + "^" + std::to_string(d.v0));
        }
        if (d.v1 > 0) {
            factors.push_back(d.v1 == 1 ? x1 : x1 + "^" + std::to_string(d.v1));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            os << (i ? "*" : "") << factors[i];
        }
    }
    return os.str();
}

std::optional<Bidegree> first_difference(const BiSeries &a, const BiSeries &b)
{
    require_same_box(a, b);
    const TruncationBox &box = a.box();
    for (std::int64_t v0 = 0; v0 <= box.n0_max; ++v0) {
        for (std::int64_t v1 = 0; v1 <= box.n1_max; ++v1) {
            if (a.coefficient({v0, v1}) != b.coefficient({v0, v1})) {
                return Bidegree{v0, v1};
            }
        }
    }
    return std::nullopt;
}

BiSeries restrict_to(const BiSeries &a, TruncationBox box)
{
    std::vector<Term> kept;
    for (auto &t : a.terms()) {
        if (box.contains(t.first)) {
            kept.push_back(std::move(t));
        }
    }
    return BiSeries::make(box, kept);
}

} // namespace wallcross
