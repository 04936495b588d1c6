#ifndef WALLCROSS_TEST_SUPPORT_HPP
#define WALLCROSS_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <wallcross/pyramid.hpp>
#include <wallcross/series.hpp>

namespace testsupport
{

using wallcross::BiSeries;
using wallcross::Bidegree;
using wallcross::Integer;
using wallcross::TruncationBox;

inline std::mt19937_64 &rng()
{
    static std::mt19937_64 gen(0x5eed2024);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline TruncationBox random_box(std::int64_t max_dim = 5)
{
    return {uniform(0, max_dim), uniform(0, max_dim)};
}

// Sparse random series; roughly one coefficient in ten is a large integer so
// arithmetic leaves the machine-word range.
inline BiSeries random_series(TruncationBox box, double density = 0.5)
{
    std::vector<Integer> dense(static_cast<std::size_t>(box.rows() * box.cols()));
    std::bernoulli_distribution present(density);
    for (auto &c : dense) {
        if (!present(rng())) {
            continue;
        }
        c = uniform(-9, 9);
        if (uniform(0, 9) == 0) {
            c *= Integer("123456789012345678901234567890");
        }
    }
    return BiSeries::from_dense(box, std::move(dense));
}

inline BiSeries random_unit(TruncationBox box)
{
    const BiSeries base = random_series(box);
    std::vector<Integer> dense(base.dense().begin(), base.dense().end());
    dense[0] = uniform(0, 1) == 0 ? 1 : -1;
    return BiSeries::from_dense(box, std::move(dense));
}

// Brute force over every subset of the stones in layers [0, depth]: counts the
// up-closed ones by color. Exact for total degree <= depth + 1.
inline BiSeries brute_force_counts(const wallcross::ErcSpec &spec, std::int64_t depth, TruncationBox box)
{
    std::vector<wallcross::Stone> stones;
    for (std::int64_t l = 0; l <= depth; ++l) {
        for (const auto &s : wallcross::stones_in_layer(spec, l)) {
            stones.push_back(s);
        }
    }
    const std::size_t n = stones.size();
    std::vector<std::vector<std::size_t>> covers(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (const auto &p : wallcross::above_neighbors(spec, stones[a])) {
            for (std::size_t b = 0; b < n; ++b) {
                if (stones[b] == p) {
                    covers[a].push_back(b);
                }
            }
        }
    }
    std::vector<Integer> dense(static_cast<std::size_t>(box.rows() * box.cols()));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool closed = true;
        std::int64_t white = 0;
        std::int64_t black = 0;
        for (std::size_t a = 0; a < n && closed; ++a) {
            if (!(mask >> a & 1U)) {
                continue;
            }
            for (const auto b : covers[a]) {
                closed = closed && (mask >> b & 1U);
            }
            (wallcross::color_of(spec, stones[a]) == wallcross::StoneColor::white ? white : black) += 1;
        }
        if (closed && box.contains({white, black})) {
            dense[static_cast<std::size_t>(white * box.cols() + black)] += 1;
        }
    }
    return BiSeries::from_dense(box, std::move(dense));
}

// Coefficients of prod_k (1 - x^k)^{-2k} up to x^n, via the plane partition
// recurrence n M(n) = sum sigma_2(k) M(n-k), then squared.
inline std::vector<Integer> macmahon_squared(std::int64_t n)
{
    std::vector<Integer> m(static_cast<std::size_t>(n + 1));
    m[0] = 1;
    for (std::int64_t j = 1; j <= n; ++j) {
        Integer acc = 0;
        for (std::int64_t k = 1; k <= j; ++k) {
            Integer sigma2 = 0;
            for (std::int64_t d = 1; d <= k; ++d) {
                if (k % d == 0) {
                    sigma2 += d * d;
                }
            }
            acc += sigma2 * m[static_cast<std::size_t>(j - k)];
        }
        m[static_cast<std::size_t>(j)] = acc / j;
    }
    std::vector<Integer> sq(static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i) {
        for (std::int64_t j = 0; i + j <= n; ++j) {
            sq[static_cast<std::size_t>(i + j)] += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)];
        }
    }
    return sq;
}

} // namespace testsupport

#endif
