#include <wallcross/oracle.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace wallcross::oracle
{

namespace
{

std::string describe(const CountVector &v)
{
    return "(" + std::to_string(v.na1) + "," + std::to_string(v.na2) + "," + std::to_string(v.nb1) + "," +
           std::to_string(v.nb2) + ")";
}

// One-letter extensions of a path.
std::vector<CountVector> extensions(const CountVector &v)
{
    if (v.is_black()) {
        return {{v.na1, v.na2, v.nb1 + 1, v.nb2}, {v.na1, v.na2, v.nb1, v.nb2 + 1}};
    }
    return {{v.na1 + 1, v.na2, v.nb1, v.nb2}, {v.na1, v.na2 + 1, v.nb1, v.nb2}};
}

struct Color {
    std::int64_t white = 0;
    std::int64_t black = 0;
};

bool fits(const Color &c, const TruncationBox &box, const std::optional<std::int64_t> &max_stones)
{
    return c.white <= box.n0_max && c.black <= box.n1_max && (!max_stones || c.white + c.black <= *max_stones);
}

Color count(const std::set<CountVector> &s)
{
    Color c;
    for (const auto &v : s) {
        (v.is_black() ? c.black : c.white) += 1;
    }
    return c;
}

} // namespace

std::vector<CountVector> parents(const CountVector &v)
{
    if (!v.valid()) {
        throw invalid_count_vector("invalid count vector " + describe(v));
    }
    std::vector<CountVector> out;
    if (v.is_black()) {
        if (v.na1 > 0) {
            out.push_back({v.na1 - 1, v.na2, v.nb1, v.nb2});
        }
        if (v.na2 > 0) {
            out.push_back({v.na1, v.na2 - 1, v.nb1, v.nb2});
        }
    } else {
        if (v.nb1 > 0) {
            out.push_back({v.na1, v.na2, v.nb1 - 1, v.nb2});
        }
        if (v.nb2 > 0) {
            out.push_back({v.na1, v.na2, v.nb1, v.nb2 - 1});
        }
    }
    return out;
}

std::vector<Ideal> list_ideals(TruncationBox box, std::optional<std::int64_t> max_stones)
{
    // Grow ideals one element at a time, deduplicating each generation.
    std::vector<Ideal> all;
    std::set<std::set<CountVector>> generation{{}};
    while (!generation.empty()) {
        std::set<std::set<CountVector>> next;
        for (const auto &ideal : generation) {
            all.emplace_back(ideal.begin(), ideal.end());
            std::set<CountVector> frontier;
            if (ideal.empty()) {
                frontier.insert(CountVector{});
            }
            for (const auto &v : ideal) {
                for (const auto &w : extensions(v)) {
                    if (!ideal.contains(w)) {
                        frontier.insert(w);
                    }
                }
            }
            for (const auto &w : frontier) {
                const auto ps = parents(w);
                if (!std::all_of(ps.begin(), ps.end(), [&](const CountVector &p) { return ideal.contains(p); })) {
                    continue;
                }
                auto grown = ideal;
                grown.insert(w);
                if (fits(count(grown), box, max_stones)) {
                    next.insert(std::move(grown));
                }
            }
        }
        generation = std::move(next);
    }
    return all;
}

BiSeries enumerate_ideals(TruncationBox box, std::optional<std::int64_t> max_stones)
{
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> tally;
    for (const auto &ideal : list_ideals(box, max_stones)) {
        std::int64_t white = 0;
        std::int64_t black = 0;
        for (const auto &v : ideal) {
            (v.is_black() ? black : white) += 1;
        }
        ++tally[{white, black}];
    }
    std::vector<Term> terms;
    for (const auto &[key, n] : tally) {
        terms.emplace_back(Bidegree{key.first, key.second}, Integer(static_cast<long>(n)));
    }
    return BiSeries::make(box, terms);
}

bool closed_under_central_division(const Ideal &ideal)
{
    const std::set<CountVector> members(ideal.begin(), ideal.end());
    for (const auto &w : ideal) {
        const CountVector shifted{w.na1 - 1, w.na2 - 1, w.nb1 - 1, w.nb2 - 1};
        if (shifted.valid() && !members.contains(shifted)) {
            return false;
        }
    }
    return true;
}

} // namespace wallcross::oracle
