#include <wallcross/pyramid_kernels.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include <omp.h>

namespace wallcross::kernels
{

namespace
{

IdealCounts empty_counts(const TruncationBox &box)
{
    IdealCounts out;
    out.box = box;
    out.counts.assign(static_cast<std::size_t>(box.rows() * box.cols()), 0);
    return out;
}

struct SearchState {
    std::vector<std::uint32_t> missing; // parents not yet in the ideal
    std::int64_t white = 0;
    std::int64_t black = 0;
};

struct Task {
    std::vector<std::uint32_t> added;
    std::vector<std::uint32_t> candidates;
    std::int64_t white = 0;
    std::int64_t black = 0;
};

class ReverseSearch
{
public:
    ReverseSearch(const StonePoset &poset, const EnumerationLimits &limits) : poset_(poset), limits_(limits) {}

    std::vector<std::uint32_t> initial_missing() const
    {
        std::vector<std::uint32_t> missing(poset_.stones.size());
        for (std::size_t s = 0; s < missing.size(); ++s) {
            missing[s] = static_cast<std::uint32_t>(poset_.parents[s].size());
        }
        return missing;
    }

    std::vector<std::uint32_t> roots() const
    {
        std::vector<std::uint32_t> out;
        for (std::size_t s = 0; s < poset_.stones.size(); ++s) {
            if (poset_.parents[s].empty()) {
                out.push_back(static_cast<std::uint32_t>(s));
            }
        }
        return out;
    }

    bool admits(const SearchState &st, std::uint32_t x) const
    {
        const bool w = poset_.white[x] != 0;
        return limits_.admits(st.white + (w ? 1 : 0), st.black + (w ? 0 : 1));
    }

    // Candidates after adding candidates[pos]; updates the missing-parent counts.
    std::vector<std::uint32_t> add(SearchState &st, const std::vector<std::uint32_t> &candidates,
                                   std::size_t pos) const
    {
        const std::uint32_t x = candidates[pos];
        std::vector<std::uint32_t> next(candidates.begin() + static_cast<std::ptrdiff_t>(pos) + 1, candidates.end());
        const std::size_t kept = next.size();
        for (const auto c : poset_.children[x]) {
            if (--st.missing[c] == 0) {
                next.push_back(c);
            }
        }
        std::inplace_merge(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(kept), next.end());
        (poset_.white[x] ? st.white : st.black) += 1;
        return next;
    }

    void remove(SearchState &st, std::uint32_t x) const
    {
        for (const auto c : poset_.children[x]) {
            ++st.missing[c];
        }
        (poset_.white[x] ? st.white : st.black) -= 1;
    }

    void run(SearchState &st, const std::vector<std::uint32_t> &candidates, IdealCounts &out) const
    {
        ++out.visited;
        ++out.counts[static_cast<std::size_t>(st.white * out.box.cols() + st.black)];
        for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
            if (!admits(st, candidates[pos])) {
                continue;
            }
            const auto next = add(st, candidates, pos);
            run(st, next, out);
            remove(st, candidates[pos]);
        }
    }

private:
    const StonePoset &poset_;
    const EnumerationLimits &limits_;
};

} // namespace

std::uint64_t IdealCounts::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

StonePoset build_poset(const ErcSpec &spec, const EnumerationLimits &limits)
{
    StonePoset poset;
    std::int64_t cap = limits.box.n0_max + limits.box.n1_max;
    if (limits.max_stones) {
        cap = std::min(cap, *limits.max_stones);
    }
    // A stone in layer l needs at least l + 1 stones removed with it.
    std::int64_t deepest = cap - 1;
    if (const auto last = last_layer(spec)) {
        deepest = std::min(deepest, *last);
    }

    std::map<Stone, std::uint32_t> index;
    std::vector<std::uint32_t> stamp;
    std::vector<std::uint32_t> stack;
    std::uint32_t generation = 0;

    for (std::int64_t layer = 0; layer <= deepest; ++layer) {
        bool any = false;
        for (const auto &s : stones_in_layer(spec, layer)) {
            std::vector<std::uint32_t> parents;
            bool parents_kept = true;
            for (const auto &p : above_neighbors(spec, s)) {
                const auto it = index.find(p);
                if (it == index.end()) {
                    parents_kept = false;
                    break;
                }
                parents.push_back(it->second);
            }
            if (!parents_kept) {
                continue;
            }
            // Size of the up-closure of s, by color.
            ++generation;
            stamp.resize(poset.stones.size(), 0);
            std::int64_t white = color_of(spec, s) == StoneColor::white ? 1 : 0;
            std::int64_t black = 1 - white;
            stack.assign(parents.begin(), parents.end());
            while (!stack.empty()) {
                const std::uint32_t t = stack.back();
                stack.pop_back();
                if (stamp[t] == generation) {
                    continue;
                }
                stamp[t] = generation;
                (poset.white[t] ? white : black) += 1;
                for (const auto p : poset.parents[t]) {
                    stack.push_back(p);
                }
            }
            if (!limits.admits(white, black)) {
                continue;
            }
            const auto idx = static_cast<std::uint32_t>(poset.stones.size());
            index.emplace(s, idx);
            poset.stones.push_back(s);
            poset.white.push_back(color_of(spec, s) == StoneColor::white ? 1 : 0);
            poset.parents.push_back(parents);
            poset.children.emplace_back();
            for (const auto p : parents) {
                poset.children[p].push_back(idx);
            }
            any = true;
        }
        if (!any) {
            break;
        }
    }
    return poset;
}

IdealCounts count_ideals_serial(const StonePoset &poset, const EnumerationLimits &limits)
{
    IdealCounts out = empty_counts(limits.box);
    const std::size_t n = poset.stones.size();
    std::vector<std::uint8_t> in(n, 0);
    const auto recurse = [&](const auto &self, std::size_t next, std::int64_t white, std::int64_t black) -> void {
        ++out.visited;
        if (next == n) {
            ++out.counts[static_cast<std::size_t>(white * limits.box.cols() + black)];
            return;
        }
        self(self, next + 1, white, black);
        const bool parents_in = std::all_of(poset.parents[next].begin(), poset.parents[next].end(),
                                            [&](std::uint32_t p) { return in[p] != 0; });
        const bool w = poset.white[next] != 0;
        if (parents_in && limits.admits(white + (w ? 1 : 0), black + (w ? 0 : 1))) {
            in[next] = 1;
            self(self, next + 1, white + (w ? 1 : 0), black + (w ? 0 : 1));
            in[next] = 0;
        }
    };
    recurse(recurse, 0, 0, 0);
    return out;
}

IdealCounts count_ideals_parallel(const StonePoset &poset, const EnumerationLimits &limits)
{
    const ReverseSearch search(poset, limits);
    IdealCounts out = empty_counts(limits.box);

    // Expand the top of the search tree level by level until there is enough
    // independent work to spread over the team.
    const std::size_t wanted = 32 * static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
    std::vector<Task> frontier{Task{{}, search.roots(), 0, 0}};
    for (int depth = 0; depth < 6 && !frontier.empty() && frontier.size() < wanted; ++depth) {
        std::vector<Task> next_level;
        SearchState st{search.initial_missing()};
        for (const auto &task : frontier) {
            ++out.visited;
            ++out.counts[static_cast<std::size_t>(task.white * out.box.cols() + task.black)];
            for (const auto x : task.added) {
                search.add(st, std::vector<std::uint32_t>{x}, 0);
            }
            for (std::size_t pos = 0; pos < task.candidates.size(); ++pos) {
                if (!search.admits(st, task.candidates[pos])) {
                    continue;
                }
                Task child;
                child.candidates = search.add(st, task.candidates, pos);
                child.added = task.added;
                child.added.push_back(task.candidates[pos]);
                child.white = st.white;
                child.black = st.black;
                search.remove(st, task.candidates[pos]);
                next_level.push_back(std::move(child));
            }
            for (auto it = task.added.rbegin(); it != task.added.rend(); ++it) {
                search.remove(st, *it);
            }
        }
        frontier = std::move(next_level);
    }

    const auto n_tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
    {
        IdealCounts local = empty_counts(limits.box);
        SearchState st{search.initial_missing()};
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t t = 0; t < n_tasks; ++t) {
            const Task &task = frontier[static_cast<std::size_t>(t)];
            for (const auto x : task.added) {
                search.add(st, std::vector<std::uint32_t>{x}, 0);
            }
            search.run(st, task.candidates, local);
            for (auto it = task.added.rbegin(); it != task.added.rend(); ++it) {
                search.remove(st, *it);
            }
        }
#pragma omp critical(wallcross_ideal_reduce)
        {
            for (std::size_t i = 0; i < out.counts.size(); ++i) {
                out.counts[i] += local.counts[i];
            }
            out.visited += local.visited;
        }
    }
    return out;
}

BiSeries to_series(const IdealCounts &counts)
{
    std::vector<Integer> dense(counts.counts.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        mpz_set_ui(dense[i].get_mpz_t(), static_cast<unsigned long>(counts.counts[i]));
    }
    return BiSeries::from_dense(counts.box, std::move(dense));
}

} // namespace wallcross::kernels
