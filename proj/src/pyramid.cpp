#include <wallcross/pyramid.hpp>

#include <algorithm>

#include <wallcross/pyramid_kernels.hpp>

namespace wallcross
{

namespace
{

// Inclusive bounds of (i, j) in a layer; imax < 0 when the layer is empty.
struct LayerBounds {
    std::int64_t imax = -1;
    std::int64_t jmax = -1;
};

LayerBounds bounds(const ErcSpec &spec, std::int64_t layer)
{
    if (layer < 0) {
        return {};
    }
    const std::int64_t k = layer / 2;
    const bool even = layer % 2 == 0;
    const std::int64_t m = spec.m;
    if (spec.kind == ErcKind::infinite_pyramid) {
        return {even ? m + k - 1 : m + k, k};
    }
    if (even) {
        return k <= m - 1 ? LayerBounds{m - k - 1, k} : LayerBounds{};
    }
    return k <= m - 2 ? LayerBounds{m - k - 2, k} : LayerBounds{};
}

std::string describe(const Stone &s)
{
    return "(" + std::to_string(s.layer) + ";" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

} // namespace

ErcSpec::ErcSpec(ErcKind kind_, std::int64_t m_) : kind(kind_), m(m_)
{
    if (m < 1) {
        throw std::invalid_argument("pyramid length must be >= 1");
    }
}

bool is_member(const ErcSpec &spec, const Stone &s)
{
    const LayerBounds b = bounds(spec, s.layer);
    return s.i >= 0 && s.j >= 0 && s.i <= b.imax && s.j <= b.jmax;
}

StoneColor color_of(const ErcSpec &spec, const Stone &s)
{
    const bool even = s.layer % 2 == 0;
    if (spec.kind == ErcKind::infinite_pyramid) {
        return even ? StoneColor::white : StoneColor::black;
    }
    return even ? StoneColor::black : StoneColor::white;
}

std::int64_t layer_size(const ErcSpec &spec, std::int64_t layer)
{
    const LayerBounds b = bounds(spec, layer);
    return b.imax < 0 ? 0 : (b.imax + 1) * (b.jmax + 1);
}

std::optional<std::int64_t> last_layer(const ErcSpec &spec)
{
    if (spec.kind == ErcKind::infinite_pyramid) {
        return std::nullopt;
    }
    // Black layer 2(m-1) is the deepest; white layers stop at 2(m-2)+1.
    return 2 * (spec.m - 1);
}

std::vector<Stone> stones_in_layer(const ErcSpec &spec, std::int64_t layer)
{
    std::vector<Stone> out;
    const LayerBounds b = bounds(spec, layer);
    for (std::int64_t i = 0; i <= b.imax; ++i) {
        for (std::int64_t j = 0; j <= b.jmax; ++j) {
            out.push_back({layer, i, j});
        }
    }
    return out;
}

std::vector<Stone> above_neighbors(const ErcSpec &spec, const Stone &s)
{
    if (!is_member(spec, s)) {
        throw not_in_erc("stone " + describe(s) + " is not in " + to_label(spec));
    }
    if (s.layer == 0) {
        return {};
    }
    const std::int64_t up = s.layer - 1;
    std::vector<Stone> candidates;
    // Layers alternate orientation: odd layers sit under two stones that
    // differ in i, even layers under two that differ in j.
    if (s.layer % 2 == 1) {
        if (spec.kind == ErcKind::infinite_pyramid) {
            candidates = {{up, s.i - 1, s.j}, {up, s.i, s.j}};
        } else {
            candidates = {{up, s.i, s.j}, {up, s.i + 1, s.j}};
        }
    } else {
        candidates = {{up, s.i, s.j - 1}, {up, s.i, s.j}};
    }
    std::vector<Stone> out;
    for (const auto &c : candidates) {
        if (is_member(spec, c)) {
            out.push_back(c);
        }
    }
    return out;
}

IntMatrix2 stone_matrix(const ErcSpec &spec)
{
    const std::int64_t m = spec.m;
    if (spec.kind == ErcKind::finite_type) {
        return {{{m - 1, -m}, {m, -(m + 1)}}};
    }
    return {{{m, -(m - 1)}, {m + 1, -m}}};
}

BiSeries enumerate_counts(const ErcSpec &spec, TruncationBox box)
{
    return enumerate_counts(spec, EnumerationLimits{box, std::nullopt});
}

BiSeries enumerate_counts(const ErcSpec &spec, const EnumerationLimits &limits)
{
    const auto poset = kernels::build_poset(spec, limits);
    return kernels::to_series(kernels::count_ideals_parallel(poset, limits));
}

std::vector<PyramidPartition> list_partitions(const ErcSpec &spec, const EnumerationLimits &limits)
{
    const auto poset = kernels::build_poset(spec, limits);
    const std::size_t n = poset.stones.size();
    std::vector<std::uint32_t> missing(n);
    for (std::size_t s = 0; s < n; ++s) {
        missing[s] = static_cast<std::uint32_t>(poset.parents[s].size());
    }
    std::vector<PyramidPartition> out;
    std::vector<std::uint32_t> chosen;
    std::int64_t white = 0;
    std::int64_t black = 0;

    const auto emit = [&] {
        PyramidPartition p;
        for (const auto idx : chosen) {
            p.stones.push_back(poset.stones[idx]);
        }
        std::sort(p.stones.begin(), p.stones.end());
        p.counts = {white, black};
        out.push_back(std::move(p));
    };
    const auto recurse = [&](const auto &self, const std::vector<std::uint32_t> &candidates) -> void {
        emit();
        for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
            const std::uint32_t x = candidates[pos];
            const bool w = poset.white[x] != 0;
            if (!limits.admits(white + (w ? 1 : 0), black + (w ? 0 : 1))) {
                continue;
            }
            std::vector<std::uint32_t> next(candidates.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                            candidates.end());
            for (const auto c : poset.children[x]) {
                if (--missing[c] == 0) {
                    next.push_back(c);
                }
            }
            std::sort(next.begin(), next.end());
            (w ? white : black) += 1;
            chosen.push_back(x);
            self(self, next);
            chosen.pop_back();
            (w ? white : black) -= 1;
            for (const auto c : poset.children[x]) {
                ++missing[c];
            }
        }
    };
    std::vector<std::uint32_t> roots;
    for (std::size_t s = 0; s < n; ++s) {
        if (missing[s] == 0) {
            roots.push_back(static_cast<std::uint32_t>(s));
        }
    }
    recurse(recurse, roots);
    return out;
}

nlohmann::json partitions_to_json(const std::vector<PyramidPartition> &partitions)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &p : partitions) {
        nlohmann::json stones = nlohmann::json::array();
        for (const auto &s : p.stones) {
            stones.push_back({s.layer, s.i, s.j});
        }
        out.push_back(std::move(stones));
    }
    return out;
}

std::string to_label(const ErcSpec &spec)
{
    return std::string(spec.kind == ErcKind::finite_type ? "finite" : "infinite") + ":" + std::to_string(spec.m);
}

} // namespace wallcross
