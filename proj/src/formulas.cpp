#include <wallcross/formulas.hpp>

#include <charconv>
#include <stdexcept>
#include <vector>

namespace wallcross
{

namespace
{

std::int64_t alternating(std::int64_t k)
{
    return k % 2 == 0 ? 1 : -1;
}

void require_length(std::int64_t m)
{
    if (m < 1) {
        throw std::invalid_argument("pyramid length must be >= 1");
    }
}

BiSeries macmahon_sq(TruncationBox box)
{
    return expand_binomial_product(box, [](std::int64_t k) { return BinomialFactor{-1, k, k, -2 * k}; });
}

// prod_{m>=1} (1 - (-q)^m)^{-2m} (1 - (-q)^m t)^m with q = q0 q1, t = 1/q1.
BiSeries dt_of_y(TruncationBox box)
{
    const BiSeries degree_zero = expand_binomial_product(
        box, [](std::int64_t m) { return BinomialFactor{-alternating(m), m, m, -2 * m}; });
    const BiSeries curve = expand_binomial_product(
        box, [](std::int64_t m) { return BinomialFactor{-alternating(m), m, m - 1, m}; });
    return mul(degree_zero, curve);
}

} // namespace

TruncationBox zfin_support(std::int64_t m)
{
    require_length(m);
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    for (std::int64_t k = 1; k <= m; ++k) {
        n0 += k * (m - k);
        n1 += k * (m - k + 1);
    }
    return {n0, n1};
}

BiSeries evaluate(const FormulaId &id, TruncationBox box)
{
    switch (id.kind) {
    case FormulaKind::zfin: {
        require_length(id.m);
        std::vector<BinomialFactor> factors;
        for (std::int64_t k = 1; k <= id.m; ++k) {
            factors.push_back({1, id.m - k, id.m - k + 1, k});
        }
        return expand_binomial_product(box, factors);
    }
    case FormulaKind::zpyr: {
        require_length(id.m);
        const std::int64_t m = id.m;
        // prod_{k>=1} (1 + p0^{m+k-1} p1^{m+k})^k
        const BiSeries deep = expand_binomial_product(
            box, [m](std::int64_t k) { return BinomialFactor{1, m + k - 1, m + k, k}; });
        // prod_{k>=m} (1 + p0^{k-m+1} p1^{k-m})^k
        const BiSeries shallow = expand_binomial_product(
            box, [m](std::int64_t k) { return BinomialFactor{1, k - m + 1, k - m, k}; }, m);
        return mul(mul(macmahon_sq(box), deep), shallow);
    }
    case FormulaKind::zpt_y:
        // prod (1 + q0^m (-q1)^{m-1})^m
        return expand_binomial_product(
            box, [](std::int64_t m) { return BinomialFactor{alternating(m - 1), m, m - 1, m}; });
    case FormulaKind::zpt_yplus:
        // prod (1 + q0^m (-q1)^{m+1})^m
        return expand_binomial_product(
            box, [](std::int64_t m) { return BinomialFactor{alternating(m + 1), m, m + 1, m}; });
    case FormulaKind::zncdt:
        return mul(evaluate({FormulaKind::zpt_yplus}, box), dt_of_y(box));
    case FormulaKind::zdt_y_qt:
        return dt_of_y(box);
    case FormulaKind::macmahon_sq:
        return macmahon_sq(box);
    }
    throw std::invalid_argument("unknown formula");
}

std::string to_label(const FormulaId &id)
{
    switch (id.kind) {
    case FormulaKind::zfin:
        return "zfin:" + std::to_string(id.m);
    case FormulaKind::zpyr:
        return "zpyr:" + std::to_string(id.m);
    case FormulaKind::zpt_y:
        return "zpt_y";
    case FormulaKind::zpt_yplus:
        return "zpt_yplus";
    case FormulaKind::zncdt:
        return "zncdt";
    case FormulaKind::zdt_y_qt:
        return "zdt_y_qt";
    case FormulaKind::macmahon_sq:
        return "macmahon_sq";
    }
    return "";
}

FormulaId parse_formula(const std::string &label)
{
    if (label == "zpt_y") {
        return {FormulaKind::zpt_y};
    }
    if (label == "zpt_yplus") {
        return {FormulaKind::zpt_yplus};
    }
    if (label == "zncdt") {
        return {FormulaKind::zncdt};
    }
    if (label == "zdt_y_qt") {
        return {FormulaKind::zdt_y_qt};
    }
    if (label == "macmahon_sq") {
        return {FormulaKind::macmahon_sq};
    }
    for (const auto &[prefix, kind] : {std::pair{"zfin:", FormulaKind::zfin}, std::pair{"zpyr:", FormulaKind::zpyr}}) {
        const std::string p = prefix;
        if (label.rfind(p, 0) == 0) {
            const std::string digits = label.substr(p.size());
            std::int64_t m = 0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
                throw std::invalid_argument("bad length in formula id: " + label);
            }
            require_length(m);
            return {kind, m};
        }
    }
    throw std::invalid_argument("unknown formula id: " + label);
}

} // namespace wallcross
