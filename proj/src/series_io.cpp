#include <wallcross/series_io.hpp>

#include <string>
#include <vector>

namespace wallcross
{

nlohmann::json series_to_json(const BiSeries &a)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[d, c] : a.terms()) {
        terms.push_back(nlohmann::json::array({d.v0, d.v1, c.get_str()}));
    }
    return {{"box", {a.box().n0_max, a.box().n1_max}}, {"terms", std::move(terms)}};
}

BiSeries series_from_json(const nlohmann::json &j)
{
    try {
        const auto &box_json = j.at("box");
        if (!box_json.is_array() || box_json.size() != 2) {
            throw invalid_terms("\"box\" must be a two-element array");
        }
        const TruncationBox box{box_json[0].get<std::int64_t>(), box_json[1].get<std::int64_t>()};
        std::vector<Term> terms;
        for (const auto &t : j.at("terms")) {
            if (!t.is_array() || t.size() != 3 || !t[2].is_string()) {
                throw invalid_terms("each term must be [v0, v1, \"coefficient\"]");
            }
            Integer c;
            if (c.set_str(t[2].get<std::string>(), 10) != 0) {
                throw invalid_terms("coefficient is not a decimal integer: " + t[2].get<std::string>());
            }
            terms.emplace_back(Bidegree{t[0].get<std::int64_t>(), t[1].get<std::int64_t>()}, std::move(c));
        }
        return BiSeries::make(box, terms);
    } catch (const nlohmann::json::exception &e) {
        throw invalid_terms(std::string("malformed series JSON: ") + e.what());
    }
}

nlohmann::json qt_to_json(const QtTable &table)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &[key, c] : table) {
        entries.push_back(nlohmann::json::array({key.first, key.second, c.get_str()}));
    }
    return {{"entries", std::move(entries)}};
}

} // namespace wallcross
