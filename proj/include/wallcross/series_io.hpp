#ifndef WALLCROSS_SERIES_IO_HPP
#define WALLCROSS_SERIES_IO_HPP

#include <json.hpp>

#include <wallcross/series.hpp>

namespace wallcross
{

// {"box":[n0_max,n1_max],"terms":[[v0,v1,"<decimal>"],...]}, terms in
// canonical (v0, v1) order, coefficients as decimal strings.
nlohmann::json series_to_json(const BiSeries &a);

// Inverse of series_to_json. Throws invalid_terms on malformed input.
BiSeries series_from_json(const nlohmann::json &j);

// {"entries":[[n,d,"<decimal>"],...]} in (n, d) order.
nlohmann::json qt_to_json(const QtTable &table);

} // namespace wallcross

#endif
