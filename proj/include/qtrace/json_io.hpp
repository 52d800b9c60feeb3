#pragma once

#include "json.hpp"

#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace {

/// Rationals travel as ["num", "den"] with decimal strings, so any magnitude survives.
nlohmann::json to_json_value(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"order": N, "coeffs": [["num","den"], ...]}
nlohmann::json to_json_value(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

} // namespace qtrace
