#include "qtrace/json_io.hpp"

#include <stdexcept>

namespace qtrace {

nlohmann::json to_json_value(const Rational& r)
{
    return nlohmann::json::array({r.num().get_str(), r.den().get_str()});
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw std::invalid_argument("rational must be [\"num\", \"den\"]");
    const auto den = Rational::parse(j[1].get<std::string>());
    if (den.sign() <= 0)
        throw std::invalid_argument("rational denominator must be positive");
    return Rational::parse(j[0].get<std::string>()) / den;
}

nlohmann::json to_json_value(const QSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_json_value(c));
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const nlohmann::json& j)
{
    const auto order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1)
        throw std::invalid_argument("series JSON: coeffs must have order+1 entries");
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (const auto& x : coeffs)
        c.push_back(rational_from_json(x));
    return QSeries(std::move(c));
}

} // namespace qtrace
