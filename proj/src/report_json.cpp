#include "qtrace/report_json.hpp"

#include "qtrace/json_io.hpp"

namespace qtrace::verify {

namespace {

nlohmann::json param_value(const Rational& v)
{
    if (v.is_integer() && v.num().fits_slong_p())
        return v.num().get_si();
    return qtrace::to_json_value(v);
}

Rational param_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    return rational_from_json(j);
}

Status status_from_string(const std::string& s)
{
    if (s == "verified")
        return Status::verified;
    if (s == "mismatch")
        return Status::mismatch;
    if (s == "error")
        return Status::error;
    throw std::invalid_argument("unknown report status '" + s + "'");
}

} // namespace

nlohmann::json to_json_value(const VerificationReport& r)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = param_value(v);
    nlohmann::json mismatch = nullptr;
    if (r.first_mismatch)
        mismatch = {{"n", r.first_mismatch->n},
                    {"lhs", qtrace::to_json_value(r.first_mismatch->lhs)},
                    {"rhs", qtrace::to_json_value(r.first_mismatch->rhs)}};
    nlohmann::json out = nlohmann::json::object();
    out["theorem"] = r.theorem_id;
    out["params"] = std::move(params);
    out["order"] = r.order;
    out["status"] = to_string(r.status);
    out["first_mismatch"] = std::move(mismatch);
    out["elapsed_ms"] = r.elapsed.count();
    return out;
}

VerificationReport report_from_json(const nlohmann::json& j)
{
    VerificationReport r;
    r.theorem_id = j.at("theorem").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.parameters[k] = param_from_json(v);
    r.order = j.at("order").get<std::size_t>();
    r.status = status_from_string(j.at("status").get<std::string>());
    const auto& m = j.at("first_mismatch");
    if (!m.is_null())
        r.first_mismatch = Mismatch{m.at("n").get<std::size_t>(), rational_from_json(m.at("lhs")),
                                    rational_from_json(m.at("rhs")), ""};
    r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long>());
    return r;
}

nlohmann::json to_json_value(const std::vector<VerificationReport>& reports)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports)
        out.push_back(to_json_value(r));
    return out;
}

nlohmann::json to_json_value(const QuasimodularCertificate& c)
{
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < c.basis.size(); ++i)
        terms.push_back({{"basis", c.basis[i]}, {"coefficient", qtrace::to_json_value(c.coefficients[i])}});
    nlohmann::json out = nlohmann::json::object();
    out["level"] = c.level;
    out["weight_bound"] = c.weight_bound;
    out["residual_order"] = c.residual_order;
    out["terms"] = std::move(terms);
    return out;
}

std::string summary_line(const VerificationReport& r)
{
    std::string line = to_string(r.status) + " " + r.theorem_id;
    for (const auto& [k, v] : r.parameters)
        line += " " + k + "=" + v.str();
    line += " order=" + std::to_string(r.order);
    if (r.first_mismatch)
        line += " first_mismatch: n=" + std::to_string(r.first_mismatch->n) + " lhs=" + r.first_mismatch->lhs.str() +
                " rhs=" + r.first_mismatch->rhs.str() +
                (r.first_mismatch->sides.empty() ? "" : " (" + r.first_mismatch->sides + ")");
    if (r.status == Status::error && !r.message.empty())
        line += " error: " + r.message;
    return line;
}

} // namespace qtrace::verify
