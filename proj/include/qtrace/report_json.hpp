#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qtrace/recognize.hpp"
#include "qtrace/verify.hpp"

namespace qtrace::verify {

/// {"theorem", "params", "order", "status", "first_mismatch": {"n","lhs","rhs"} | null, "elapsed_ms"}.
/// Integer parameters are JSON integers; other rationals use ["num","den"].
nlohmann::json to_json_value(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json_value(const std::vector<VerificationReport>& reports);

nlohmann::json to_json_value(const QuasimodularCertificate& c);

/// One line, no timing: "verified v-even k=2 order=40".
std::string summary_line(const VerificationReport& r);

} // namespace qtrace::verify
