#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "omegabound/verifier.hpp"

namespace omegabound {

/// Shortest decimal that reads back to the same double ("nan"/"inf" for non-finite).
std::string format_real(double value);

/// Inverse of format_real; throws std::invalid_argument on malformed text.
double parse_real(std::string_view text);

nlohmann::ordered_json to_json(const CheckRecord& record);
CheckRecord check_record_from_json(const nlohmann::json& j);

/// Report as JSON. With include_runtime = false the payload is fully deterministic.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_runtime = true);
VerificationReport report_from_json(const nlohmann::json& j);

std::string report_to_json_string(const VerificationReport& report, bool include_runtime = true);

/// Header plus one summary row.
std::string report_to_csv(const VerificationReport& report);

}  // namespace omegabound
