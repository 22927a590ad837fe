#pragma once

#include <string>

#include "json.hpp"
#include "thermoid/prover/verify.hpp"

namespace thermoid::prover {

/// Deterministic "key: value" text, one field per line.
std::string format_report(const VerificationReport& report);

/// Same fields as format_report.
nlohmann::json report_json(const VerificationReport& report);

}  // namespace thermoid::prover
