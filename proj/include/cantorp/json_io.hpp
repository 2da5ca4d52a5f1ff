#pragma once

#include <json.hpp>

#include "cantorp/expansion.hpp"
#include "cantorp/harness.hpp"
#include "cantorp/repunit.hpp"

namespace cantorp {

using Json = nlohmann::ordered_json;

// Wire formats. Rationals render as lowest-terms "a/b" strings ("a" when
// integral); values that may exceed machine words render as strings.

Json to_json(const DigitExpansion& e);
Json to_json(const MembershipVerdict& v);
Json to_json(const OpenInterval& interval);
Json to_json(const SieveTrace& trace);
Json to_json(const RepunitCandidate& candidate);
Json to_json(const OracleRow& row);
Json to_json(const VerificationReport& report, bool include_rows = false);
Json to_json(const ReproduceReport& report);
Json to_json(const ConjectureScan& scan);

const char* primality_label(Primality kind);
const char* verdict_label(Verdict kind);

}  // namespace cantorp
