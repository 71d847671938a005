#pragma once

#include <string>

#include <json.hpp>

#include "hfam/verify.hpp"

namespace hfam {

/// One JSONL row. Serialization round-trips bit-exactly; all scalar values
/// live in `values` as strings, rationals as reduced "p/q". The timestamp is
/// empty unless wall-clock stamping was requested, keeping identical runs
/// byte-identical.
struct ReportRecord {
    int schema_version = 1;
    std::string timestamp;
    std::string check;
    int n = 0;
    std::string family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::string verdict = "pass";
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json witness;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_record(const CheckResult& result, bool with_timestamp = false);

nlohmann::ordered_json to_json(const ReportRecord& record);
ReportRecord record_from_json(const nlohmann::ordered_json& j);

/// Compact one-line JSON without a trailing newline.
std::string to_line(const ReportRecord& record);
ReportRecord record_from_line(const std::string& line);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string iso8601_now();

}  // namespace hfam
