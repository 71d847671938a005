#include "hfam/report.hpp"

#include <ctime>

namespace hfam {

ReportRecord make_record(const CheckResult& result, bool with_timestamp) {
    ReportRecord record;
    if (with_timestamp) record.timestamp = iso8601_now();
    record.check = result.check;
    record.n = result.n;
    record.family = result.family;
    if (result.params.x) record.params["x"] = *result.params.x;
    if (result.params.k) record.params["k"] = *result.params.k;
    if (result.params.i) record.params["i"] = *result.params.i;
    if (result.params.j) record.params["j"] = *result.params.j;
    record.verdict = to_string(result.verdict);
    record.values = result.values;
    record.witness = result.witness;
    return record;
}

nlohmann::ordered_json to_json(const ReportRecord& record) {
    nlohmann::ordered_json j;
    j["schema_version"] = record.schema_version;
    j["timestamp"] = record.timestamp;
    j["check"] = record.check;
    j["n"] = record.n;
    j["family"] = record.family;
    j["params"] = record.params;
    j["verdict"] = record.verdict;
    j["values"] = record.values;
    j["witness"] = record.witness;
    return j;
}

ReportRecord record_from_json(const nlohmann::ordered_json& j) {
    ReportRecord record;
    record.schema_version = j.at("schema_version").get<int>();
    record.timestamp = j.at("timestamp").get<std::string>();
    record.check = j.at("check").get<std::string>();
    record.n = j.at("n").get<int>();
    record.family = j.at("family").get<std::string>();
    record.params = j.at("params");
    record.verdict = j.at("verdict").get<std::string>();
    record.values = j.at("values");
    record.witness = j.at("witness");
    return record;
}

std::string to_line(const ReportRecord& record) { return to_json(record).dump(); }

ReportRecord record_from_line(const std::string& line) {
    return record_from_json(nlohmann::ordered_json::parse(line));
}

std::string iso8601_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

}  // namespace hfam
