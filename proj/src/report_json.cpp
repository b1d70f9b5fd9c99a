#include "divseq/report_json.hpp"

namespace divseq {

nlohmann::ordered_json report_to_json(const PropertyReport& report) {
    nlohmann::ordered_json j;
    j["claim_id"] = report.claim_id;
    j["sub"] = report.sub;
    j["spec"] = report.subject;
    j["range"] = report.range;
    j["status"] = std::string(to_string(report.status));
    if (report.witness.empty()) {
        j["witness"] = nullptr;
    } else {
        nlohmann::ordered_json w;
        for (const auto& [key, value] : report.witness) w[key] = value;
        j["witness"] = std::move(w);
    }
    j["checked_count"] = report.checked_count;
    j["detail"] = report.detail;
    return j;
}

std::string reports_to_json_lines(const std::vector<PropertyReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += report_to_json(r).dump();
        out += '\n';
    }
    return out;
}

std::string csv_header() {
    return "claim_id,sub,spec,range,status,checked_count,witness,detail";
}

namespace {

std::string quoted(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string flatten_witness(const Witness& witness) {
    std::string out;
    for (const auto& [key, value] : witness) {
        if (!out.empty()) out += ';';
        out += key + "=" + value;
    }
    return out;
}

}  // namespace

std::string report_to_csv_row(const PropertyReport& report) {
    return quoted(report.claim_id) + "," + quoted(report.sub) + "," + quoted(report.subject) +
           "," + quoted(report.range) + "," + quoted(std::string(to_string(report.status))) +
           "," + quoted(std::to_string(report.checked_count)) + "," +
           quoted(flatten_witness(report.witness)) + "," + quoted(report.detail);
}

std::string report_to_plain(const PropertyReport& report) {
    std::string out = report.claim_id;
    if (!report.sub.empty()) out += "/" + report.sub;
    out += "  " + report.subject + "  [" + report.range + "]  ";
    out += std::string(to_string(report.status));
    out += "  checked=" + std::to_string(report.checked_count);
    if (!report.witness.empty()) out += "  witness(" + flatten_witness(report.witness) + ")";
    if (!report.detail.empty()) out += "  -- " + report.detail;
    return out;
}

}  // namespace divseq
