#pragma once

/**
 * @file report.hpp
 * @brief Report records and their json/csv/md renderings.
 *
 * Witnesses are carried in reports as 64-bit FNV-1a digests of their
 * canonical text, which is what makes a warm-cache re-run byte-identical to
 * the cold run once timing fields are stripped.
 */

#include <cstdint>
#include <ctime>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcat/verifier.hpp"
#include "qcat/version.hpp"

namespace qcat {

inline std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// "a:1,n1:2,r:0,j:-1", the canonical parameter text used by cache and reports.
inline std::string params_text(const std::vector<std::pair<std::string, long>>& params) {
    std::string out;
    for (size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ",";
        out += params[i].first + ":" + std::to_string(params[i].second);
    }
    return out;
}

inline std::string witness_digest(const CheckResult& r) {
    if (!r.witness) return "-";
    return fnv1a64_hex(to_text(*r.witness));
}

inline std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// CheckResult plus tool provenance, ready for serialization.
struct ReportRecord {
    std::string check_id;
    std::string params;
    std::string status;
    std::string witness;  // digest or "-"
    double elapsed_ms = 0.0;
    std::string tool_version = kVersion;
    std::string timestamp;

    static ReportRecord from(const CheckResult& r, std::string stamp) {
        ReportRecord rec;
        rec.check_id = r.check_id;
        rec.params = params_text(r.params);
        rec.status = to_string(r.status);
        rec.witness = witness_digest(r);
        rec.elapsed_ms = r.elapsed_ms();
        rec.timestamp = std::move(stamp);
        return rec;
    }
};

enum class ReportFormat { Json, Csv, Md };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "md") return ReportFormat::Md;
    throw UsageError("unknown report format: " + s + " (expected json|csv|md)");
}

namespace detail {

inline std::string csv_params(std::string params) {
    for (char& c : params)
        if (c == ',') c = ';';
    return params;
}

} // namespace detail

inline std::string render_report(const std::vector<ReportRecord>& records, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : records) {
                nlohmann::ordered_json obj;
                obj["check_id"] = r.check_id;
                obj["params"] = r.params;
                obj["status"] = r.status;
                obj["witness"] = r.witness;
                obj["elapsed_ms"] = r.elapsed_ms;
                obj["tool_version"] = r.tool_version;
                obj["timestamp"] = r.timestamp;
                arr.push_back(std::move(obj));
            }
            return arr.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::string out = "check_id,params,status,witness,elapsed_ms\n";
            for (const auto& r : records)
                out += r.check_id + "," + detail::csv_params(r.params) + "," + r.status + "," +
                       r.witness + "," + std::to_string(r.elapsed_ms) + "\n";
            return out;
        }
        case ReportFormat::Md: {
            std::string out = "| check_id | params | status | witness | elapsed_ms |\n";
            out += "| --- | --- | --- | --- | --- |\n";
            for (const auto& r : records)
                out += "| " + r.check_id + " | " + r.params + " | " + r.status + " | " +
                       r.witness + " | " + std::to_string(r.elapsed_ms) + " |\n";
            return out;
        }
    }
    throw UsageError("render_report: bad format");
}

} // namespace qcat
