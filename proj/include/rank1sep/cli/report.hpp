#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace rank1sep::cli {

/// Version of the JSON report schema emitted by to_json.
inline constexpr int kSchemaVersion = 1;

/// Outcome of one named check. `exact` marks checks whose residual is an
/// exact rational zero rather than a floating-point bound.
struct CheckReport {
    std::string check_id;
    std::string status = "pass"; // pass | fail | skipped
    bool exact = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> witnesses;
    long long runtime_ms = 0;
    std::uint64_t seed = 0;
};

/// Run-wide configuration assembled from the command line.
struct RunConfig {
    std::uint64_t seed = 2026;
    std::map<std::string, double> tol;      // per-check tolerance overrides
    std::map<std::string, int> samples;     // per-check sample-count overrides
    std::string out_path;                   // empty: stdout
    std::string format = "text";            // json | text
    bool timing = false;                    // emit wall-clock runtime_ms
    std::string stackel_override;           // replacement .stk for the demo
};

inline double tol_for(const RunConfig& cfg, const std::string& id, double fallback)
{
    auto it = cfg.tol.find(id);
    return it == cfg.tol.end() ? fallback : it->second;
}

inline int samples_for(const RunConfig& cfg, const std::string& id, int fallback)
{
    auto it = cfg.samples.find(id);
    return it == cfg.samples.end() ? fallback : it->second;
}

/// Floating-point rendering pinned to 17 significant digits so reports are
/// byte-identical across runs on the same platform.
inline std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string to_json(const std::vector<CheckReport>& reports, const RunConfig& cfg)
{
    std::ostringstream out;
    out << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"seed\": " << cfg.seed
        << ",\n  \"reports\": [";
    for (size_t k = 0; k < reports.size(); ++k) {
        const CheckReport& r = reports[k];
        out << (k ? ",\n" : "\n") << "    {\n";
        out << "      \"check_id\": \"" << json_escape(r.check_id) << "\",\n";
        out << "      \"status\": \"" << r.status << "\",\n";
        out << "      \"exact\": " << (r.exact ? "true" : "false") << ",\n";
        out << "      \"max_residual\": " << fmt17(r.max_residual) << ",\n";
        out << "      \"tolerance\": " << fmt17(r.tolerance) << ",\n";
        out << "      \"witnesses\": [";
        for (size_t i = 0; i < r.witnesses.size(); ++i)
            out << (i ? ", " : "") << "\"" << json_escape(r.witnesses[i]) << "\"";
        out << "],\n";
        out << "      \"runtime_ms\": " << r.runtime_ms << ",\n";
        out << "      \"seed\": " << r.seed << "\n    }";
    }
    out << "\n  ]\n}\n";
    return out.str();
}

inline std::string to_text(const std::vector<CheckReport>& reports, const RunConfig& cfg)
{
    std::ostringstream out;
    out << "verification report (schema " << kSchemaVersion << ", seed " << cfg.seed << ")\n";
    for (const CheckReport& r : reports) {
        out << "[" << r.status << "] " << r.check_id;
        if (r.exact)
            out << "  residual exact 0";
        else
            out << "  max residual " << fmt17(r.max_residual) << " (tol " << fmt17(r.tolerance)
                << ")";
        if (r.runtime_ms)
            out << "  " << r.runtime_ms << " ms";
        out << "\n";
        for (const std::string& w : r.witnesses)
            out << "    - " << w << "\n";
    }
    return out.str();
}

} // namespace rank1sep::cli
