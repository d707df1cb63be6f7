// Command-line verifier: reruns the algebraic reproductions and the
// separation-of-variables demos, emitting deterministic reports.
//
// Exit codes: 0 all checks pass, 1 at least one check failed,
//             2 configuration or usage error, 3 I/O error.
#include "rank1sep/cli/checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using rank1sep::cli::CheckReport;
using rank1sep::cli::RunConfig;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

bool known_check(const std::string& id)
{
    for (const auto& entry : rank1sep::cli::check_registry())
        if (id == entry.id)
            return true;
    return false;
}

/// Parse a repeated "CHECK=VALUE" option list; returns false on bad syntax,
/// an unknown check id, or a value outside the accepted range.
template <class T, class Parse>
bool parse_overrides(const std::vector<std::string>& specs, Parse parse,
    std::map<std::string, T>& out, std::string& error)
{
    for (const std::string& spec : specs) {
        size_t eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) {
            error = "expected CHECK=VALUE, got '" + spec + "'";
            return false;
        }
        std::string id = spec.substr(0, eq);
        if (!known_check(id)) {
            error = "unknown check id '" + id + "'";
            return false;
        }
        try {
            out[id] = parse(spec.substr(eq + 1));
        } catch (const std::exception&) {
            error = "bad value in '" + spec + "'";
            return false;
        }
    }
    return true;
}

int emit(const std::vector<CheckReport>& reports, const RunConfig& cfg)
{
    std::string body = cfg.format == "json" ? rank1sep::cli::to_json(reports, cfg)
                                            : rank1sep::cli::to_text(reports, cfg);
    std::string path = cfg.out_path;
    if (path.empty()) {
        if (const char* dir = std::getenv("RANK1SEP_OUT_DIR"))
            path = std::string(dir) + "/report." + (cfg.format == "json" ? "json" : "txt");
    }
    if (path.empty()) {
        std::cout << body;
        return kExitPass;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body) || !out.flush()) {
        std::cerr << "error: cannot write report to " << path << "\n";
        return kExitIo;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"verifier for the rank-1 separation-of-variables library"};
    app.name("verify");

    std::string check_id;
    std::vector<std::string> tol_specs, sample_specs;
    RunConfig cfg;
    app.add_option("check", check_id, "check id to run, or 'all'")->required();
    app.add_option("--seed", cfg.seed, "master seed (per-check streams are derived)");
    app.add_option("--tol", tol_specs, "tolerance override CHECK=VALUE");
    app.add_option("--samples", sample_specs, "sample-count override CHECK=N");
    app.add_option("--out", cfg.out_path,
        "report path (default: $RANK1SEP_OUT_DIR/report.<ext> or stdout)");
    app.add_option("--format", cfg.format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", cfg.timing, "include wall-clock runtime_ms in reports");
    app.add_option("--stackel", cfg.stackel_override,
        "replace the first shipped system of demo-separation with this .stk file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    std::string error;
    if (!parse_overrides(
            tol_specs,
            [](const std::string& s) {
                size_t pos = 0;
                double v = std::stod(s, &pos);
                if (pos != s.size() || v < 0)
                    throw std::invalid_argument(s);
                return v;
            },
            cfg.tol, error)
        || !parse_overrides(
            sample_specs,
            [](const std::string& s) {
                size_t pos = 0;
                int v = std::stoi(s, &pos);
                if (pos != s.size() || v < 1)
                    throw std::invalid_argument(s);
                return v;
            },
            cfg.samples, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitConfig;
    }
    if (check_id != "all" && !known_check(check_id)) {
        std::cerr << "error: unknown check id '" << check_id << "'\n";
        return kExitConfig;
    }

    try {
        std::vector<CheckReport> reports;
        if (check_id == "all") {
            reports = rank1sep::cli::cmd_run_all(cfg);
        } else {
            for (const auto& entry : rank1sep::cli::check_registry())
                if (check_id == entry.id)
                    reports.push_back(rank1sep::cli::run_check(entry, cfg));
        }
        int io = emit(reports, cfg);
        if (io != kExitPass)
            return io;
        for (const auto& r : reports)
            if (r.status == "fail")
                return kExitCheckFailed;
        return kExitPass;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
