// Command-line front end: run named checks or sweeps, probe the open
// conjectures, and emit human- and machine-readable reports.
//
// Exit codes: 0 when every point holds (conjecture probes: every point inside
// the proved j-range is a Laurent polynomial), 1 when any point fails, 2 on
// usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcat/qcat.hpp"

namespace {

using namespace qcat;

const char* kSynopsis =
    "usage:\n"
    "  qcat verify <check-id> [--n N] [--m M] [--a A] [--r R] [--j J] [--s S] [--k K]\n"
    "              [--n1 N1] [--n2 N2] [--n3 N3] [--mmax M] [--assign 0|1] [--ns 2,3,2]\n"
    "              [--report FILE] [--format json|csv|md]\n"
    "  qcat sweep <check-id> --grid \"n=1..8,a=0..n,r=0..2,j=0..2r+1\" [--jobs N]\n"
    "              [--budget N] [--cache FILE] [--report FILE] [--format json|csv|md]\n"
    "  qcat explore <conj1|conj2> --grid \"m=1..3,n=1..4,a=0..n1,r=0..1,j=-4..m+2\"\n"
    "              [--jobs N] [--budget N] [--cache FILE] [--report FILE] [--format ...]\n"
    "  qcat report --cache FILE [--format json|csv|md] [--out FILE]\n"
    "\n"
    "check ids: identity-one recover new-identity n123 zeilberger one-suff sr-single\n"
    "           sr-multi sbar-multi bnk-power ank-power xr-sum q1-cnk q1-bnk q1-ank\n"
    "           chu-vandermonde conj1 conj2\n"
    "\n"
    "The QCAT_CACHE environment variable supplies a default --cache path.\n";

std::vector<long> parse_ns_list(const std::string& text) {
    std::vector<long> ns;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        size_t used = 0;
        long v = std::stol(piece, &used);
        if (used != piece.size()) throw UsageError("--ns: bad integer '" + piece + "'");
        ns.push_back(v);
    }
    if (ns.empty()) throw UsageError("--ns: empty list");
    return ns;
}

std::optional<std::string> cache_path_or_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("QCAT_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

void maybe_write_report(const std::vector<SweepRow>& rows, const std::string& report_path,
                        const std::string& format) {
    if (report_path.empty()) return;
    const std::string stamp = iso8601_utc_now();
    std::vector<ReportRecord> records;
    records.reserve(rows.size());
    for (const auto& row : rows) records.push_back(report_record_of(row.record, row.elapsed_ms, stamp));
    write_or_print(render_report(records, parse_report_format(format)), report_path);
}

bool is_conjecture_id(const std::string& id) { return id == "conj1" || id == "conj2"; }

int exit_code_for_records(const std::vector<CacheRecord>& records) {
    for (const auto& rec : records) {
        if (rec.status != CheckStatus::Fails) continue;
        if (!is_conjecture_id(rec.check_id)) return 1;
        long j = 0, m = 0;
        std::stringstream ss(rec.params);
        std::string pair_text;
        while (std::getline(ss, pair_text, ',')) {
            auto colon = pair_text.find(':');
            if (colon == std::string::npos) continue;
            std::string name = pair_text.substr(0, colon);
            if (name == "j") j = std::stol(pair_text.substr(colon + 1));
            else if (name.size() >= 2 && name[0] == 'n' && std::isdigit((unsigned char)name[1]))
                ++m;
        }
        if (j >= 0 && j <= m) return 1;
    }
    return 0;
}

void print_point(const RunOutcome& out) {
    const CheckResult& r = out.result;
    std::cout << "check=" << r.check_id << " params=" << params_text(r.params)
              << " status=" << to_string(r.status)
              << " witness=" << (r.witness ? to_text(*r.witness) : std::string("-"));
    if (out.min_coefficient) std::cout << " min_coefficient=" << out.min_coefficient->get_str();
    if (out.support)
        std::cout << " support=" << out.support->first << ".." << out.support->second;
    std::cout << " elapsed_ms=" << r.elapsed_ms() << "\n";
}

int run_verify(const std::string& check_id, const ParamEnv& env, const std::vector<long>& ns,
               const std::string& report_path, const std::string& format) {
    auto it = check_registry().find(check_id);
    if (it == check_registry().end()) throw UnknownCheckId(check_id);
    if (it->second.multi_index && ns.empty())
        throw UsageError(check_id + " needs --ns (e.g. --ns 2,3,2)");
    RunOutcome out = it->second.run(env, ns);
    print_point(out);
    maybe_write_report({SweepRow{out.cache_record(), out.result.elapsed_ms()}}, report_path,
                       format);
    return exit_code_for({out.result}, is_conjecture_id(check_id));
}

int run_sweep(const std::string& check_id, const std::string& grid, unsigned jobs, long budget,
              const std::string& cache_flag, const std::string& report_path,
              const std::string& format, bool is_explore) {
    if (is_explore && !is_conjecture_id(check_id))
        throw UsageError("explore expects conj1 or conj2, got '" + check_id + "'");
    SweepSpec spec;
    spec.check_id = check_id;
    spec.ranges = parse_grid(grid);
    if (is_conjecture_id(check_id)) {
        bool has_j = false;
        for (const auto& r : spec.ranges) has_j |= (r.name == "j");
        if (!has_j)
            spec.ranges.push_back(GridRange{"j", kDefaultConjectureJLo, kDefaultConjectureJHi});
    }
    if (budget > 0) spec.budget = static_cast<size_t>(budget);
    spec.cache_path = cache_path_or_env(cache_flag);
    spec.jobs = jobs;

    std::vector<SweepRow> rows;
    std::vector<CheckResult> results = sweep(spec, &rows);

    size_t holds = 0, fails = 0, skips = 0, cached = 0;
    for (const auto& row : rows) {
        switch (row.record.status) {
            case CheckStatus::Holds: ++holds; break;
            case CheckStatus::Fails: ++fails; break;
            case CheckStatus::DomainSkip: ++skips; break;
        }
        if (row.from_cache) ++cached;
    }
    std::cout << check_id << ": " << rows.size() << " points, " << holds << " Holds, " << fails
              << " Fails, " << skips << " DomainSkip (" << cached << " from cache)\n";
    for (const auto& row : rows) {
        if (row.record.status != CheckStatus::Fails) continue;
        if (is_conjecture_id(check_id)) {
            std::cout << "  non-Laurent point (counterexample candidate): " << row.record.params
                      << "\n";
        } else {
            std::cout << "  FAILS: " << row.record.params << "\n";
        }
    }
    maybe_write_report(rows, report_path, format);
    return exit_code_for(results, is_conjecture_id(check_id));
}

int run_report(const std::string& cache_flag, const std::string& format,
               const std::string& out_path) {
    auto path = cache_path_or_env(cache_flag);
    if (!path) throw UsageError("report needs --cache (or QCAT_CACHE)");
    size_t dropped = 0;
    std::vector<CacheRecord> records = load_cache(*path, &dropped);
    if (dropped > 0)
        std::cerr << "warning: cache " << *path << ": dropped " << dropped
                  << " corrupt trailing line(s); keeping valid prefix\n";
    const std::string stamp = iso8601_utc_now();
    std::vector<ReportRecord> report;
    report.reserve(records.size());
    for (const auto& rec : records) report.push_back(report_record_of(rec, 0.0, stamp));
    write_or_print(render_report(report, parse_report_format(format)), out_path);
    return exit_code_for_records(records);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for Catalan triangle and q-binomial identities"};
    app.set_version_flag("--version", std::string("qcat ") + kVersion);
    app.require_subcommand(1);

    std::string check_id, grid, cache_flag, report_path, out_path, ns_text;
    std::string format = "json";
    unsigned jobs = 1;
    long budget = 0;
    ParamEnv env;

    auto* verify = app.add_subcommand("verify", "run one check at one parameter point");
    verify->add_option("check", check_id)->required();
    for (const char* name :
         {"n", "m", "a", "r", "j", "s", "k", "n1", "n2", "n3", "mmax", "assign"}) {
        verify->add_option_function<long>(std::string("--") + name,
                                          [&env, name](long v) { env[name] = v; });
    }
    verify->add_option("--ns", ns_text);
    verify->add_option("--report", report_path);
    verify->add_option("--format", format);

    auto* sweep_cmd = app.add_subcommand("sweep", "run a check over a parameter grid");
    sweep_cmd->add_option("check", check_id)->required();
    sweep_cmd->add_option("--grid", grid)->required();
    sweep_cmd->add_option("--jobs", jobs);
    sweep_cmd->add_option("--budget", budget);
    sweep_cmd->add_option("--cache", cache_flag);
    sweep_cmd->add_option("--report", report_path);
    sweep_cmd->add_option("--format", format);

    auto* explore_cmd = app.add_subcommand("explore", "probe the open conjectures over a grid");
    explore_cmd->add_option("conjecture", check_id)->required();
    explore_cmd->add_option("--grid", grid)->required();
    explore_cmd->add_option("--jobs", jobs);
    explore_cmd->add_option("--budget", budget);
    explore_cmd->add_option("--cache", cache_flag);
    explore_cmd->add_option("--report", report_path);
    explore_cmd->add_option("--format", format);

    auto* report_cmd = app.add_subcommand("report", "render a cache file as json, csv or md");
    report_cmd->add_option("--cache", cache_flag);
    report_cmd->add_option("--format", format);
    report_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help() << "\n" << kSynopsis;
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << kSynopsis;
        return 2;
    }

    try {
        if (verify->parsed()) {
            std::vector<long> ns;
            if (!ns_text.empty()) ns = parse_ns_list(ns_text);
            return run_verify(check_id, env, ns, report_path, format);
        }
        if (sweep_cmd->parsed())
            return run_sweep(check_id, grid, jobs, budget, cache_flag, report_path, format,
                             false);
        if (explore_cmd->parsed())
            return run_sweep(check_id, grid, jobs, budget, cache_flag, report_path, format,
                             true);
        if (report_cmd->parsed()) return run_report(cache_flag, format, out_path);
        std::cerr << kSynopsis;
        return 2;
    } catch (const UnknownCheckId& e) {
        std::cerr << "error: " << e.what() << "\n" << kSynopsis;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << kSynopsis;
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n" << kSynopsis;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << kSynopsis;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
