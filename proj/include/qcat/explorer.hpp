#pragma once

/**
 * @file explorer.hpp
 * @brief Parameter sweeps over the verifier, the open-conjecture probes, and
 *        the append-only result cache.
 *
 * Grid syntax: "n=1..8,a=0..n,r=0..2,j=0..2r+1". Ranges expand left to right
 * and a bound may be a small integer expression over earlier variables
 * (literals, names, + - *, and juxtaposition like 2r). Multi-index checks use
 * the reserved variables m (index count) and n (shared bound for each n_i);
 * expansion then iterates every tuple (n1..nm), and later bounds may refer to
 * n1. Points are emitted in lexicographic order over the given ranges, so two
 * runs of the same grid are byte-identical modulo timing.
 *
 * Cache: one self-describing record per line with stable field order
 * (check_id, params, status, witness_digest, min_coefficient, support).
 * On a corrupt line the valid prefix is kept with a warning and the rest is
 * recomputed; sweeps resume rather than restart.
 */

#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qcat/report.hpp"
#include "qcat/verifier.hpp"

namespace qcat {

// ---------------------------------------------------------------------------
// Conjecture probes

/// Evidence record for one probed point; never an assertion of the conjecture.
struct ConjectureRecord {
    MultiIndexSpec spec;
    bool is_laurent = false;
    std::optional<Int> min_coefficient;                    // present iff is_laurent
    std::optional<std::pair<long, long>> quotient_support; // (lowest, highest exponent)
    LaurentPolynomial ratio;      // the quotient when Laurent, zero otherwise
    LaurentPolynomial numerator;  // the unnormalized sum

    /// True when the point lies inside the proved range 0 <= j <= m.
    bool in_theorem_range() const { return spec.j >= 0 && spec.j <= spec.m(); }
};

namespace detail {

inline ConjectureRecord make_conjecture_record(const MultiIndexSpec& spec,
                                               LaurentPolynomial num,
                                               std::optional<LaurentPolynomial> ratio) {
    ConjectureRecord rec;
    rec.spec = spec;
    rec.numerator = std::move(num);
    rec.is_laurent = ratio.has_value();
    if (ratio) {
        rec.ratio = std::move(*ratio);
        rec.min_coefficient = rec.ratio.min_coefficient();
        rec.quotient_support = {rec.ratio.low_exponent(), rec.ratio.high_exponent()};
    }
    return rec;
}

} // namespace detail

/// Builds the even-weight multi-index ratio for an arbitrary integer j and
/// records Laurent-ness and coefficient-sign evidence.
inline ConjectureRecord explore_conjecture_1(const MultiIndexSpec& spec) {
    spec.validate();
    LaurentPolynomial num = sr_multi_sum(spec.a, spec.ns, spec.r, spec.j);
    return detail::make_conjecture_record(
        spec, num, laurent_quotient(num, sr_multi_modulus(spec.ns, spec.a)));
}

/// Builds the odd-weight multi-index ratio for an arbitrary integer j.
inline ConjectureRecord explore_conjecture_2(const MultiIndexSpec& spec) {
    spec.validate();
    LaurentPolynomial num = sbar_multi_sum(spec.a, spec.ns, spec.r, spec.j);
    return detail::make_conjecture_record(
        spec, num, laurent_quotient(num, sbar_multi_modulus(spec.ns, spec.a)));
}

// ---------------------------------------------------------------------------
// Grid expressions

namespace detail {

/// expr := term {('+'|'-') term}; term := factor {'*' factor | juxtaposed};
/// factor := integer | variable. "2r+1" parses as 2*r+1.
inline long eval_bound_expr(const std::string& s, const std::map<std::string, long>& env) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    auto parse_factor = [&]() -> long {
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return std::stol(s.substr(start, i - start));
        }
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            auto it = env.find(name);
            if (it == env.end()) throw UsageError("grid: unknown variable '" + name + "'");
            return it->second;
        }
        throw UsageError("grid: bad expression '" + s + "'");
    };
    auto parse_term = [&]() -> long {
        long v = parse_factor();
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                v *= parse_factor();
            } else if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
                v *= parse_factor();  // juxtaposition: 2r
            } else {
                return v;
            }
        }
    };
    skip_ws();
    long sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    long value = sign * parse_term();
    while (true) {
        skip_ws();
        if (i >= s.size()) return value;
        if (s[i] == '+') { ++i; value += parse_term(); }
        else if (s[i] == '-') { ++i; value -= parse_term(); }
        else throw UsageError("grid: trailing input in expression '" + s + "'");
    }
}

} // namespace detail

struct GridRange {
    std::string name;
    std::string lo;
    std::string hi;
};

/// "n=1..8,a=0..n,r=0..2,j=0..2r+1" -> ranges in declaration order.
inline std::vector<GridRange> parse_grid(const std::string& text) {
    std::vector<GridRange> ranges;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        auto eq = piece.find('=');
        auto dots = piece.find("..", eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || dots == std::string::npos)
            throw UsageError("grid: expected name=lo..hi in '" + piece + "'");
        GridRange r;
        r.name = piece.substr(0, eq);
        r.lo = piece.substr(eq + 1, dots - eq - 1);
        r.hi = piece.substr(dots + 2);
        if (r.name.empty() || r.lo.empty() || r.hi.empty())
            throw UsageError("grid: expected name=lo..hi in '" + piece + "'");
        ranges.push_back(std::move(r));
    }
    if (ranges.empty()) throw UsageError("grid: no ranges given");
    return ranges;
}

// ---------------------------------------------------------------------------
// Sweep spec, cache records, registry

struct SweepSpec {
    std::string check_id;
    std::vector<GridRange> ranges;
    std::optional<size_t> budget;
    std::optional<std::string> cache_path;
    unsigned jobs = 1;
};

/// A cache line: exactly what survives a round trip through disk.
struct CacheRecord {
    std::string check_id;
    std::string params;
    CheckStatus status = CheckStatus::Holds;
    std::string witness_digest = "-";
    std::optional<Int> min_coefficient;
    std::optional<std::pair<long, long>> support;

    bool operator==(const CacheRecord&) const = default;

    std::string key() const { return check_id + " " + params; }

    std::string serialize() const {
        std::string line = "check_id=" + check_id + " params=" + params +
                           " status=" + to_string(status) + " witness_digest=" + witness_digest;
        line += " min_coefficient=";
        line += min_coefficient ? min_coefficient->get_str() : "-";
        line += " support=";
        line += support ? std::to_string(support->first) + ".." + std::to_string(support->second)
                        : "-";
        return line;
    }

    static std::optional<CacheRecord> parse(const std::string& line) {
        static const char* keys[6] = {"check_id", "params", "status",
                                      "witness_digest", "min_coefficient", "support"};
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string tok;
        while (ss >> tok) fields.push_back(tok);
        if (fields.size() != 6) return std::nullopt;
        CacheRecord rec;
        std::string values[6];
        for (int i = 0; i < 6; ++i) {
            const std::string want = std::string(keys[i]) + "=";
            if (fields[static_cast<size_t>(i)].rfind(want, 0) != 0) return std::nullopt;
            values[i] = fields[static_cast<size_t>(i)].substr(want.size());
        }
        rec.check_id = values[0];
        rec.params = values[1];
        if (values[2] == "Holds") rec.status = CheckStatus::Holds;
        else if (values[2] == "Fails") rec.status = CheckStatus::Fails;
        else if (values[2] == "DomainSkip") rec.status = CheckStatus::DomainSkip;
        else return std::nullopt;
        rec.witness_digest = values[3];
        try {
            if (values[4] != "-") rec.min_coefficient = Int(values[4]);
            if (values[5] != "-") {
                auto dots = values[5].find("..", 1);
                if (dots == std::string::npos) return std::nullopt;
                rec.support = {std::stol(values[5].substr(0, dots)),
                               std::stol(values[5].substr(dots + 2))};
            }
        } catch (...) {
            return std::nullopt;
        }
        return rec;
    }
};

/// Valid prefix of a cache file; stops at the first corrupt line and reports
/// how many lines were dropped.
inline std::vector<CacheRecord> load_cache(const std::string& path, size_t* dropped = nullptr) {
    std::vector<CacheRecord> records;
    if (dropped) *dropped = 0;
    std::ifstream in(path);
    if (!in) return records;
    std::string line;
    size_t total = 0, kept = 0;
    bool corrupt = false;
    while (std::getline(in, line)) {
        ++total;
        if (corrupt) continue;
        if (line.empty()) continue;
        auto rec = CacheRecord::parse(line);
        if (!rec) {
            corrupt = true;
            continue;
        }
        records.push_back(std::move(*rec));
        ++kept;
    }
    if (corrupt && dropped) *dropped = total - kept;
    return records;
}

inline void append_cache(const std::string& path, const std::vector<CacheRecord>& records) {
    if (records.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw UsageError("cannot open cache file for append: " + path);
    for (const auto& r : records) out << r.serialize() << "\n";
}

/// One evaluated grid point: the CheckResult plus conjecture-evidence fields.
struct RunOutcome {
    CheckResult result;
    std::optional<Int> min_coefficient;
    std::optional<std::pair<long, long>> support;

    CacheRecord cache_record() const {
        CacheRecord rec;
        rec.check_id = result.check_id;
        rec.params = params_text(result.params);
        rec.status = result.status;
        rec.witness_digest = witness_digest(result);
        rec.min_coefficient = min_coefficient;
        rec.support = support;
        return rec;
    }
};

using ParamEnv = std::map<std::string, long>;

struct CheckDef {
    std::vector<std::string> param_names;  // scalar parameters, canonical order
    bool multi_index = false;
    std::function<RunOutcome(const ParamEnv&, const std::vector<long>& ns)> run;
};

namespace detail {

inline long arg(const ParamEnv& env, const char* name) {
    auto it = env.find(name);
    if (it == env.end()) throw UsageError(std::string("missing parameter --") + name);
    return it->second;
}

inline RunOutcome plain(CheckResult r) { return RunOutcome{std::move(r), {}, {}}; }

inline RunOutcome from_conjecture(const std::string& id, const ConjectureRecord& rec,
                                  std::chrono::nanoseconds elapsed) {
    CheckResult res;
    res.check_id = id;
    res.params = rec.spec.params();
    res.status = rec.is_laurent ? CheckStatus::Holds : CheckStatus::Fails;
    res.witness = rec.is_laurent ? Witness(rec.ratio) : Witness(rec.numerator);
    res.elapsed = elapsed;
    return RunOutcome{std::move(res), rec.min_coefficient, rec.quotient_support};
}

inline MultiIndexSpec multi_spec(const ParamEnv& env, const std::vector<long>& ns) {
    if (ns.empty()) throw UsageError("multi-index check: missing --ns / n grid variable");
    return MultiIndexSpec{arg(env, "a"), ns, arg(env, "r"), arg(env, "j")};
}

} // namespace detail

inline const std::map<std::string, CheckDef>& check_registry() {
    static const std::map<std::string, CheckDef> registry = [] {
        std::map<std::string, CheckDef> reg;
        auto& d = reg;
        d["identity-one"] = {{"n", "m", "assign"}, false,
                             [](const ParamEnv& e, const std::vector<long>&) {
                                 return detail::plain(check_identity_one(
                                     detail::arg(e, "n"), detail::arg(e, "m"),
                                     detail::arg(e, "assign")));
                             }};
        d["recover"] = {{"n"}, false, [](const ParamEnv& e, const std::vector<long>&) {
                            return detail::plain(check_recover(detail::arg(e, "n")));
                        }};
        d["new-identity"] = {{"m", "n"}, false,
                             [](const ParamEnv& e, const std::vector<long>&) {
                                 return detail::plain(check_new_identity(detail::arg(e, "m"),
                                                                         detail::arg(e, "n")));
                             }};
        d["n123"] = {{"n1", "n2", "n3"}, false,
                     [](const ParamEnv& e, const std::vector<long>&) {
                         return detail::plain(check_n123(detail::arg(e, "n1"),
                                                         detail::arg(e, "n2"),
                                                         detail::arg(e, "n3")));
                     }};
        d["zeilberger"] = {{"n", "mmax"}, false,
                           [](const ParamEnv& e, const std::vector<long>&) {
                               return detail::plain(check_zeilberger_recurrences(
                                   detail::arg(e, "n"), detail::arg(e, "mmax")));
                           }};
        d["one-suff"] = {{"n", "m"}, false,
                         [](const ParamEnv& e, const std::vector<long>&) {
                             return detail::plain(
                                 check_one_suff(detail::arg(e, "n"), detail::arg(e, "m")));
                         }};
        d["sr-single"] = {{"a", "n", "r", "j"}, false,
                          [](const ParamEnv& e, const std::vector<long>&) {
                              return detail::plain(
                                  s_r_single(detail::arg(e, "a"), detail::arg(e, "n"),
                                             detail::arg(e, "r"), detail::arg(e, "j"))
                                      .second);
                          }};
        d["sr-multi"] = {{"a", "r", "j"}, true,
                         [](const ParamEnv& e, const std::vector<long>& ns) {
                             return detail::plain(s_r_multi(detail::multi_spec(e, ns)).second);
                         }};
        d["sbar-multi"] = {{"a", "r", "j"}, true,
                           [](const ParamEnv& e, const std::vector<long>& ns) {
                               return detail::plain(sbar_r_multi(detail::multi_spec(e, ns)).second);
                           }};
        d["bnk-power"] = {{"n", "a", "r", "j"}, false,
                          [](const ParamEnv& e, const std::vector<long>&) {
                              return detail::plain(
                                  check_bnk_power(detail::arg(e, "n"), detail::arg(e, "a"),
                                                  detail::arg(e, "r"), detail::arg(e, "j")));
                          }};
        d["ank-power"] = {{"n", "a", "r", "j"}, false,
                          [](const ParamEnv& e, const std::vector<long>&) {
                              return detail::plain(
                                  check_ank_power(detail::arg(e, "n"), detail::arg(e, "a"),
                                                  detail::arg(e, "r"), detail::arg(e, "j")));
                          }};
        d["xr-sum"] = {{"a", "n", "r", "s"}, false,
                       [](const ParamEnv& e, const std::vector<long>&) {
                           return detail::plain(
                               x_r_sum_check(detail::arg(e, "a"), detail::arg(e, "n"),
                                             detail::arg(e, "r"), detail::arg(e, "s")));
                       }};
        d["q1-cnk"] = {{"n", "a", "r"}, false,
                       [](const ParamEnv& e, const std::vector<long>&) {
                           return detail::plain(check_q1_congruence(
                               Q1Kind::Cnk, detail::arg(e, "n"), detail::arg(e, "a"),
                               detail::arg(e, "r")));
                       }};
        d["q1-bnk"] = {{"n", "a", "r"}, false,
                       [](const ParamEnv& e, const std::vector<long>&) {
                           return detail::plain(check_q1_congruence(
                               Q1Kind::Bnk, detail::arg(e, "n"), detail::arg(e, "a"),
                               detail::arg(e, "r")));
                       }};
        d["q1-ank"] = {{"n", "a", "r"}, false,
                       [](const ParamEnv& e, const std::vector<long>&) {
                           return detail::plain(check_q1_congruence(
                               Q1Kind::Ank, detail::arg(e, "n"), detail::arg(e, "a"),
                               detail::arg(e, "r")));
                       }};
        d["chu-vandermonde"] = {{"n1", "n2", "k"}, false,
                                [](const ParamEnv& e, const std::vector<long>&) {
                                    return detail::plain(check_chu_vandermonde(
                                        detail::arg(e, "n1"), detail::arg(e, "n2"),
                                        detail::arg(e, "k")));
                                }};
        d["conj1"] = {{"a", "r", "j"}, true,
                      [](const ParamEnv& e, const std::vector<long>& ns) {
                          detail::Stopwatch sw;
                          auto rec = explore_conjecture_1(detail::multi_spec(e, ns));
                          return detail::from_conjecture("conj1", rec, sw.elapsed());
                      }};
        d["conj2"] = {{"a", "r", "j"}, true,
                      [](const ParamEnv& e, const std::vector<long>& ns) {
                          detail::Stopwatch sw;
                          auto rec = explore_conjecture_2(detail::multi_spec(e, ns));
                          return detail::from_conjecture("conj2", rec, sw.elapsed());
                      }};
        return reg;
    }();
    return registry;
}

// ---------------------------------------------------------------------------
// Grid expansion

struct GridPoint {
    ParamEnv env;
    std::vector<long> ns;
};

namespace detail {

inline void expand_ranges(const std::vector<GridRange>& ranges, size_t idx, bool multi_index,
                          ParamEnv& env, std::vector<long>& ns,
                          std::vector<GridPoint>& out) {
    if (idx == ranges.size()) {
        out.push_back(GridPoint{env, ns});
        return;
    }
    const GridRange& r = ranges[idx];
    if (multi_index && r.name == "n") {
        auto it = env.find("m");
        if (it == env.end()) throw UsageError("grid: multi-index checks need m before n");
        const long m = it->second;
        if (m < 1) throw UsageError("grid: m must be at least 1");
        // iterate all tuples (n1..nm) from the shared range, lexicographically
        std::vector<long> tuple(static_cast<size_t>(m));
        std::function<void(long)> rec = [&](long pos) {
            if (pos == m) {
                ns = tuple;
                expand_ranges(ranges, idx + 1, multi_index, env, ns, out);
                ns.clear();
                return;
            }
            long lo = eval_bound_expr(r.lo, env);
            long hi = eval_bound_expr(r.hi, env);
            for (long v = lo; v <= hi; ++v) {
                tuple[static_cast<size_t>(pos)] = v;
                env["n" + std::to_string(pos + 1)] = v;
                rec(pos + 1);
                env.erase("n" + std::to_string(pos + 1));
            }
        };
        rec(0);
        return;
    }
    long lo = eval_bound_expr(r.lo, env);
    long hi = eval_bound_expr(r.hi, env);
    for (long v = lo; v <= hi; ++v) {
        env[r.name] = v;
        expand_ranges(ranges, idx + 1, multi_index, env, ns, out);
    }
    env.erase(r.name);
}

} // namespace detail

/// Expands a grid into points (lexicographic over the given ranges) and
/// validates coverage against the named check's required parameters.
inline std::vector<GridPoint> expand_grid(const std::string& check_id,
                                          const std::vector<GridRange>& ranges,
                                          std::optional<size_t> budget = std::nullopt) {
    auto it = check_registry().find(check_id);
    if (it == check_registry().end()) throw UnknownCheckId(check_id);
    const CheckDef& def = it->second;

    std::vector<std::string> given;
    for (const auto& r : ranges) given.push_back(r.name);
    std::vector<std::string> required = def.param_names;
    if (def.multi_index) {
        required.push_back("m");
        required.push_back("n");
    }
    for (const auto& name : required)
        if (std::find(given.begin(), given.end(), name) == given.end())
            throw UsageError("grid for " + check_id + " is missing variable '" + name + "'");
    for (const auto& name : given)
        if (std::find(required.begin(), required.end(), name) == required.end())
            throw UsageError("grid for " + check_id + " has extraneous variable '" + name + "'");

    ParamEnv env;
    std::vector<long> ns;
    std::vector<GridPoint> points;
    detail::expand_ranges(ranges, 0, def.multi_index, env, ns, points);
    if (budget && points.size() > *budget) points.resize(*budget);
    return points;
}

/// Runs one grid point through the registry.
inline RunOutcome run_check(const std::string& check_id, const GridPoint& point) {
    auto it = check_registry().find(check_id);
    if (it == check_registry().end()) throw UnknownCheckId(check_id);
    return it->second.run(point.env, point.ns);
}

// ---------------------------------------------------------------------------
// Sweep

/// Per-point row for reporting: what the cache stores plus this run's timing.
struct SweepRow {
    CacheRecord record;
    double elapsed_ms = 0.0;  // 0 for cache hits
    bool from_cache = false;
};

/// One CheckResult per grid point in deterministic order; cached points are
/// loaded, not recomputed; freshly computed points are appended to the cache
/// by a single writer after the parallel evaluation completes.
inline std::vector<CheckResult> sweep(const SweepSpec& spec,
                                      std::vector<SweepRow>* rows_out = nullptr) {
    auto points = expand_grid(spec.check_id, spec.ranges, spec.budget);

    std::map<std::string, CacheRecord> cached;
    if (spec.cache_path) {
        size_t dropped = 0;
        for (auto& rec : load_cache(*spec.cache_path, &dropped)) cached[rec.key()] = rec;
        if (dropped > 0)
            std::cerr << "warning: cache " << *spec.cache_path << ": dropped " << dropped
                      << " corrupt trailing line(s); keeping valid prefix\n";
    }

    struct Slot {
        bool from_cache = false;
        CacheRecord cache;
        RunOutcome outcome;
        std::string key;
    };
    std::vector<Slot> slots(points.size());

    // resolve cache hits and collect the indices still to compute
    std::vector<size_t> todo;
    for (size_t i = 0; i < points.size(); ++i) {
        // derive the params text exactly as the check will report it
        auto it = check_registry().find(spec.check_id);
        std::vector<std::pair<std::string, long>> params;
        if (it->second.multi_index) {
            MultiIndexSpec ms = detail::multi_spec(points[i].env, points[i].ns);
            params = ms.params();
        } else {
            for (const auto& name : it->second.param_names)
                params.emplace_back(name, detail::arg(points[i].env, name.c_str()));
        }
        slots[i].key = spec.check_id + " " + params_text(params);
        auto hit = cached.find(slots[i].key);
        if (hit != cached.end()) {
            slots[i].from_cache = true;
            slots[i].cache = hit->second;
        } else {
            todo.push_back(i);
        }
    }

    const unsigned jobs = std::max(1u, spec.jobs);
    if (jobs == 1 || todo.size() <= 1) {
        for (size_t i : todo) slots[i].outcome = run_check(spec.check_id, points[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(todo.size()));
        for (unsigned w = 0; w < count; ++w)
            workers.emplace_back([&] {
                while (true) {
                    size_t t = next.fetch_add(1);
                    if (t >= todo.size()) return;
                    size_t i = todo[t];
                    slots[i].outcome = run_check(spec.check_id, points[i]);
                }
            });
        for (auto& w : workers) w.join();
    }

    std::vector<CheckResult> results;
    std::vector<CacheRecord> fresh;
    results.reserve(points.size());
    for (size_t i = 0; i < slots.size(); ++i) {
        Slot& slot = slots[i];
        if (slot.from_cache) {
            CheckResult res;
            res.check_id = slot.cache.check_id;
            // reparse the params text into pairs for uniform downstream use
            std::stringstream ss(slot.cache.params);
            std::string pair_text;
            while (std::getline(ss, pair_text, ',')) {
                auto colon = pair_text.find(':');
                if (colon != std::string::npos)
                    res.params.emplace_back(pair_text.substr(0, colon),
                                            std::stol(pair_text.substr(colon + 1)));
            }
            res.status = slot.cache.status;
            results.push_back(std::move(res));
            if (rows_out) rows_out->push_back(SweepRow{slot.cache, 0.0, true});
        } else {
            fresh.push_back(slot.outcome.cache_record());
            results.push_back(slot.outcome.result);
            if (rows_out)
                rows_out->push_back(
                    SweepRow{fresh.back(), slot.outcome.result.elapsed_ms(), false});
        }
    }
    if (spec.cache_path && !fresh.empty()) append_cache(*spec.cache_path, fresh);
    return results;
}

/// Report row from what the cache stores, with this run's timing fields.
inline ReportRecord report_record_of(const CacheRecord& rec, double elapsed_ms,
                                     std::string stamp) {
    ReportRecord out;
    out.check_id = rec.check_id;
    out.params = rec.params;
    out.status = to_string(rec.status);
    out.witness = rec.witness_digest;
    out.elapsed_ms = elapsed_ms;
    out.timestamp = std::move(stamp);
    return out;
}

/// Simplified entry point used by library callers and tests.
inline std::vector<CheckResult> sweep(const std::string& check_id, const std::string& grid,
                                      std::optional<std::string> cache_path = std::nullopt,
                                      unsigned jobs = 1) {
    SweepSpec spec;
    spec.check_id = check_id;
    spec.ranges = parse_grid(grid);
    spec.cache_path = std::move(cache_path);
    spec.jobs = jobs;
    return sweep(spec);
}

/// Default probe window for conjecture grids that omit j: |j| <= 2m+2.
inline constexpr const char* kDefaultConjectureJLo = "0-2m-2";
inline constexpr const char* kDefaultConjectureJHi = "2m+2";

/// Exit-code contract: 1 when any point Fails, else 0. In conjecture mode a
/// Fails (non-Laurent point) outside the proved j-range 0 <= j <= m is a
/// reported finding, not a failure.
inline int exit_code_for(const std::vector<CheckResult>& results, bool conjecture_mode) {
    for (const auto& r : results) {
        if (r.status != CheckStatus::Fails) continue;
        if (!conjecture_mode) return 1;
        long j = 0, m = 0;
        for (const auto& [name, value] : r.params) {
            if (name == "j") j = value;
            if (name.size() >= 2 && name[0] == 'n' &&
                std::isdigit(static_cast<unsigned char>(name[1])))
                ++m;
        }
        if (j >= 0 && j <= m) return 1;
    }
    return 0;
}

} // namespace qcat
