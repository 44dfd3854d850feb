// Acceptance suite: one line per criterion, exhaustive grids with exact
// (zero-tolerance) comparisons throughout. Exits nonzero if any criterion
// fails. argv[1] must be the path to the qcat CLI binary (criterion 9).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "qcat/qcat.hpp"

using namespace qcat;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed_criteria = 0;

class Criterion {
public:
    Criterion(int index, std::string label) : index_(index), label_(std::move(label)) {}

    void require(bool cond, const std::string& what) {
        ++points_;
        if (cond) return;
        ok_ = false;
        if (notes_.size() < 12) notes_.push_back(what);
    }
    void note(const std::string& what) { notes_.push_back(what); }
    void finish(double budget_seconds = 0.0) {
        double secs = std::chrono::duration<double>(Clock::now() - t0_).count();
        if (budget_seconds > 0.0 && secs > budget_seconds) {
            ok_ = false;
            notes_.push_back("runtime " + std::to_string(secs) + "s exceeds target " +
                             std::to_string(budget_seconds) + "s");
        }
        std::cout << "criterion " << index_ << " [" << label_ << "]: " << (ok_ ? "PASS" : "FAIL")
                  << " (" << points_ << " assertions, " << secs << "s)\n";
        for (const auto& n : notes_) std::cout << "    " << n << "\n";
        std::cout.flush();
        if (!ok_) ++g_failed_criteria;
    }

private:
    int index_;
    std::string label_;
    bool ok_ = true;
    size_t points_ = 0;
    std::vector<std::string> notes_;
    Clock::time_point t0_ = Clock::now();
};

std::string at(const std::string& id, std::initializer_list<long> vals) {
    std::string s = id + "(";
    bool first = true;
    for (long v : vals) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

const LaurentPolynomial* witness_poly(const CheckResult& r) {
    if (!r.witness || !std::holds_alternative<LaurentPolynomial>(*r.witness)) return nullptr;
    return &std::get<LaurentPolynomial>(*r.witness);
}

void criterion_1_identity_suite() {
    Criterion c(1, "identity suite");
    for (long n = 1; n <= 12; ++n)
        for (long m = 1; m <= 12; ++m)
            for (long assign = 0; assign <= 1; ++assign)
                c.require(check_identity_one(n, m, assign).holds(),
                          at("identity-one", {n, m, assign}));
    for (long n = 1; n <= 50; ++n) c.require(check_recover(n).holds(), at("recover", {n}));
    for (long n = 1; n <= 40; ++n)
        for (long m = 0; m <= 40; ++m)
            c.require(check_new_identity(m, n).holds(), at("new-identity", {m, n}));
    for (long n1 = 1; n1 <= 8; ++n1)
        for (long n2 = 1; n2 <= 8; ++n2)
            for (long n3 = 1; n3 <= 8; ++n3)
                c.require(check_n123(n1, n2, n3).holds(), at("n123", {n1, n2, n3}));
    c.finish(120.0);
}

void criterion_2_spot_values() {
    Criterion c(2, "spot values");

    // recover(2): both displays equal 9, recomputed from scratch here
    Int lhs(0);
    for (long k = 0; k <= 2; ++k) {
        Int b = triangle_number(TriangleKind::ShapiroB, 2, k);
        lhs += b * b * b;
    }
    c.require(lhs == 9, "recover(2) LHS != 9");
    Int c6 = binomial_int(4, 2);
    Int tail(0);
    for (long k = 2; k <= 3; ++k) tail += binomial_int(k, 2) * binomial_int(k, 1);
    c.require(Rat(c6 * c6 * c6) / 2 - Rat(3 * c6 * tail) / 2 == 9, "recover(2) display 1 != 9");
    Int tail2(0);
    for (long k = 1; k <= 2; ++k) {
        Int b = binomial_int(4 - k - 1, 1);
        tail2 += Int(k) * b * b;
    }
    c.require(Rat(c6 * tail2) / 4 == 9, "recover(2) display 2 != 9");
    c.require(check_recover(2).holds(), "check_recover(2)");

    // identity-one(2,1), r=m assignment: LHS = RHS = 4
    Int side(0);
    for (long k = 0; k <= 1; ++k) {
        Int b = triangle_number(TriangleKind::ShapiroB, 2, k);
        side += b * b * triangle_number(TriangleKind::ShapiroB, 1, k);
    }
    c.require(side == 4, "identity-one(2,1) LHS != 4");
    Rat rhs = Rat(36) * (Rat(1) - Rat(4) * Rat(2) / Rat(9));
    c.require(rhs == 4, "identity-one(2,1) RHS != 4");
    c.require(check_identity_one(2, 1, 0).holds(), "check_identity_one(2,1,r=m)");

    // new-identity(2,2): both sides equal 6
    Int ni_lhs(0);
    for (long k = 1; k <= 2; ++k)
        ni_lhs += binomial_int(k, k - 1) * binomial_int(1, k - 1) * binomial_int(4, 2 - k);
    Int ni_rhs(0);
    for (long k = 0; k <= 2; ++k) {
        Int b = binomial_int(3 - k, 1);
        ni_rhs += Int(k) * b * b;
    }
    c.require(ni_lhs == 6, "new-identity(2,2) LHS != 6");
    c.require(ni_rhs == 6, "new-identity(2,2) RHS != 6");
    c.require(check_new_identity(2, 2).holds(), "check_new_identity(2,2)");
    c.finish();
}

void criterion_3_recurrence_suite() {
    Criterion c(3, "telescoped recurrence suite");
    for (long n = 1; n <= 10; ++n) {
        c.require(check_zeilberger_recurrences(n, 10).holds(), at("zeilberger", {n, 10}));
        c.require(zeil_S(n, 0) == 0, at("zeil_S0", {n}));
        c.require(zeil_T(n, 0) == 0, at("zeil_T0", {n}));
    }
    for (long n = 1; n <= 10; ++n)
        for (long m = 1; m <= 10; ++m)
            c.require(check_one_suff(n, m).holds(), at("one-suff", {n, m}));
    c.finish();
}

void criterion_4_q1_congruences() {
    Criterion c(4, "q=1 congruence suite");
    for (long n = 2; n <= 14; ++n)
        for (long a = 1; a < n; ++a)
            for (long r = 0; r <= 3; ++r)
                c.require(check_q1_congruence(Q1Kind::Cnk, n, a, r).holds(),
                          at("q1-cnk", {n, a, r}));
    for (long n = 1; n <= 12; ++n)
        for (long a = 0; a <= n; ++a)
            for (long r = 0; r <= 3; ++r) {
                c.require(check_q1_congruence(Q1Kind::Bnk, n, a, r).holds(),
                          at("q1-bnk", {n, a, r}));
                c.require(check_q1_congruence(Q1Kind::Ank, n, a, r).holds(),
                          at("q1-ank", {n, a, r}));
            }
    auto spot = check_q1_congruence(Q1Kind::Cnk, 5, 2, 1);
    c.require(spot.holds() && spot.witness &&
                  std::get<Rat>(*spot.witness) == 6,
              "q1-cnk(5,2,1) quotient != 6");
    c.finish();
}

void criterion_5_q_divisibility() {
    Criterion c(5, "q-divisibility suite");
    for (long n = 1; n <= 8; ++n)
        for (long a = 0; a <= n; ++a)
            for (long r = 0; r <= 2; ++r)
                for (long j = 0; j <= 2 * r + 1; ++j) {
                    auto bres = check_bnk_power(n, a, r, j);
                    const LaurentPolynomial* bw = witness_poly(bres);
                    c.require(bres.holds() && bw != nullptr, at("bnk-power", {n, a, r, j}));
                    if (bw)
                        c.require(*bw * LaurentPolynomial(bnk_power_modulus(n, a)) ==
                                      bnk_power_sum(n, a, r, j),
                                  at("bnk-power re-expansion", {n, a, r, j}));
                    auto ares = check_ank_power(n, a, r, j);
                    const LaurentPolynomial* aw = witness_poly(ares);
                    c.require(ares.holds() && aw != nullptr, at("ank-power", {n, a, r, j}));
                    if (aw)
                        c.require(*aw * LaurentPolynomial(ank_power_modulus(n, a)) ==
                                      ank_power_sum(n, a, r, j),
                                  at("ank-power re-expansion", {n, a, r, j}));
                    if (j == 0) {
                        // q = 1 shadow agrees with the integer congruence quotient
                        Rat bq = eval_at(bnk_power_sum(n, a, r, 0), Rat(1)) /
                                 eval_at(bnk_power_modulus(n, a), Rat(1));
                        auto bint = check_q1_congruence(Q1Kind::Bnk, n, a, r);
                        c.require(bint.witness && bq == std::get<Rat>(*bint.witness),
                                  at("bnk q=1 shadow", {n, a, r}));
                        Rat aq = eval_at(ank_power_sum(n, a, r, 0), Rat(1)) /
                                 eval_at(ank_power_modulus(n, a), Rat(1));
                        auto aint = check_q1_congruence(Q1Kind::Ank, n, a, r);
                        c.require(aint.witness && aq == std::get<Rat>(*aint.witness),
                                  at("ank q=1 shadow", {n, a, r}));
                    }
                }
    // spot witnesses: the b-power witness is q^-2 (the sum is (1+q^2)q^-2
    // against modulus (1+q^2)); the a-power witness is 1
    auto bres_spot = check_bnk_power(2, 2, 0, 0);
    const LaurentPolynomial* bspot = witness_poly(bres_spot);
    c.require(bspot != nullptr && *bspot == q_power(-2), "bnk-power(2,2,0,0) witness != q^-2");
    auto ares_spot = check_ank_power(2, 1, 0, 0);
    const LaurentPolynomial* aspot = witness_poly(ares_spot);
    c.require(aspot != nullptr && *aspot == q_power(0), "ank-power(2,1,0,0) witness != 1");
    c.finish();
}

void criterion_6_structural_suite() {
    Criterion c(6, "single/multi-index structural suite");
    // divisibility + r-recurrence + reversal for the single-index sums
    for (long n = 1; n <= 8; ++n)
        for (long a = 0; a <= n; ++a)
            for (long r = 0; r <= 2; ++r)
                for (long j = 0; j <= 1; ++j)
                    c.require(s_r_single(a, n, r, j).second.holds(),
                              at("sr-single", {a, n, r, j}));

    // multi-index ratios with their recurrences, closed forms, reversals
    for (long m = 1; m <= 4; ++m) {
        std::vector<long> ns(static_cast<size_t>(m), 1);
        for (;;) {
            for (long a = 0; a <= ns[0]; ++a)
                for (long r = 0; r <= 1; ++r)
                    for (long j = 0; j <= m; ++j) {
                        c.require(s_r_multi(MultiIndexSpec{a, ns, r, j}).second.holds(),
                                  "sr-multi a=" + std::to_string(a) + " j=" + std::to_string(j));
                        c.require(sbar_r_multi(MultiIndexSpec{a, ns, r, j}).second.holds(),
                                  "sbar-multi a=" + std::to_string(a) +
                                      " j=" + std::to_string(j));
                    }
            long i = m - 1;
            while (i >= 0 && ns[static_cast<size_t>(i)] == 5) --i;
            if (i < 0) break;
            ++ns[static_cast<size_t>(i)];
            for (long k = i + 1; k < m; ++k) ns[static_cast<size_t>(k)] = 1;
        }
    }

    // the Pochhammer lemma sums with the product identity and 3-term recurrence
    for (long n = 1; n <= 6; ++n)
        for (long a = 0; a <= n; ++a)
            for (long r = 0; r <= 2; ++r)
                for (long s = 0; s <= 3; ++s)
                    c.require(x_r_sum_check(a, n, r, s).holds(), at("xr-sum", {a, n, r, s}));
    c.finish(900.0);
}

void criterion_7_qkit_properties() {
    Criterion c(7, "qkit property suite");
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k) {
            // q_binomial triple-constructs internally and throws on mismatch
            IntPolynomial qb = q_binomial(n, k);
            c.require(qb == q_binomial(n, n - k), at("qbinom symmetry", {n, k}));
            c.require(eval_at(qb, Rat(1)) == Rat(binomial_int(n, k)), at("qbinom q=1", {n, k}));
            if (n >= 1)
                c.require(factor_form_qbinomial(n, k).expand() == LaurentPolynomial(qb),
                          at("factor-form qbinom", {n, k}));
        }
    for (long n = 1; n <= 30; ++n)
        c.require(factor_form_qint(n).expand() == LaurentPolynomial(q_integer(n)),
                  at("factor-form qint", {n}));

    for (long n = 1; n <= 20; ++n) {
        IntPolynomial one_plus_qn =
            IntPolynomial::constant(1) + IntPolynomial::monomial(Int(1), n);
        c.require(factored_gcd(factor_form_one_plus_qpow(n), factor_form_qint(n)).is_unit(),
                  at("gcd(1+q^n,[n]) factored", {n}));
        c.require(poly_gcd(one_plus_qn, q_integer(n)) == IntPolynomial{1},
                  at("gcd(1+q^n,[n]) rational", {n}));
        for (long a = 0; a <= n; ++a) {
            c.require(
                factored_gcd(factor_form_qbinomial(2 * n - 1, n - a), factor_form_qint(n))
                    .is_unit(),
                at("gcd([2n-1 br n-a],[n]) factored", {n, a}));
            c.require(poly_gcd(q_binomial(2 * n - 1, n - a), q_integer(n)) == IntPolynomial{1},
                      at("gcd([2n-1 br n-a],[n]) rational", {n, a}));
            c.require(factored_gcd(factor_form_qbinomial(2 * n, n - a),
                                   factor_form_qint(2 * n + 1))
                          .is_unit(),
                      at("gcd([2n br n-a],[2n+1]) factored", {n, a}));
            c.require(
                poly_gcd(q_binomial(2 * n, n - a), q_integer(2 * n + 1)) == IntPolynomial{1},
                at("gcd([2n br n-a],[2n+1]) rational", {n, a}));
        }
    }

    for (long n1 = 0; n1 <= 8; ++n1)
        for (long n2 = 0; n2 <= 8; ++n2)
            for (long k = 0; k <= std::min(n1, n2); ++k)
                c.require(check_chu_vandermonde(n1, n2, k).holds(),
                          at("chu-vandermonde", {n1, n2, k}));
    c.finish();
}

void criterion_8_conjecture_evidence() {
    Criterion c(8, "conjecture evidence suite");
    size_t counterexamples = 0;
    for (long m = 1; m <= 3; ++m) {
        std::vector<long> ns(static_cast<size_t>(m), 1);
        for (;;) {
            for (long a = 0; a <= ns[0]; ++a)
                for (long r = 0; r <= 1; ++r)
                    for (long j = -4; j <= m + 2; ++j) {
                        MultiIndexSpec spec{a, ns, r, j};
                        auto rec1 = explore_conjecture_1(spec);
                        auto rec2 = explore_conjecture_2(spec);
                        if (rec1.in_theorem_range()) {
                            c.require(rec1.is_laurent, "conj1 theorem-range non-Laurent");
                            c.require(rec1.min_coefficient && *rec1.min_coefficient >= 0,
                                      "conj1 negative coefficient inside 0<=j<=m");
                        } else if (!rec1.is_laurent) {
                            ++counterexamples;
                            c.note("conj1 counterexample (outside theorem range): " +
                                   params_text(spec.params()));
                        } else {
                            c.require(true, "");
                        }
                        if (rec2.in_theorem_range()) {
                            c.require(rec2.is_laurent, "conj2 theorem-range non-Laurent");
                        } else if (!rec2.is_laurent) {
                            ++counterexamples;
                            c.note("conj2 counterexample (outside theorem range): " +
                                   params_text(spec.params()));
                        } else {
                            c.require(true, "");
                        }
                    }
            long i = m - 1;
            while (i >= 0 && ns[static_cast<size_t>(i)] == 4) --i;
            if (i < 0) break;
            ++ns[static_cast<size_t>(i)];
            for (long k = i + 1; k < m; ++k) ns[static_cast<size_t>(k)] = 1;
        }
    }
    if (counterexamples == 0) c.note("no counterexamples found on the probe grid");

    auto spot = explore_conjecture_1(MultiIndexSpec{1, {2}, 0, -1});
    c.require(spot.is_laurent && spot.ratio == parse_text("q^-6*(1 - q + q^3)"),
              "conj1 spot ratio != q^-6*(1 - q + q^3)");
    c.require(spot.min_coefficient && *spot.min_coefficient == -1,
              "conj1 spot min coefficient != -1");
    c.require(spot.quotient_support &&
                  *spot.quotient_support == std::pair<long, long>{-6, -3},
              "conj1 spot support != (-6,-3)");
    c.finish();
}

int run_cli(const std::string& cli, const std::string& args,
            const std::string& stdout_file = "/dev/null") {
    std::string cmd = cli + " " + args + " >" + stdout_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_timing(std::string text) {
    text = std::regex_replace(text, std::regex(R"("elapsed_ms": [0-9.eE+-]+)"),
                              "\"elapsed_ms\": X");
    text = std::regex_replace(text, std::regex(R"("timestamp": "[^"]*")"), "\"timestamp\": X");
    text = std::regex_replace(text, std::regex(R"(,[0-9]+\.[0-9]+\n)"), ",X\n");
    return text;
}

void criterion_9_cli_contract(const std::string& cli) {
    Criterion c(9, "cli contract");
    if (cli.empty()) {
        c.require(false, "no CLI path given (argv[1])");
        c.finish();
        return;
    }
    auto tmp = std::filesystem::temp_directory_path() /
               ("qcat_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(tmp);
    auto file = [&](const std::string& name) { return (tmp / name).string(); };

    c.require(run_cli(cli, "verify recover --n 2") == 0, "verify recover exit code");
    c.require(run_cli(cli, "verify bnk-power --n 2 --a 2 --r 0 --j 0") == 0,
              "verify bnk-power exit code");
    c.require(run_cli(cli, "verify unknown-check") == 2, "unknown check exit code");
    c.require(run_cli(cli, "sweep recover --grid bad-grid") == 2, "bad grid exit code");

    // a cache carrying a Fails record drives report to exit 1
    {
        CacheRecord fails;
        fails.check_id = "recover";
        fails.params = "n:3";
        fails.status = CheckStatus::Fails;
        std::ofstream out(file("fails.cache"));
        out << fails.serialize() << "\n";
    }
    c.require(run_cli(cli, "report --cache " + file("fails.cache") + " --format md --out " +
                               file("fails.md")) == 1,
              "report over Fails exit code");

    // parse(render(P)) = P on 1000 random Laurent polynomials
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<int> deg(0, 9), coeff(-99, 99), off(-9, 9);
    size_t round_trips = 0;
    for (int it = 0; it < 1000; ++it) {
        std::vector<Int> cs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
        LaurentPolynomial p = q_power(off(rng)) * LaurentPolynomial(IntPolynomial(std::move(cs)));
        if (parse_text(to_text(p)) == p) ++round_trips;
    }
    c.require(round_trips == 1000,
              "round trip failures: " + std::to_string(1000 - round_trips));

    // warm-cache re-run: identical reports once timing fields are stripped
    const std::string grid = "\"n=1..3,a=0..n,r=0..1,j=0..2r+1\"";
    const std::string sweep_args = "sweep bnk-power --grid " + grid + " --cache " +
                                   file("warm.cache");
    c.require(run_cli(cli, sweep_args + " --report " + file("r1.json") + " --format json") == 0,
              "cold sweep exit code");
    c.require(run_cli(cli, sweep_args + " --report " + file("r2.json") + " --format json") == 0,
              "warm sweep exit code");
    c.require(strip_timing(slurp(file("r1.json"))) == strip_timing(slurp(file("r2.json"))),
              "cold/warm json reports differ after stripping timing");
    c.require(run_cli(cli, sweep_args + " --report " + file("r1.csv") + " --format csv") == 0,
              "csv sweep exit code");
    c.require(run_cli(cli, sweep_args + " --report " + file("r2.csv") + " --format csv") == 0,
              "csv warm sweep exit code");
    c.require(strip_timing(slurp(file("r1.csv"))) == strip_timing(slurp(file("r2.csv"))),
              "cold/warm csv reports differ after stripping timing");

    std::error_code ec;
    std::filesystem::remove_all(tmp, ec);
    c.finish();
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    if (argc > 1) cli = argv[1];
    else if (const char* env = std::getenv("QCAT_CLI")) cli = env;

    criterion_1_identity_suite();
    criterion_2_spot_values();
    criterion_3_recurrence_suite();
    criterion_4_q1_congruences();
    criterion_5_q_divisibility();
    criterion_6_structural_suite();
    criterion_7_qkit_properties();
    criterion_8_conjecture_evidence();
    criterion_9_cli_contract(cli);

    if (g_failed_criteria == 0) {
        std::cout << "acceptance: all 9 criteria PASS\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failed_criteria << " criterion(s) FAILED\n";
    return 1;
}
