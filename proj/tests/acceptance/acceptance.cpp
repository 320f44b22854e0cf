// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../paper_data.hpp"
#include "../test_util.hpp"
#include "qshuffle/qshuffle.hpp"

using namespace qshuffle;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string strip_name(const std::string& lambda, const std::string& mu) { return SkewShape(Partition::parse(lambda), Partition::parse(mu)).to_string(); }

Outcome c1_r42() {
    Outcome o;
    ShuffleSession S;
    auto r = S.r(4, 2);
    if (r.support_size() != 24) o.fail("support size " + std::to_string(r.support_size()));
    for (const auto& t : ref::r42_terms())
        if (r.coefficient(Permutation::from_cycles(4, t.cycles)) != LaurentPoly::parse(t.coeff)) o.fail(std::string("coefficient at ") + t.cycles);
    if (r.coefficient(Permutation::from_cycles(4, "(1,4)(2,3)")) != LaurentPoly::parse("q^3 + q - 2")) o.fail("T_(1,4)(2,3)");
    auto at1 = r.specialize(1);
    if (at1.size() != 23) o.fail("q=1 support " + std::to_string(at1.size()));
    o.detail = o.passed ? "24 coefficients, 23 terms at q=1" : o.detail;
    return o;
}

Outcome c2_tables() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        auto [code, out] = testutil::run(std::string("\"") + QSHUFFLE_CLI + "\" eigentable --n " + std::to_string(n));
        if (code != 0) o.fail("eigentable exit " + std::to_string(code));
        if (out != read_file(std::string(QSHUFFLE_GOLDEN_DIR) + "/eigentable_n" + std::to_string(n) + ".md")) o.fail("golden mismatch n=" + std::to_string(n));
        std::size_t rows = 0;
        for (const auto& w : ref::table(n)) {
            std::string row = "| " + strip_name(w.lambda, w.mu) + " | " + std::to_string(w.mult) + " |";
            for (const auto& v : w.values) row += " " + v.to_string() + " |";
            if (out.find(row + "\n") == std::string::npos) o.fail("grid row " + row);
            ++rows;
        }
        std::size_t grid = 0;
        std::istringstream in(out);
        std::string line;
        bool in_grid = false;
        while (std::getline(in, line)) {
            if (line.rfind("| Shape | Mult.", 0) == 0) in_grid = true;
            else if (line.rfind("## Nonzero", 0) == 0) in_grid = false;
            else if (in_grid && line.rfind("| (", 0) == 0) ++grid;
        }
        if (grid != rows) o.fail("grid has " + std::to_string(grid) + " rows, expected " + std::to_string(rows));
        std::size_t expanded = 0;
        for (const auto& e : ref::expansions(n)) {
            std::string row = "| " + strip_name(e.lambda, e.mu) + " | " + std::to_string(e.k) + " | " + e.poly + " |\n";
            if (out.find(row) == std::string::npos) o.fail("expansion " + row);
            ++expanded;
        }
        auto pos = out.find("## Nonzero");
        std::size_t listed = pos == std::string::npos ? 0 : static_cast<std::size_t>(std::count(out.begin() + static_cast<std::ptrdiff_t>(pos), out.end(), '\n')) - 4;
        if (listed != expanded) o.fail("expanded list has " + std::to_string(listed) + " rows, expected " + std::to_string(expanded));
    }
    auto top = eigenvalue_direct(SkewShape(Partition({5}), Partition()), 3);
    if (top.degree() != 15 || top.coefficient(14) != Integer(4) || top.coefficient(13) != Integer(11)) o.fail("(5)∖∅, k=3 leading terms");
    if (o.passed) o.detail = "n=3,4,5 grids and expansions exact";
    return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }

Outcome c3_identities() {
    Outcome o;
    SuiteOptions opt;
    opt.max_n = 5;
    ShuffleSession S;
    auto t0 = std::chrono::steady_clock::now();
    auto rep = identity_suite(opt, S);
    double t5 = seconds_since(t0);
    if (!rep.all_passed())
        for (const auto& c : rep.checks)
            if (!c.passed) o.fail(c.id + " [" + c.params + "] " + c.detail);
    SuiteOptions six;
    six.max_n = 0;
    six.commutativity_n6 = true;
    auto rep6 = identity_suite(six, S);
    double total = seconds_since(t0);
    std::size_t n6 = 0;
    for (const auto& c : rep6.checks) {
        if (c.id == "commutativity") ++n6;
        if (!c.passed) o.fail(c.id + " [" + c.params + "] " + c.detail);
    }
    if (n6 != 21) o.fail("expected 21 commutativity pairs at n=6, ran " + std::to_string(n6));
    if (t5 > 120) o.fail("n<=5 took " + std::to_string(t5) + " s, limit 120 s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu checks n<=5 in %.1f s; 21 pairs at n=6, %.1f s total (limit 900 s)", rep.checks.size(), t5, total);
    if (o.passed) o.detail = buf;
    return o;
}

Outcome c4_main_recursion() {
    Outcome o;
    ShuffleSession S;
    std::vector<Job> jobs;
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            jobs.emplace_back([n, k, &S] {
                auto q = [](int e) { return LaurentPoly::monomial(1, e); };
                auto lhs = S.b(n) * S.r(n, k);
                auto inner = q(k) * S.r(n - 1, k).lift(n) + (HeckeElement::scalar(n, q_int(n + 1 - k)) + q(n + 1 - k) * jm_element(n, n)) * S.r(n - 1, k - 1).lift(n);
                CheckResult c{"main", "n=" + std::to_string(n) + ",k=" + std::to_string(k), lhs == inner * S.b(n), "", 0};
                return c;
            });
    for (const auto& c : run_jobs(jobs, default_workers()))
        if (!c.passed) o.fail(c.params);
    if (o.passed) o.detail = std::to_string(jobs.size()) + " pairs (n,k), 1<=k<=n<=5";
    return o;
}

Outcome c5_regular_charpoly() {
    Outcome o;
    ShuffleSession S;
    std::vector<Job> jobs;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (int qi : {1, 2})
                jobs.emplace_back([n, k, qi, &S] {
                    Rational q0(qi);
                    bool ok = charpoly_at_q(regular_matrix(S.r(n, k), q0)) == predicted_regular_charpoly(n, k, q0);
                    return CheckResult{"charpoly", "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",q=" + std::to_string(qi), ok, "", 0};
                });
    for (const auto& c : run_jobs(jobs, default_workers()))
        if (!c.passed) o.fail(c.params + " " + c.detail);
    if (o.passed) o.detail = std::to_string(jobs.size()) + " charpolys, n<=5, q in {1,2}";
    return o;
}

Outcome c6_annihilation() {
    Outcome o;
    ShuffleSession S;
    std::vector<Job> jobs;
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            jobs.emplace_back([n, k, &S] {
                auto r = annihilation_check(n, k, S);
                return CheckResult{"annihilation", "n=" + std::to_string(n) + ",k=" + std::to_string(k), r.passed, r.mode, 0};
            });
    std::size_t squarefree = 0;
    auto res = run_jobs(jobs, default_workers());
    for (const auto& c : res) {
        if (!c.passed) o.fail(c.params + " " + c.detail);
        squarefree += c.detail == "squarefree";
    }
    if (o.passed) o.detail = std::to_string(res.size()) + " products vanish, " + std::to_string(squarefree) + " already squarefree";
    return o;
}

Outcome c7_specht() {
    Outcome o;
    ShuffleSession S;
    std::vector<Job> jobs;
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& q0 : {Rational(1), Rational(2), Rational(5, 7)})
                jobs.emplace_back([n, lambda, q0, &S] {
                    CheckResult c{"specht", lambda.to_string() + ",q=" + q0.get_str(), true, "", 0};
                    auto gates = model_gates(SeminormalModel(lambda, q0));
                    if (!gates.ok()) {
                        c.passed = false;
                        c.detail = gates.failures.front();
                    }
                    for (int k = 0; k <= n; ++k) {
                        auto r = specht_charpoly_check(lambda, k, q0, S);
                        if (!r.passed) {
                            c.passed = false;
                            c.detail = r.message;
                        }
                    }
                    return c;
                });
    for (const auto& c : run_jobs(jobs, default_workers()))
        if (!c.passed) o.fail(c.params + " " + c.detail);
    if (o.passed) o.detail = std::to_string(jobs.size()) + " (λ, q) models with gates, all k";
    return o;
}

Outcome c8_concordance() {
    Outcome o;
    std::size_t pairs = 0;
    for (int n = 0; n <= 8; ++n)
        for (const auto& s : all_strips(n)) {
            auto rec = eigenvalue_recursive_all(s);
            for (int k = 0; k <= 8; ++k) {
                auto r = static_cast<std::size_t>(k) < rec.size() ? rec[static_cast<std::size_t>(k)] : LaurentPoly();
                if (eigenvalue_direct(s, k) != r) o.fail(s.to_string() + ", k=" + std::to_string(k));
                ++pairs;
            }
        }
    std::size_t hooks = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int ell = 0; ell < n; ++ell)
            for (int j = ell == 0 ? 0 : 1; j <= n - ell; ++j)
                for (int k = 0; k <= 8; ++k) {
                    if (hook_eigenvalue(n, ell, j, k) != eigenvalue_direct(hook_strip(n, ell, j), k)) o.fail("hook n=" + std::to_string(n));
                    ++hooks;
                }
        for (int k = 0; k <= 8; ++k) {
            if (eigenvalue_direct(SkewShape(Partition({n}), Partition()), k) != q_factorial(k) * q_binomial(n, k) * q_binomial(n, k)) o.fail("top value n=" + std::to_string(n));
            if (n >= 2 && eigenvalue_direct(SkewShape(Partition({n - 1, 1}), Partition({1, 1})), k) != q_factorial(k) * q_binomial(n - 2, k) * q_binomial(n + 1, k))
                o.fail("second value n=" + std::to_string(n));
        }
    }
    if (o.passed) o.detail = std::to_string(pairs) + " (strip,k) pairs, " + std::to_string(hooks) + " hook values";
    return o;
}

Outcome c9_structure() {
    Outcome o;
    std::size_t reports = 0;
    for (int n = 0; n <= 8; ++n) {
        // the extremal ordering is sampled for n <= 7 only
        std::vector<Rational> samples = n <= 7 ? default_q_samples() : std::vector<Rational>{};
        for (const auto& s : all_strips(n))
            for (int k = 0; k <= n + 1; ++k) {
                auto rep = structural_report(s, k, samples);
                if (!rep.ok()) o.fail(rep.failures.front());
                ++reports;
            }
    }
    if (o.passed) o.detail = std::to_string(reports) + " reports, q samples 1,2,3,1/2,5/7";
    return o;
}

Outcome c10_nesting() {
    Outcome o;
    ShuffleSession S;
    std::vector<Job> jobs;
    for (int n = 1; n <= 5; ++n)
        for (const auto& q0 : default_q_samples())
            jobs.emplace_back([n, q0, &S] {
                auto r = image_nesting_check(n, q0, S);
                std::string bad;
                for (const auto& row : r.rows)
                    if (!row.ok() && bad.empty()) bad = "k=" + std::to_string(row.k);
                return CheckResult{"nesting", "n=" + std::to_string(n) + ",q=" + q0.get_str(), r.ok(), bad, 0};
            });
    for (const auto& c : run_jobs(jobs, default_workers()))
        if (!c.passed) o.fail(c.params + " " + c.detail);
    if (o.passed) o.detail = std::to_string(jobs.size()) + " (n, q0) chains, n<=5";
    return o;
}

Outcome c11_q1_bridge() {
    Outcome o;
    ShuffleSession S;
    std::size_t entries = 0;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto at1 = S.r(n, n - k).specialize(1);
            for (const auto& w : group_table(n).perms) {
                // k-subsets of positions on which w is increasing, by bitmask
                unsigned long count = 0;
                for (unsigned mask = 0; mask < (1U << n); ++mask) {
                    if (__builtin_popcount(mask) != k) continue;
                    int last = 0;
                    bool inc = true;
                    for (int i = 1; i <= n; ++i)
                        if (mask & (1U << (i - 1))) {
                            inc = inc && w(i) > last;
                            last = w(i);
                        }
                    count += inc;
                }
                auto it = at1.find(w);
                Rational got = it == at1.end() ? Rational(0) : it->second;
                if (got != Rational(count)) o.fail("n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",w=" + w.to_one_line());
                ++entries;
            }
        }
    if (o.passed) o.detail = std::to_string(entries) + " coefficients, n<=5";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden element R_{4,2}", 1, c1_r42},
        {2, "golden eigenvalue tables n=3,4,5", 5, c2_tables},
        {3, "identity suite n<=5 and n=6 commutativity", 900, c3_identities},
        {4, "main recursion n<=5", 60, c4_main_recursion},
        {5, "regular characteristic polynomials n<=5", 600, c5_regular_charpoly},
        {6, "annihilation products n<=4", 300, c6_annihilation},
        {7, "Specht module characteristic polynomials n<=5", 300, c7_specht},
        {8, "direct/recursive/hook concordance |λ|<=8", 30, c8_concordance},
        {9, "structural properties |λ|<=8", 60, c9_structure},
        {10, "kernel and image nesting n<=5", 180, c10_nesting},
        {11, "q=1 noninversion bridge n<=5", 30, c11_q1_bridge},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = seconds_since(t0);
        if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s");
        failed += !o.passed;
        std::printf("%s  %2d  %-48s %8.2f s (limit %4.0f s)  %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
