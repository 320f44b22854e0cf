#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/hecke.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/matrix.hpp"
#include "qshuffle/shuffles.hpp"
#include "qshuffle/specht.hpp"
#include "qshuffle/spectrum.hpp"

namespace qshuffle {

inline constexpr int kHardSymbolicCap = 6;
inline constexpr int kHardNumericCap = 7;

struct Caps {
    int symbolic = 4;
    int numeric = 6;
};

/// Matrix of right multiplication by an element: row w holds the coefficients of T_w * a.
struct RegularMatrix {
    int n = 0;
    std::optional<Rational> q0;
    std::variant<Matrix<LaurentPoly>, Matrix<Rational>> entries;

    [[nodiscard]] bool symbolic() const { return !q0.has_value(); }
    [[nodiscard]] const Matrix<Rational>& numeric() const { return std::get<Matrix<Rational>>(entries); }
    [[nodiscard]] const Matrix<LaurentPoly>& laurent() const { return std::get<Matrix<LaurentPoly>>(entries); }
};

/// T_w * a for every w, indexed by lexicographic rank. Uses T_w = T_d T_{w'} with w = s_d w'.
inline std::vector<HeckeElement> left_translates(const HeckeElement& a) {
    const auto& t = a.table();
    std::size_t N = t.order();
    std::vector<std::uint32_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return t.length[x] < t.length[y]; });
    std::vector<HeckeElement> rows(N, HeckeElement(a.rank()));
    for (std::uint32_t w : order) {
        if (w == 0) {
            rows[0] = a;
            continue;
        }
        std::uint32_t u = t.inverse[w];
        std::uint32_t shorter = t.inverse[t.parent[u]];
        rows[w] = rows[shorter];
        rows[w].mul_generator_left(t.parent_gen[u]);
    }
    return rows;
}

inline RegularMatrix regular_matrix(const HeckeElement& a, const std::optional<Rational>& q0 = std::nullopt, Caps caps = {}) {
    int n = a.rank();
    int cap = q0 ? std::min(caps.numeric, kHardNumericCap) : std::min(caps.symbolic, kHardSymbolicCap);
    if (n > cap) throw CapExceeded("regular matrix for n = " + std::to_string(n) + " exceeds the " + (q0 ? "numeric" : "symbolic") + " cap " + std::to_string(cap));
    auto rows = left_translates(a);
    std::size_t N = rows.size();
    RegularMatrix m;
    m.n = n;
    m.q0 = q0;
    if (q0) {
        Matrix<Rational> e(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (!rows[i].coefficient_at(j).is_zero()) e(i, j) = evaluate(rows[i].coefficient_at(j), *q0);
        m.entries = std::move(e);
    } else {
        Matrix<LaurentPoly> e(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) e(i, j) = rows[i].coefficient_at(j);
        m.entries = std::move(e);
    }
    return m;
}

inline RationalPoly charpoly_at_q(const RegularMatrix& m) {
    if (m.symbolic()) throw SymbolicUnsupported("characteristic polynomials are computed at numeric q only");
    return rational_charpoly(m.numeric());
}

/// Π (x - E(q0))^{mult} over the predicted factors for R_{n,k} on H_n.
inline RationalPoly predicted_regular_charpoly(int n, int k, const Rational& q0) {
    std::vector<std::pair<Rational, std::uint64_t>> roots;
    for (const auto& f : charpoly_factors_regular(n, k)) roots.emplace_back(evaluate(f.eigenvalue, q0), f.multiplicity);
    return poly_from_roots(roots);
}

/// Π (a - u_i) = 0 in H_n, with every u_i a scalar Laurent polynomial.
inline bool split_certificate(const HeckeElement& a, const std::vector<LaurentPoly>& scalars) {
    HeckeElement prod = HeckeElement::one(a.rank());
    for (const auto& u : scalars) {
        prod = prod * (a - HeckeElement::scalar(a.rank(), u));
        if (prod.is_zero()) return true;
    }
    return prod.is_zero();
}

/// Specialized form: Π (M - u_i) = 0 for the regular matrix M of a at q0.
inline bool split_certificate(const HeckeElement& a, const std::vector<Rational>& scalars, const Rational& q0, Caps caps = {}) {
    auto m = regular_matrix(a, q0, caps).numeric();
    std::size_t N = m.rows();
    auto prod = Matrix<Rational>::identity(N);
    for (const auto& u : scalars) {
        auto shifted = m;
        for (std::size_t i = 0; i < N; ++i) shifted(i, i) -= u;
        prod = prod * shifted;
    }
    return prod.is_zero();
}

/// The scalar set R(m) = {[k]_q : -m < k < m}, with 0 removed when m < 4.
/// For m = 1 this set is empty, so 0 (the only eigenvalue of J_1 = 0) is kept there.
inline std::vector<LaurentPoly> jm_split_scalars(int m) {
    std::vector<LaurentPoly> out;
    for (int k = -m + 1; k < m; ++k) {
        if (k == 0 && m < 4 && m != 1) continue;
        out.push_back(q_int(k));
    }
    return out;
}

struct AnnihilationResult {
    int n = 0;
    int k = 0;
    bool passed = false;
    std::string mode;  // "squarefree", "multiplicity" or "failed"
    std::size_t distinct = 0;
};

/// Product over the distinct predicted eigenvalues of (R_{n,k} - ε); retries with multiplicities if needed.
inline AnnihilationResult annihilation_check(int n, int k, ShuffleSession& session = default_session()) {
    AnnihilationResult res{n, k, false, "failed", 0};
    auto factors = charpoly_factors_regular(n, k);
    res.distinct = factors.size();
    HeckeElement r = session.r(n, k);
    std::vector<LaurentPoly> distinct;
    for (const auto& f : factors) distinct.push_back(f.eigenvalue);
    if (split_certificate(r, distinct)) {
        res.passed = true;
        res.mode = "squarefree";
        return res;
    }
    std::vector<LaurentPoly> with_mult;
    for (const auto& f : factors)
        for (std::uint64_t i = 0; i < f.multiplicity; ++i) with_mult.push_back(f.eigenvalue);
    if (split_certificate(r, with_mult)) {
        res.passed = true;
        res.mode = "multiplicity";
    }
    return res;
}

struct NestingRow {
    int k = 0;
    std::size_t rank_r = 0;
    std::size_t rank_b = 0;
    std::size_t rank_bstar = 0;
    bool ker_bstar_nested = true;  // ker B*_{n,k-1} ⊆ ker B*_{n,k}
    bool ker_r_nested = true;      // ker R_{n,k-1} ⊆ ker R_{n,k}
    bool im_b_nested = true;       // im B_{n,k} ⊆ im B_{n,k-1}
    bool im_r_nested = true;       // im R_{n,k} ⊆ im R_{n,k-1}
    bool im_r_eq_im_b = true;
    bool ker_r_eq_ker_bstar = true;
    [[nodiscard]] bool ok() const { return ker_bstar_nested && ker_r_nested && im_b_nested && im_r_nested && im_r_eq_im_b && ker_r_eq_ker_bstar; }
};

struct NestingReport {
    int n = 0;
    Rational q0;
    std::vector<NestingRow> rows;
    [[nodiscard]] bool ok() const {
        return std::all_of(rows.begin(), rows.end(), [](const NestingRow& r) { return r.ok(); });
    }
};

/// Kernel and image chains of B_{n,k}, B*_{n,k}, R_{n,k} at q0 via exact ranks, for k = 0..n+1.
/// Images are row spaces and kernels are left kernels (elements act from the right):
/// im A ⊆ im B iff rank [B; A] = rank B, and ker A ⊆ ker B iff rank [A | B] = rank A.
inline NestingReport image_nesting_check(int n, const Rational& q0, ShuffleSession& session = default_session(), Caps caps = {}) {
    if (q0 <= 0) throw DegenerateQ("nesting checks need q > 0");
    NestingReport rep{n, q0, {}};
    std::optional<Matrix<Rational>> prev_r;
    std::optional<Matrix<Rational>> prev_b;
    std::optional<Matrix<Rational>> prev_bs;
    std::size_t prev_rank_r = 0;
    std::size_t prev_rank_b = 0;
    std::size_t prev_rank_bs = 0;
    for (int k = 0; k <= n + 1; ++k) {
        auto mr = regular_matrix(session.r(n, k), q0, caps).numeric();
        auto mb = regular_matrix(session.b_nk(n, k), q0, caps).numeric();
        auto mbs = regular_matrix(session.b_star_nk(n, k), q0, caps).numeric();
        NestingRow row;
        row.k = k;
        row.rank_r = exact_rank(mr);
        row.rank_b = exact_rank(mb);
        row.rank_bstar = exact_rank(mbs);
        std::size_t im_rb = exact_rank(mr.vstack(mb));
        row.im_r_eq_im_b = im_rb == row.rank_r && im_rb == row.rank_b;
        std::size_t ker_rbs = exact_rank(mr.hstack(mbs));
        row.ker_r_eq_ker_bstar = ker_rbs == row.rank_r && ker_rbs == row.rank_bstar;
        if (k > 0) {
            row.ker_bstar_nested = exact_rank(prev_bs->hstack(mbs)) == prev_rank_bs;
            row.ker_r_nested = exact_rank(prev_r->hstack(mr)) == prev_rank_r;
            row.im_b_nested = exact_rank(prev_b->vstack(mb)) == prev_rank_b;
            row.im_r_nested = exact_rank(prev_r->vstack(mr)) == prev_rank_r;
        }
        rep.rows.push_back(row);
        prev_r = std::move(mr);
        prev_b = std::move(mb);
        prev_bs = std::move(mbs);
        prev_rank_r = row.rank_r;
        prev_rank_b = row.rank_b;
        prev_rank_bs = row.rank_bstar;
    }
    return rep;
}

struct CheckResult {
    std::string id;
    std::string params;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerificationReport {
    std::string suite;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckResult> checks;
    double seconds = 0;

    [[nodiscard]] bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    [[nodiscard]] std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
    }
    void append(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        seconds += other.seconds;
    }

    [[nodiscard]] nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["parameters"] = parameters;
        j["passed"] = all_passed();
        j["failures"] = failures();
        j["seconds"] = seconds;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e{{"id", c.id}, {"params", c.params}, {"passed", c.passed}, {"seconds", c.seconds}};
            if (!c.detail.empty()) e["detail"] = c.detail;
            j["checks"].push_back(e);
        }
        return j;
    }
    [[nodiscard]] std::string to_text() const {
        std::ostringstream os;
        os << "suite " << suite << ": " << checks.size() << " checks, " << failures() << " failed\n";
        for (const auto& c : checks) {
            os << (c.passed ? "  ok    " : "  FAIL  ") << c.id;
            if (!c.params.empty()) os << " [" << c.params << "]";
            if (!c.detail.empty()) os << "  " << c.detail;
            os << "\n";
        }
        return os.str();
    }
};

/// Worker count from QSHUFFLE_WORKERS, else the hardware concurrency.
inline unsigned default_workers() {
    if (const char* env = std::getenv("QSHUFFLE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return static_cast<unsigned>(w);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

using Job = std::function<CheckResult()>;

/// Runs jobs on a small pool; results keep job order. An exception inside a job fails that check.
inline std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs, unsigned workers) {
    std::vector<CheckResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                results[i] = jobs[i]();
            } catch (const std::exception& e) {
                results[i].passed = false;
                results[i].detail = std::string("exception: ") + e.what();
            }
            results[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return results;
}

struct SuiteOptions {
    int max_n = 5;
    bool commutativity_n6 = false;
    std::vector<Rational> q_samples = default_q_samples();
    unsigned workers = default_workers();
    std::uint64_t seed = 1;
    Caps caps;
};

namespace detail {

inline CheckResult make_check(std::string id, std::string params, std::vector<std::string> failures) {
    CheckResult c{std::move(id), std::move(params), failures.empty(), {}, 0};
    if (!failures.empty()) {
        c.detail = failures.front();
        if (failures.size() > 1) c.detail += " (+" + std::to_string(failures.size() - 1) + " more)";
    }
    return c;
}

inline std::string nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

/// Element whose coefficients are small random Laurent polynomials.
inline HeckeElement random_element(int n, std::mt19937_64& rng, int density_percent = 50) {
    HeckeElement e(n);
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(-2, 3);
    for (std::size_t r = 0; r < e.table().order(); ++r) {
        if (coin(rng) >= density_percent) continue;
        e.add_term_at(r, LaurentPoly::monomial(coeff(rng), expo(rng)) + LaurentPoly::monomial(coeff(rng), expo(rng)));
    }
    return e;
}

/// Σ T_w over w in S_n satisfying pred.
inline HeckeElement sum_where(int n, const std::function<bool(const Permutation&)>& pred) {
    HeckeElement e(n);
    for (const auto& w : group_table(n).perms)
        if (pred(w)) e.add_term(w, 1);
    return e;
}

}  // namespace detail

/// Jobs of the symbolic identity suite for 1 <= n <= max_n.
inline std::vector<Job> identity_jobs(const SuiteOptions& opt, ShuffleSession& S) {
    using detail::make_check;
    using detail::nk;
    std::vector<Job> jobs;
    int max_n = opt.max_n;
    if (max_n > kHardSymbolicCap) throw CapExceeded("identity suite is capped at n = " + std::to_string(kHardSymbolicCap));

    jobs.emplace_back([] {
        std::vector<std::string> bad;
        for (int n = 1; n <= 20; ++n)
            for (int k = 1; k <= n; ++k) {
                if (q_int(n) - q_int(k - 1).shifted(n - k + 1) != q_int(n - k + 1)) bad.push_back("[n] - q^{n-k+1}[k-1] at " + nk(n, k));
                if (LaurentPoly::monomial(1, k - 1) + q_int(k - 1) != q_int(k)) bad.push_back("q^{k-1} + [k-1] at k=" + std::to_string(k));
                if (LaurentPoly(1) + q_int(k - 1).shifted(1) != q_int(k)) bad.push_back("1 + q[k-1] at k=" + std::to_string(k));
            }
        return make_check("qint.ledger_identities", "1<=k<=n<=20", bad);
    });

    for (int n = 1; n <= max_n; ++n) {
        jobs.emplace_back([n] {
            std::vector<std::string> bad;
            auto q = HeckeElement::scalar(n, LaurentPoly::q());
            for (int i = 1; i < n; ++i) {
                auto ti = HeckeElement::generator(n, i);
                if (ti * ti != (LaurentPoly::q() - 1) * ti + q) bad.push_back("T_i^2 at i=" + std::to_string(i));
                for (int j = i + 1; j < n; ++j) {
                    auto tj = HeckeElement::generator(n, j);
                    if (j == i + 1 ? ti * tj * ti != tj * ti * tj : ti * tj != tj * ti)
                        bad.push_back("relation T_" + std::to_string(i) + ", T_" + std::to_string(j));
                }
            }
            return make_check("hecke.relations", "n=" + std::to_string(n), bad);
        });
        jobs.emplace_back([n, &S] {
            std::vector<std::string> bad;
            auto jn = jm_element(n, n);
            if (jn.star() != jn) bad.push_back("J_n* != J_n");
            if (n > 1) {
                auto t = HeckeElement::generator(n, n - 1);
                auto lhs = t * jm_element(n, n - 1);
                auto rhs = jn * (t - HeckeElement::scalar(n, LaurentPoly::q() - 1)) - HeckeElement::one(n);
                if (lhs != rhs) bad.push_back("T_{n-1} J_{n-1} = J_n (T_{n-1} - q + 1) - 1");
            }
            for (int i = 1; i < n - 1; ++i) {
                auto t = HeckeElement::generator(n, i);
                if (t * jn != jn * t) bad.push_back("T_" + std::to_string(i) + " does not commute with J_n");
            }
            for (int k = 0; k < n; ++k) {
                auto bs = S.b_star_nk(n - 1, k, n);
                if (jn * bs != bs * jn) bad.push_back("J_n does not commute with B*_{n-1," + std::to_string(k) + "}");
            }
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (jm_element(n, a) * jm_element(n, b) != jm_element(n, b) * jm_element(n, a))
                        bad.push_back("J_" + std::to_string(a) + ", J_" + std::to_string(b) + " do not commute");
            return make_check("hecke.jucys_murphy", "n=" + std::to_string(n), bad);
        });
        jobs.emplace_back([n] {
            std::vector<std::string> bad;
            for (int m = 1; m <= n; ++m)
                if (!split_certificate(jm_element(n, m), jm_split_scalars(m))) bad.push_back("J_" + std::to_string(m) + " not annihilated");
            return make_check("split.jucys_murphy", "n=" + std::to_string(n), bad);
        });
        jobs.emplace_back([n, &S] {
            std::vector<std::string> bad;
            HeckeElement cyc(n);
            HeckeElement cyc_star(n);
            for (int i = 1; i <= n; ++i) {
                // (n, n-1, ..., i) and (i, i+1, ..., n)
                std::string down = "(";
                std::string up = "(";
                for (int x = n; x >= i; --x) down += std::to_string(x) + (x > i ? "," : ")");
                for (int x = i; x <= n; ++x) up += std::to_string(x) + (x < n ? "," : ")");
                cyc.add_term(Permutation::from_cycles(n, down), 1);
                cyc_star.add_term(Permutation::from_cycles(n, up), 1);
            }
            auto inc_inv = detail::sum_where(n, [n](const Permutation& w) {
                auto u = w.inverse();
                for (int i = 1; i + 1 <= n - 1; ++i)
                    if (u(i) > u(i + 1)) return false;
                return true;
            });
            auto inc = detail::sum_where(n, [n](const Permutation& w) {
                for (int i = 1; i + 1 <= n - 1; ++i)
                    if (w(i) > w(i + 1)) return false;
                return true;
            });
            auto b = S.b(n);
            auto bs = S.b_star(n);
            if (b != cyc) bad.push_back("B_n != Σ T_(n,...,i)");
            if (b != inc_inv) bad.push_back("B_n != Σ over w^-1 increasing on 1..n-1");
            if (bs != cyc_star) bad.push_back("B*_n != Σ T_(i,...,n)");
            if (bs != inc) bad.push_back("B*_n != Σ over w increasing on 1..n-1");
            if (b.star() != bs) bad.push_back("(B_n)* != B*_n");
            return make_check("shuffles.rewrite", "n=" + std::to_string(n), bad);
        });
        jobs.emplace_back([n, &S] {
            std::vector<std::string> bad;
            for (int k = 0; k <= n; ++k) {
                auto want = detail::sum_where(n, [n, k](const Permutation& w) {
                    auto u = w.inverse();
                    for (int i = 1; i + 1 <= n - k; ++i)
                        if (u(i) > u(i + 1)) return false;
                    return true;
                });
                auto want_star = detail::sum_where(n, [n, k](const Permutation& w) {
                    for (int i = 1; i + 1 <= n - k; ++i)
                        if (w(i) > w(i + 1)) return false;
                    return true;
                });
                if (S.b_nk(n, k) != want) bad.push_back("B_{n,k} combinatorial sum at " + nk(n, k));
                if (S.b_star_nk(n, k) != want_star) bad.push_back("B*_{n,k} combinatorial sum at " + nk(n, k));
            }
            if (!S.b_nk(n, n + 1).is_zero()) bad.push_back("B_{n,n+1} != 0");
            return make_check("shuffles.combinatorial_sums", "n=" + std::to_string(n), bad);
        });
        for (int k = 1; k <= n + 1; ++k) {
            jobs.emplace_back([n, k, &S] {
                std::vector<std::string> bad;
                if (S.b_nk(n, k) != S.b(n - 1, k - 1, n) * S.b(n)) bad.push_back("B_{n,k} = B_{n-1,k-1} B_n");
                if (S.b_star_nk(n, k) != S.b_star(n) * S.b_star_nk(n - 1, k - 1, n)) bad.push_back("B*_{n,k} = B*_n B*_{n-1,k-1}");
                if (S.b_nk(n, k) != S.b(n - k + 1, n) * S.b_nk(n, k - 1)) bad.push_back("B_{n,k} = B_{n-k+1} B_{n,k-1}");
                if (S.b_star_nk(n, k) != S.b_star_nk(n, k - 1) * S.b_star(n - k + 1, n)) bad.push_back("B*_{n,k} = B*_{n,k-1} B*_{n-k+1}");
                if (q_int(k) * S.r(n, k) != S.b_star(n) * S.r(n - 1, k - 1, n) * S.b(n)) bad.push_back("[k] R_{n,k} = B*_n R_{n-1,k-1} B_n");
                return make_check("shuffles.simple_recursions", nk(n, k), bad);
            });
        }
        for (int k = 0; k <= n; ++k) {
            jobs.emplace_back([n, k, &S] {
                std::vector<std::string> bad;
                auto [M, X] = parabolic_mass(n, k);
                if (S.b_nk(n, k) != M * X) bad.push_back("B_{n,k} = M X");
                if (S.r(n, k) != X.star() * M * X) bad.push_back("R_{n,k} = X* M X");
                if (M * M != q_factorial(k) * M) bad.push_back("M^2 = [k]! M");
                if (M.star() != M) bad.push_back("M* = M");
                for (int j = n - k + 1; j < n; ++j) {
                    auto tj = HeckeElement::generator(n, j);
                    if (tj * M != LaurentPoly::q() * M) bad.push_back("T_j M = q M at j=" + std::to_string(j));
                    if (tj * S.b_nk(n, k) != LaurentPoly::q() * S.b_nk(n, k)) bad.push_back("T_j B = q B at j=" + std::to_string(j));
                }
                HeckeElement prod = S.b_star_nk(n, k) * S.b_nk(n, k);
                if (q_factorial(k) * S.r(n, k) != prod) bad.push_back("B*B = [k]! R");
                for (std::size_t w = 0; w < prod.table().order(); ++w)
                    if (!S.r(n, k).coefficient_at(w).is_polynomial()) {
                        bad.push_back("R_{n,k} has a non-polynomial coefficient");
                        break;
                    }
                if (S.r(n, k).star() != S.r(n, k)) bad.push_back("R* = R");
                return make_check("shuffles.parabolic_factorization", nk(n, k), bad);
            });
        }
        if (n > 1) {
            jobs.emplace_back([n, &S] {
                std::vector<std::string> bad;
                auto lhs = S.b(n) * S.b_star(n);
                auto rhs = content_shift(n, n) + S.b_star(n - 1, n) * HeckeElement::generator(n, n - 1) * S.b(n - 1, n);
                if (lhs != rhs) bad.push_back("B_n B*_n = [n] + q^n J_n + B*_{n-1} T_{n-1} B_{n-1}");
                return make_check("shuffles.k1_recursion", "n=" + std::to_string(n), bad);
            });
        }
        jobs.emplace_back([n, &S] {
            std::vector<std::string> bad;
            if (S.lambda(n, 1) != content_shift(n, n)) bad.push_back("lambda_{n,1} = [n] + q^n J_n");
            for (int i = 2; i <= n; ++i)
                if (S.lambda(n, i) != HeckeElement::generator(n, n - 1) * S.lambda(n - 1, i - 1).lift(n))
                    bad.push_back("lambda_{n,i} = T_{n-1} lambda_{n-1,i-1} at i=" + std::to_string(i));
            if (!S.gamma(n, 0).is_zero()) bad.push_back("gamma_{n,0} = 0");
            if (!S.Lambda(n, 0).is_zero()) bad.push_back("Lambda_{n,0} = 0");
            if (S.Lambda(n, 1) != content_shift(n, n)) bad.push_back("Lambda_{n,1} = [n] + q^n J_n");
            for (int k = 1; k <= n; ++k) {
                HeckeElement rec = content_shift(n, n);
                if (n > 1 && k > 1) rec += HeckeElement::generator(n, n - 1) * S.gamma(n - 1, k - 1).lift(n);
                if (S.gamma(n, k) != rec) bad.push_back("gamma recursion at k=" + std::to_string(k));
            }
            return make_check("recursion.lambda_gamma", "n=" + std::to_string(n), bad);
        });
        for (int k = 0; k <= n; ++k) {
            jobs.emplace_back([n, k, &S] {
                std::vector<std::string> bad;
                auto rho = q_int(k) * (HeckeElement::scalar(n, q_int(n - k + 1)) + LaurentPoly::monomial(1, n - k + 1) * jm_element(n, n));
                if (!((S.gamma(n, k) - rho) * S.b_nk(n, k)).is_zero()) bad.push_back("(gamma - [k]([n-k+1] + q^{n-k+1} J_n)) B_{n,k} = 0");
                if (k >= 1) {
                    auto shift = HeckeElement::scalar(n, q_int(n + 1 - k)) + LaurentPoly::monomial(1, n + 1 - k) * jm_element(n, n);
                    auto bsk = S.b_star_nk(n - 1, k - 1, n);
                    auto bnk = S.b_nk(n, k);
                    auto lhs_rw = S.b(n) * S.b_star_nk(n, k);
                    auto rhs_rw = S.b_star_nk(n - 1, k, n) * descending_product(n, n - 1, n - k) * S.b(n - k, n) + S.Lambda(n, k);
                    if (lhs_rw != rhs_rw) bad.push_back("B_n B*_{n,k} = B*_{n-1,k} T_{n-1}...T_{n-k} B_{n-k} + Lambda_{n,k}");
                    if (S.Lambda(n, k) * bnk != q_int(k) * shift * bsk * bnk) bad.push_back("Lambda_{n,k} B_{n,k} = [k](...) B*_{n-1,k-1} B_{n,k}");
                    auto lhs3 = S.b(n) * S.b_star_nk(n, k) * bnk;
                    auto rhs3 = LaurentPoly::monomial(1, k) * (S.b_star_nk(n - 1, k, n) * S.b_nk(n, k + 1)) + q_int(k) * shift * bsk * bnk;
                    if (lhs3 != rhs3) bad.push_back("B_n B*_{n,k} B_{n,k} expansion");
                }
                return make_check("recursion.gamma_lambda_identities", nk(n, k), bad);
            });
        }
        for (int k = 1; k <= n; ++k) {
            jobs.emplace_back([n, k, &S] {
                std::vector<std::string> bad;
                auto shift = HeckeElement::scalar(n, q_int(n + 1 - k)) + LaurentPoly::monomial(1, n + 1 - k) * jm_element(n, n);
                auto lhs = S.b(n) * S.r(n, k);
                auto rhs = (LaurentPoly::monomial(1, k) * S.r(n - 1, k, n) + shift * S.r(n - 1, k - 1, n)) * S.b(n);
                if (lhs != rhs) bad.push_back("B_n R_{n,k} = (q^k R_{n-1,k} + ([n+1-k] + q^{n+1-k} J_n) R_{n-1,k-1}) B_n");
                return make_check("recursion.main", nk(n, k), bad);
            });
        }
        jobs.emplace_back([n, &S] {
            std::vector<std::string> bad;
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (S.r(n, i) * S.r(n, j) != S.r(n, j) * S.r(n, i)) bad.push_back("R_{n," + std::to_string(i) + "} and R_{n," + std::to_string(j) + "} do not commute");
            return make_check("commutativity", "n=" + std::to_string(n), bad);
        });
        jobs.emplace_back([n, &S] {
            std::vector<std::string> bad;
            for (int k = 0; k <= n; ++k) {
                auto at1 = S.r(n, n - k).specialize(1);
                for (const auto& w : group_table(n).perms) {
                    auto it = at1.find(w);
                    Rational got = it == at1.end() ? Rational(0) : it->second;
                    if (got != Rational(static_cast<unsigned long>(noninv(w, k))))
                        bad.push_back("R_{n,n-k}(1) at w=" + w.to_one_line() + ", k=" + std::to_string(k));
                }
            }
            return make_check("q1.noninv", "n=" + std::to_string(n), bad);
        });
    }
    if (opt.commutativity_n6) {
        for (int i = 0; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                jobs.emplace_back([i, j, &S] {
                    std::vector<std::string> bad;
                    if (S.r(6, i) * S.r(6, j) != S.r(6, j) * S.r(6, i)) bad.push_back("R_{6,i} R_{6,j} != R_{6,j} R_{6,i}");
                    return make_check("commutativity", "n=6,i=" + std::to_string(i) + ",j=" + std::to_string(j), bad);
                });
    }
    // randomized supplements: associativity and functoriality of the regular representation
    std::uint64_t seed = opt.seed;
    int caps_n = std::min(max_n, 4);
    Caps caps = opt.caps;
    jobs.emplace_back([seed, caps_n, caps] {
        std::vector<std::string> bad;
        std::mt19937_64 rng(seed);
        for (int n = 1; n <= caps_n; ++n)
            for (int trial = 0; trial < 3; ++trial) {
                auto a = detail::random_element(n, rng);
                auto b = detail::random_element(n, rng);
                auto c = detail::random_element(n, rng);
                if ((a * b) * c != a * (b * c)) bad.push_back("associativity fails at n=" + std::to_string(n));
                if ((a * b).star() != b.star() * a.star()) bad.push_back("star is not an anti-automorphism at n=" + std::to_string(n));
                Rational q0(2);
                auto ma = regular_matrix(a, q0, caps).numeric();
                auto mb = regular_matrix(b, q0, caps).numeric();
                if (regular_matrix(a * b, q0, caps).numeric() != ma * mb) bad.push_back("regular matrix not multiplicative at n=" + std::to_string(n));
            }
        return make_check("random.algebra_laws", "seed=" + std::to_string(seed), bad);
    });
    return jobs;
}

inline VerificationReport identity_suite(const SuiteOptions& opt, ShuffleSession& session = default_session()) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "identities";
    rep.parameters = {{"max_n", opt.max_n}, {"commutativity_n6", opt.commutativity_n6}, {"seed", opt.seed}};
    rep.checks = run_jobs(identity_jobs(opt, session), opt.workers);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline VerificationReport identity_suite(int max_n) {
    SuiteOptions opt;
    opt.max_n = max_n;
    return identity_suite(opt);
}

inline std::string q_list(const std::vector<Rational>& qs) {
    std::string s;
    for (const auto& q : qs) s += (s.empty() ? "" : ",") + q.get_str();
    return s;
}

/// Spectral oracles: regular charpolys (numeric), annihilation (symbolic, n <= 4), Specht models.
inline VerificationReport spectra_suite(const SuiteOptions& opt, const std::vector<Rational>& charpoly_q = {Rational(1), Rational(2)},
                                        const std::vector<Rational>& specht_q = {Rational(1), Rational(2), Rational(5, 7)},
                                        ShuffleSession& S = default_session()) {
    using detail::make_check;
    using detail::nk;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "spectra";
    rep.parameters = {{"max_n", opt.max_n}, {"charpoly_q", q_list(charpoly_q)}, {"specht_q", q_list(specht_q)}};
    std::vector<Job> jobs;
    int max_n = std::min(opt.max_n, 5);
    Caps caps = opt.caps;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& q0 : charpoly_q)
                jobs.emplace_back([n, k, q0, caps, &S] {
                    auto got = charpoly_at_q(regular_matrix(S.r(n, k), q0, caps));
                    auto want = predicted_regular_charpoly(n, k, q0);
                    std::vector<std::string> bad;
                    if (got != want) bad.push_back("charpoly mismatch: computed " + poly_to_string(got));
                    return make_check("spectrum.regular_charpoly", nk(n, k) + ",q=" + q0.get_str(), bad);
                });
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        for (int k = 0; k <= n; ++k)
            jobs.emplace_back([n, k, &S] {
                auto res = annihilation_check(n, k, S);
                std::vector<std::string> bad;
                if (!res.passed) bad.push_back("annihilation product is nonzero");
                auto c = make_check("spectrum.annihilation", nk(n, k), bad);
                c.detail = c.passed ? res.mode + " over " + std::to_string(res.distinct) + " distinct eigenvalues" : c.detail;
                return c;
            });
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& q0 : specht_q)
                jobs.emplace_back([n, lambda, q0, &S] {
                    std::vector<std::string> bad;
                    SeminormalModel model(lambda, q0);
                    auto gates = model_gates(model);
                    for (const auto& f : gates.failures) bad.push_back(f);
                    for (int k = 0; k <= n; ++k) {
                        auto r = specht_charpoly_check(lambda, k, q0, S);
                        if (!r.passed) bad.push_back(r.message);
                    }
                    return make_check("specht.charpoly", lambda.to_string() + ",q=" + q0.get_str(), bad);
                });
    rep.checks = run_jobs(jobs, opt.workers);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline VerificationReport nesting_suite(const SuiteOptions& opt, ShuffleSession& S = default_session()) {
    using detail::make_check;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "nesting";
    rep.parameters = {{"max_n", opt.max_n}, {"q_samples", q_list(opt.q_samples)}};
    std::vector<Job> jobs;
    Caps caps = opt.caps;
    for (int n = 1; n <= std::min(opt.max_n, 5); ++n)
        for (const auto& q0 : opt.q_samples) {
            if (q0 <= 0) continue;
            jobs.emplace_back([n, q0, caps, &S] {
                auto r = image_nesting_check(n, q0, S, caps);
                std::vector<std::string> bad;
                std::string ranks;
                for (const auto& row : r.rows) {
                    if (!row.ok()) bad.push_back("chain or equality fails at k=" + std::to_string(row.k));
                    ranks += (ranks.empty() ? "" : ",") + std::to_string(row.rank_r);
                }
                auto c = make_check("nesting.kernels_images", "n=" + std::to_string(n) + ",q=" + q0.get_str(), bad);
                if (c.passed) c.detail = "ranks of R_{n,k}, k=0..n+1: " + ranks;
                return c;
            });
        }
    rep.checks = run_jobs(jobs, opt.workers);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace qshuffle
