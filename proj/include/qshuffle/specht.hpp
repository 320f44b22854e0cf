#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/hecke.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/matrix.hpp"
#include "qshuffle/shuffles.hpp"
#include "qshuffle/spectrum.hpp"
#include "qshuffle/tableaux.hpp"

namespace qshuffle {

using RationalMatrix = Matrix<Rational>;

/// Seminormal matrix model of S^λ at q = q0, acting on row vectors indexed by SYT.
///
/// For t with i above i+1 in different rows and columns, d = c_t(i+1) - c_t(i) and
/// s = s_i t:  v_t T_i = q^d/[d] v_t + v_s,  v_s T_i = -1/[d] v_s + q[d-1][d+1]/[d]^2 v_t.
/// Same row gives q, same column gives -1.
class SeminormalModel {
public:
    SeminormalModel(Partition lambda, Rational q0) : lambda_(std::move(lambda)), q0_(std::move(q0)) {
        n_ = lambda_.size();
        if (q0_ == 0) throw DegenerateQ("q = 0 is not allowed");
        for (int d = 1; d <= n_; ++d)
            if (evaluate(q_int(d), q0_) == 0) throw DegenerateQ("[" + std::to_string(d) + "]_q vanishes at q = " + q0_.get_str());
        basis_ = enumerate_syt(lambda_);
        std::map<std::vector<std::vector<int>>, std::size_t> index;
        for (std::size_t a = 0; a < basis_.size(); ++a) index.emplace(basis_[a].rows(), a);
        std::size_t f = basis_.size();
        generators_.assign(static_cast<std::size_t>(std::max(n_, 1)), RationalMatrix(f, f));
        for (int i = 1; i < n_; ++i) {
            RationalMatrix& m = generators_[static_cast<std::size_t>(i)];
            for (std::size_t a = 0; a < f; ++a) {
                const auto& t = basis_[a];
                int r1 = t.row_of(i);
                int r2 = t.row_of(i + 1);
                int c1 = t.column_of(i);
                int c2 = t.column_of(i + 1);
                if (r1 == r2) {
                    m(a, a) = q0_;
                    continue;
                }
                if (c1 == c2) {
                    m(a, a) = -1;
                    continue;
                }
                int d = (c2 - r2) - (c1 - r1);
                auto rows = t.rows();
                std::swap(rows[static_cast<std::size_t>(r1 - 1)][static_cast<std::size_t>(c1 - 1)], rows[static_cast<std::size_t>(r2 - 1)][static_cast<std::size_t>(c2 - 1)]);
                std::size_t b = index.at(rows);
                Rational qd = evaluate(q_int(d), q0_);
                m(a, a) = evaluate(LaurentPoly::monomial(1, d), q0_) / qd;
                if (r1 < r2) m(a, b) = 1;
                else m(a, b) = q0_ * evaluate(q_int(d - 1), q0_) * evaluate(q_int(d + 1), q0_) / (qd * qd);
            }
        }
    }

    [[nodiscard]] const Partition& shape() const { return lambda_; }
    [[nodiscard]] const Rational& q0() const { return q0_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
    [[nodiscard]] const std::vector<StandardTableau>& basis() const { return basis_; }
    /// Matrix of T_i, 1 <= i < n.
    [[nodiscard]] const RationalMatrix& generator(int i) const {
        if (i < 1 || i >= n_) throw OutOfRange("T_" + std::to_string(i) + " does not exist for n = " + std::to_string(n_));
        return generators_[static_cast<std::size_t>(i)];
    }

    /// Matrices of every T_w, indexed by lexicographic rank, built along the reduced-word tree.
    [[nodiscard]] const std::vector<RationalMatrix>& basis_matrices() const {
        std::call_once(basis_once_, [&] {
            const auto& t = group_table(n_);
            basis_matrices_.assign(t.order(), RationalMatrix());
            basis_matrices_[0] = RationalMatrix::identity(dimension());
            std::vector<std::uint32_t> stack{0};
            while (!stack.empty()) {
                std::uint32_t node = stack.back();
                stack.pop_back();
                for (std::uint32_t child : t.children[node]) {
                    basis_matrices_[child] = basis_matrices_[node] * generators_[static_cast<std::size_t>(t.parent_gen[child])];
                    stack.push_back(child);
                }
            }
        });
        return basis_matrices_;
    }

private:
    Partition lambda_;
    Rational q0_;
    int n_ = 0;
    std::vector<StandardTableau> basis_;
    std::vector<RationalMatrix> generators_;
    mutable std::once_flag basis_once_;
    mutable std::vector<RationalMatrix> basis_matrices_;
};

inline SeminormalModel build_model(const Partition& lambda, const Rational& q0) { return {lambda, q0}; }

/// Image of a Hecke element under the model.
inline RationalMatrix module_matrix(const SeminormalModel& model, const HeckeElement& a) {
    if (a.rank() != model.n()) throw SizeMismatch("element of H_" + std::to_string(a.rank()) + " acting on a module for H_" + std::to_string(model.n()));
    const auto& mats = model.basis_matrices();
    std::size_t f = model.dimension();
    RationalMatrix out(f, f);
    for (std::size_t w = 0; w < mats.size(); ++w) {
        const LaurentPoly& c = a.coefficient_at(w);
        if (c.is_zero()) continue;
        Rational v = evaluate(c, model.q0());
        for (std::size_t i = 0; i < f; ++i)
            for (std::size_t j = 0; j < f; ++j)
                if (mats[w](i, j) != 0) out(i, j) += v * mats[w](i, j);
    }
    return out;
}

struct ModelGateReport {
    bool relations = true;   // quadratic, far commutation, braid
    bool jm_diagonal = true; // J_m diagonal with [content of m]_q
    bool branching = true;   // T_1..T_{n-2} preserve the blocks by shape of t restricted to n-1
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

inline ModelGateReport model_gates(const SeminormalModel& model) {
    ModelGateReport rep;
    int n = model.n();
    const Rational& q = model.q0();
    std::size_t f = model.dimension();
    auto id = RationalMatrix::identity(f);
    auto scaled = [&](const RationalMatrix& m, const Rational& s) {
        RationalMatrix r = m;
        for (std::size_t i = 0; i < f; ++i)
            for (std::size_t j = 0; j < f; ++j) r(i, j) *= s;
        return r;
    };
    std::string tag = model.shape().to_string() + " at q=" + q.get_str();
    for (int i = 1; i < n; ++i) {
        const auto& ti = model.generator(i);
        if (!(ti * ti == scaled(ti, q - 1) + scaled(id, q))) {
            rep.relations = false;
            rep.failures.push_back(tag + ": quadratic relation fails for T_" + std::to_string(i));
        }
        for (int j = i + 1; j < n; ++j) {
            const auto& tj = model.generator(j);
            bool ok = j == i + 1 ? ti * tj * ti == tj * ti * tj : ti * tj == tj * ti;
            if (!ok) {
                rep.relations = false;
                rep.failures.push_back(tag + ": relation between T_" + std::to_string(i) + " and T_" + std::to_string(j) + " fails");
            }
        }
    }
    for (int m = 1; m <= n; ++m) {
        auto jm = module_matrix(model, jm_element(n, m));
        for (std::size_t a = 0; a < f; ++a) {
            Rational want = evaluate(q_int(model.basis()[a].content_of(m)), q);
            if (jm(a, a) != want) {
                rep.jm_diagonal = false;
                rep.failures.push_back(tag + ": J_" + std::to_string(m) + " diagonal entry mismatch");
                break;
            }
        }
        if (!jm.is_diagonal()) {
            rep.jm_diagonal = false;
            rep.failures.push_back(tag + ": J_" + std::to_string(m) + " is not diagonal");
        }
    }
    auto restricted_shape = [&](const StandardTableau& t) {
        std::vector<int> parts;
        for (const auto& row : t.rows()) {
            int c = 0;
            for (int x : row) c += x < n;
            if (c > 0) parts.push_back(c);
        }
        return parts;
    };
    for (int i = 1; i + 1 < n; ++i) {
        const auto& ti = model.generator(i);
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = 0; b < f; ++b)
                if (ti(a, b) != 0 && restricted_shape(model.basis()[a]) != restricted_shape(model.basis()[b])) {
                    rep.branching = false;
                    rep.failures.push_back(tag + ": T_" + std::to_string(i) + " mixes restriction blocks");
                }
    }
    return rep;
}

struct SpechtCheckReport {
    Partition lambda;
    int k = 0;
    Rational q0;
    bool passed = false;
    RationalPoly computed;
    RationalPoly predicted;
    std::string message;
};

/// Characteristic polynomial of R_{n,k} on S^λ against Π (x - E_{λ∖μ}(k)(q0))^{d^μ}.
inline SpechtCheckReport specht_charpoly_check(const Partition& lambda, int k, const Rational& q0, ShuffleSession& session = default_session()) {
    SpechtCheckReport rep{lambda, k, q0, false, {}, {}, {}};
    SeminormalModel model(lambda, q0);
    int n = lambda.size();
    auto m = module_matrix(model, session.r(n, k));
    rep.computed = berkowitz_charpoly(m);
    std::vector<std::pair<Rational, std::uint64_t>> roots;
    for (const auto& f : charpoly_factors_specht(lambda, k)) roots.emplace_back(evaluate(f.eigenvalue, q0), f.multiplicity);
    rep.predicted = poly_from_roots(roots);
    rep.passed = rep.computed == rep.predicted;
    if (!rep.passed)
        rep.message = lambda.to_string() + ", k=" + std::to_string(k) + ", q=" + q0.get_str() + ": computed " + poly_to_string(rep.computed) +
                      " but predicted " + poly_to_string(rep.predicted);
    return rep;
}

}  // namespace qshuffle
