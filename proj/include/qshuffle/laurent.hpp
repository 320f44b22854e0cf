#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/integer.hpp"

namespace qshuffle {

/// Exact rational scalar used as an evaluation point for q.
using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("not a rational number: '" + std::string(text) + "'");
    if (r.get_den() == 0) throw ZeroDenominator("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Laurent polynomial in q with integer coefficients.
///
/// Stored densely from the lowest exponent; both ends of the coefficient
/// vector are nonzero, and the zero polynomial has no coefficients at all,
/// so structural equality is mathematical equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT
    LaurentPoly(const Integer& c) {                 // NOLINT
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    static LaurentPoly monomial(const Integer& c, int exponent) {
        LaurentPoly p(c);
        if (!p.is_zero()) p.low_ = exponent;
        return p;
    }
    static LaurentPoly q() { return monomial(1, 1); }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    static LaurentPoly from_terms(const std::map<int, Integer>& terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) p += monomial(c, e);
        return p;
    }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0].is_one(); }
    [[nodiscard]] int low_degree() const { return is_zero() ? 0 : low_; }
    /// Degree of the top term; the zero polynomial reports -1 by convention.
    [[nodiscard]] int degree() const { return is_zero() ? -1 : low_ + static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::size_t term_span() const { return coeffs_.size(); }

    [[nodiscard]] Integer coefficient(int exponent) const {
        if (is_zero() || exponent < low_ || exponent > degree()) return {};
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }
    [[nodiscard]] const Integer& leading_coefficient() const { return coeffs_.back(); }

    /// Nonzero terms keyed by exponent.
    [[nodiscard]] std::map<int, Integer> terms() const {
        std::map<int, Integer> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
        return out;
    }

    /// Coefficients from q^low_degree() up to q^degree(), including inner zeros.
    [[nodiscard]] const std::vector<Integer>& coefficient_run() const { return coeffs_; }

    [[nodiscard]] bool is_polynomial() const { return is_zero() || low_ >= 0; }
    [[nodiscard]] bool has_nonnegative_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.sign() >= 0; });
    }
    [[nodiscard]] bool is_palindromic() const {
        return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
    }
    /// Weakly increasing then weakly decreasing coefficient run.
    [[nodiscard]] bool is_unimodal() const {
        std::size_t i = 0;
        while (i + 1 < coeffs_.size() && coeffs_[i] <= coeffs_[i + 1]) ++i;
        while (i + 1 < coeffs_.size() && coeffs_[i] >= coeffs_[i + 1]) ++i;
        return i + 1 >= coeffs_.size();
    }

    /// q^k * p
    [[nodiscard]] LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.low_ = a.low_ + b.low_;
        r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
        r.trim();
        return r;
    }

    /// this += a * b, without materializing the product.
    void add_product(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return;
        if (is_zero()) {
            *this = a * b;
            return;
        }
        int lo = a.low_ + b.low_;
        int hi = a.degree() + b.degree();
        reserve_range(lo, hi);
        auto base = static_cast<std::size_t>(lo - low_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[base + i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
        trim();
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
    }
    /// Total order for use as a map key (no algebraic meaning).
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.low_degree() != b.low_degree()) return a.low_degree() < b.low_degree();
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
    }

    /// Descending exponents with explicit signs, e.g. "q^3 + q - 2".
    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int e = degree(); e >= low_; --e) {
            const Integer& c = coeffs_[static_cast<std::size_t>(e - low_)];
            if (c.is_zero()) continue;
            bool negative = c.sign() < 0;
            Integer mag = negative ? -c : c;
            if (out.empty()) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            if (e == 0) {
                out += mag.to_string();
                continue;
            }
            if (!mag.is_one()) out += mag.to_string();
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    /// Parses a flat sum of terms such as "q^3 + 2q - 2", "-q^-1 - q^{-2}" or "3*q^2".
    static LaurentPoly parse(std::string_view text) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
        if (s.empty()) throw ParseError("empty polynomial");
        LaurentPoly result;
        std::size_t i = 0;
        auto read_int = [&](std::size_t& pos) -> std::string {
            std::size_t start = pos;
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return s.substr(start, pos - start);
        };
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (i != 0) {
                throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
            }
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            Integer coeff = i > start ? Integer::parse(s.substr(start, i - start)) : Integer(1);
            if (i < s.size() && s[i] == '*') ++i;
            int exponent = 0;
            if (i < s.size() && s[i] == 'q') {
                ++i;
                exponent = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string e = read_int(i);
                    if (e.empty() || e == "-" || e == "+") throw ParseError("bad exponent in '" + std::string(text) + "'");
                    exponent = std::stoi(e);
                }
            } else if (i == start) {
                throw ParseError("expected a term in '" + std::string(text) + "'");
            }
            result += monomial(sign < 0 ? -coeff : coeff, exponent);
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = subtract ? -o : o;
            return *this;
        }
        reserve_range(o.low_, o.degree());
        auto base = static_cast<std::size_t>(o.low_ - low_);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (subtract) coeffs_[base + i] -= o.coeffs_[i];
            else coeffs_[base + i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    // Widens the stored range to cover [lo, hi] with zero padding.
    void reserve_range(int lo, int hi) {
        if (lo < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer());
            low_ = lo;
        }
        if (hi > degree()) coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1));
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            low_ += static_cast<int>(lead);
        }
        if (coeffs_.empty()) low_ = 0;
    }

    int low_ = 0;
    std::vector<Integer> coeffs_;
};

/// c * q^0 + ... : the q-integer [k]_q = (1 - q^k) / (1 - q), a Laurent polynomial for k < 0.
inline LaurentPoly q_int(int k) {
    std::map<int, Integer> terms;
    if (k > 0)
        for (int e = 0; e < k; ++e) terms.emplace(e, 1);
    else
        for (int e = k; e < 0; ++e) terms.emplace(e, -1);
    return LaurentPoly::from_terms(terms);
}

inline LaurentPoly q_factorial(int k) {
    if (k < 0) throw OutOfRange("q_factorial of a negative number");
    LaurentPoly r = 1;
    for (int i = 2; i <= k; ++i) r *= q_int(i);
    return r;
}

/// Quotient a / b in the Laurent ring; throws NotDivisible when it does not exist over Z.
///
/// Long division runs from the top exponent and checks integrality of each
/// quotient coefficient as it goes.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (a.is_zero()) return {};
    std::vector<Integer> rem = a.coefficient_run();
    const std::vector<Integer>& div = b.coefficient_run();
    const Integer& lead = div.back();
    if (rem.size() < div.size()) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
    std::size_t qlen = rem.size() - div.size() + 1;
    std::vector<Integer> quot(qlen);
    for (std::size_t step = qlen; step-- > 0;) {
        Integer& top = rem[step + div.size() - 1];
        if (top.is_zero()) continue;
        if (!top.divisible_by(lead)) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
        Integer c = top.divexact(lead);
        for (std::size_t j = 0; j < div.size(); ++j) rem[step + j] -= c * div[j];
        quot[step] = std::move(c);
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
    std::map<int, Integer> terms;
    int shift = a.low_degree() - b.low_degree();
    for (std::size_t i = 0; i < quot.size(); ++i)
        if (!quot[i].is_zero()) terms.emplace(shift + static_cast<int>(i), quot[i]);
    return LaurentPoly::from_terms(terms);
}

/// Gaussian binomial; zero outside 0 <= k <= n.
inline LaurentPoly q_binomial(int n, int k) {
    if (n < 0) throw OutOfRange("q_binomial with negative n");
    if (k < 0 || k > n) return {};
    return exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

inline Rational evaluate(const LaurentPoly& p, const Rational& q0) {
    if (p.is_zero()) return 0;
    if (q0 == 0) {
        if (p.low_degree() < 0) throw ZeroDenominator("evaluating " + p.to_string() + " at q = 0");
        return Rational(p.coefficient(0).to_mpz());
    }
    // Horner over the coefficient run, then scale by q0^low.
    Rational acc = 0;
    const auto& run = p.coefficient_run();
    for (auto it = run.rbegin(); it != run.rend(); ++it) acc = acc * q0 + Rational(it->to_mpz());
    int low = p.low_degree();
    Rational scale = 1;
    Rational base = low >= 0 ? q0 : Rational(1) / q0;
    for (int i = 0; i < (low >= 0 ? low : -low); ++i) scale *= base;
    acc *= scale;
    acc.canonicalize();
    return acc;
}

}  // namespace qshuffle
