#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/hecke.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/shuffles.hpp"

namespace qshuffle {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (['*'] unary)*          juxtaposition multiplies
//   unary   := '-' unary | power
//   power   := primary ['^' ['-'] integer]
//   primary := integer | 'q' | '(' expr ')' | name '(' args ')'
// Names: B(n) Bs(n) B(n,k) Bs(n,k) R(n,k) J(k) M(n,k) X(n,k) gamma(n,k) Lambda(n,k) T(i) star(expr).
// Elements of different ranks are lifted to the larger rank before combining.

using ExprValue = std::variant<LaurentPoly, HeckeElement>;

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, ShuffleSession& session) : session_(session) { tokenize(text); }

    ExprValue parse() {
        auto v = expr();
        if (pos_ != toks_.size()) fail("unexpected '" + toks_[pos_].text + "'");
        return v;
    }

private:
    struct Tok {
        char kind;  // 'n' number, 'i' identifier, or the symbol itself
        std::string text;
    };

    [[noreturn]] static void fail(const std::string& msg) { throw ParseError("expression: " + msg); }

    void tokenize(std::string_view s) {
        std::size_t i = 0;
        while (i < s.size()) {
            unsigned char c = static_cast<unsigned char>(s[i]);
            if (std::isspace(c)) {
                ++i;
            } else if (std::isdigit(c)) {
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                toks_.push_back({'n', std::string(s.substr(i, j - i))});
                i = j;
            } else if (std::isalpha(c) || c == '_') {
                std::size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                toks_.push_back({'i', std::string(s.substr(i, j - i))});
                i = j;
            } else if (s.substr(i, 2) == "\xC2\xB7") {  // ·
                toks_.push_back({'*', "*"});
                i += 2;
            } else if (s.substr(i, 3) == "\xE2\x88\x92") {  // −
                toks_.push_back({'-', "-"});
                i += 3;
            } else if (std::string_view("+-*^(),").find(static_cast<char>(c)) != std::string_view::npos) {
                toks_.push_back({static_cast<char>(c), std::string(1, static_cast<char>(c))});
                ++i;
            } else {
                fail("unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
            }
        }
    }

    [[nodiscard]] bool at(char kind) const { return pos_ < toks_.size() && toks_[pos_].kind == kind; }
    void expect(char kind) {
        if (!at(kind)) fail(std::string("expected '") + kind + "'");
        ++pos_;
    }
    int integer() {
        if (!at('n')) fail("expected an integer");
        try {
            return std::stoi(toks_[pos_++].text);
        } catch (const std::out_of_range&) {
            fail("integer too large");
        }
    }

    static int rank_of(const ExprValue& v) { return std::holds_alternative<HeckeElement>(v) ? std::get<HeckeElement>(v).rank() : -1; }
    static HeckeElement as_element(const ExprValue& v, int n) {
        if (const auto* p = std::get_if<LaurentPoly>(&v)) return HeckeElement::scalar(n, *p);
        const auto& e = std::get<HeckeElement>(v);
        return e.rank() == n ? e : e.lift(n);
    }

    template <class Op>
    static ExprValue combine(const ExprValue& a, const ExprValue& b, Op op) {
        int n = std::max(rank_of(a), rank_of(b));
        if (n < 0) return op(std::get<LaurentPoly>(a), std::get<LaurentPoly>(b));
        return op(as_element(a, n), as_element(b, n));
    }

    ExprValue expr() {
        ExprValue v = term();
        while (at('+') || at('-')) {
            bool minus = at('-');
            ++pos_;
            ExprValue r = term();
            v = minus ? combine(v, r, [](const auto& x, const auto& y) { return std::remove_cvref_t<decltype(x)>(x - y); })
                      : combine(v, r, [](const auto& x, const auto& y) { return std::remove_cvref_t<decltype(x)>(x + y); });
        }
        return v;
    }

    [[nodiscard]] bool starts_primary() const { return at('n') || at('i') || at('('); }

    ExprValue term() {
        ExprValue v = unary();
        while (at('*') || starts_primary()) {
            if (at('*')) ++pos_;
            ExprValue r = unary();
            v = combine(v, r, [](const auto& x, const auto& y) { return std::remove_cvref_t<decltype(x)>(x * y); });
        }
        return v;
    }

    ExprValue unary() {
        if (at('-')) {
            ++pos_;
            ExprValue v = unary();
            if (auto* p = std::get_if<LaurentPoly>(&v)) return LaurentPoly(-*p);
            return HeckeElement(-std::get<HeckeElement>(v));
        }
        return power();
    }

    ExprValue power() {
        ExprValue base = primary();
        if (!at('^')) return base;
        ++pos_;
        bool negative = false;
        if (at('-')) {
            negative = true;
            ++pos_;
        }
        int e = integer();
        if (auto* p = std::get_if<LaurentPoly>(&base)) {
            if (negative) {
                auto terms = p->terms();
                if (terms.size() != 1 || !(terms.begin()->second.is_one() || (-terms.begin()->second).is_one()))
                    fail("only ±q^e can be inverted");
                LaurentPoly inv = LaurentPoly::monomial(terms.begin()->second, -terms.begin()->first);
                LaurentPoly r = 1;
                for (int i = 0; i < e; ++i) r *= inv;
                return r;
            }
            LaurentPoly r = 1;
            for (int i = 0; i < e; ++i) r *= *p;
            return r;
        }
        if (negative) fail("negative powers of algebra elements are not supported");
        const auto& a = std::get<HeckeElement>(base);
        HeckeElement r = HeckeElement::one(a.rank());
        for (int i = 0; i < e; ++i) r = r * a;
        return r;
    }

    std::vector<int> int_args() {
        std::vector<int> args;
        expect('(');
        args.push_back(integer());
        while (at(',')) {
            ++pos_;
            args.push_back(integer());
        }
        expect(')');
        return args;
    }

    ExprValue primary() {
        if (at('n')) return LaurentPoly(Integer::parse(toks_[pos_++].text));
        if (at('(')) {
            ++pos_;
            ExprValue v = expr();
            expect(')');
            return v;
        }
        if (!at('i')) fail(pos_ < toks_.size() ? "unexpected '" + toks_[pos_].text + "'" : "unexpected end of input");
        std::string name = toks_[pos_++].text;
        if (name == "q") return LaurentPoly::q();
        if (name == "star") {
            expect('(');
            ExprValue v = expr();
            expect(')');
            if (auto* e = std::get_if<HeckeElement>(&v)) return e->star();
            return v;
        }
        auto args = int_args();
        auto need = [&](std::size_t count) {
            if (args.size() != count) fail(name + " takes " + std::to_string(count) + " argument(s)");
        };
        if (name == "B" || name == "Bs") {
            bool s = name == "Bs";
            if (args.size() == 1) return s ? session_.b_star(args[0]) : session_.b(args[0]);
            need(2);
            return s ? session_.b_star_nk(args[0], args[1]) : session_.b_nk(args[0], args[1]);
        }
        if (name == "R") {
            need(2);
            return session_.r(args[0], args[1]);
        }
        if (name == "J") {
            need(1);
            return jm_element(args[0], args[0]);
        }
        if (name == "M" || name == "X") {
            need(2);
            auto pm = parabolic_mass(args[0], args[1]);
            return name == "M" ? pm.M : pm.X;
        }
        if (name == "gamma") {
            need(2);
            return session_.gamma(args[0], args[1]);
        }
        if (name == "Lambda") {
            need(2);
            return session_.Lambda(args[0], args[1]);
        }
        if (name == "T") {
            need(1);
            if (args[0] < 1) fail("T(i) needs i >= 1");
            return HeckeElement::generator(args[0] + 1, args[0]);
        }
        fail("unknown name '" + name + "'");
    }

    ShuffleSession& session_;
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and evaluates; the result is lifted to at least `ambient` (scalars become elements when ambient > 0).
inline HeckeElement evaluate_expression(std::string_view text, int ambient = 0, ShuffleSession& session = default_session()) {
    ExprValue v = detail::ExprParser(text, session).parse();
    if (auto* p = std::get_if<LaurentPoly>(&v)) return HeckeElement::scalar(std::max(ambient, 1), *p);
    auto& e = std::get<HeckeElement>(v);
    return e.rank() >= ambient ? e : e.lift(ambient);
}

}  // namespace qshuffle
