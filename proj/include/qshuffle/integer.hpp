#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "qshuffle/errors.hpp"

namespace qshuffle {

/// Arbitrary-precision integer that stays in a machine word while it fits.
///
/// Polynomial coefficients in this library are almost always tiny, so the
/// int64 path carries nearly all of the work; any operation that would
/// overflow is redone in GMP and the result kept as an mpz until it shrinks
/// back into range.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : small_(v) {}  // NOLINT: implicit by design of arithmetic code
    Integer(int v) : small_(v) {}           // NOLINT
    explicit Integer(const mpz_class& v) { assign(v); }

    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    static Integer parse(std::string_view text) {
        mpz_class v;
        std::string s(text);
        if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("not an integer: '" + s + "'");
        return Integer(v);
    }

    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] bool is_zero() const { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && small_ == 1; }
    [[nodiscard]] int sign() const {
        if (big_) return sgn(*big_);
        return (small_ > 0) - (small_ < 0);
    }

    [[nodiscard]] mpz_class to_mpz() const {
        if (big_) return *big_;
        mpz_class r;
        mpz_set_si(r.get_mpz_t(), small_);
        return r;
    }

    [[nodiscard]] std::string to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

    Integer operator-() const {
        if (!big_ && small_ != INT64_MIN) return Integer(-small_);
        return Integer(mpz_class(-to_mpz()));
    }

    Integer& operator+=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        assign(to_mpz() + o.to_mpz());
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        assign(to_mpz() - o.to_mpz());
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        assign(to_mpz() * o.to_mpz());
        return *this;
    }

    /// this += a * b
    void add_product(const Integer& a, const Integer& b) {
        if (!big_ && !a.big_ && !b.big_) {
            std::int64_t p;
            std::int64_t s;
            if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &s)) {
                small_ = s;
                return;
            }
        }
        assign(to_mpz() + a.to_mpz() * b.to_mpz());
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    /// True iff d divides *this. d must be nonzero.
    [[nodiscard]] bool divisible_by(const Integer& d) const {
        if (!big_ && !d.big_ && d.small_ != -1) return small_ % d.small_ == 0;
        return mpz_divisible_p(to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
    }

    /// Quotient of an exact division; the caller guarantees divisibility.
    [[nodiscard]] Integer divexact(const Integer& d) const {
        if (!big_ && !d.big_ && d.small_ != -1) return Integer(small_ / d.small_);
        mpz_class r;
        mpz_class a = to_mpz();
        mpz_class b = d.to_mpz();
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return Integer(r);
    }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // normalized: a big value never fits in int64
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        int c = cmp(a.to_mpz(), b.to_mpz());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

private:
    void assign(const mpz_class& v) {
        if (mpz_fits_slong_p(v.get_mpz_t())) {
            small_ = mpz_get_si(v.get_mpz_t());
            big_.reset();
        } else {
            small_ = 0;
            if (big_) *big_ = v;
            else big_ = std::make_unique<mpz_class>(v);
        }
    }

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

static_assert(sizeof(long) == 8, "Integer assumes 64-bit long for mpz_fits_slong_p");

}  // namespace qshuffle
