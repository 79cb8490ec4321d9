#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qcantor/errors.hpp"

namespace qcantor {

using BigInt = mpz_class;

/// Canonical arbitrary-precision fraction num/den with gcd(|num|, den) = 1
/// and den >= 1. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    static Rational from_mpq(const mpq_class& q);

    /// Accepts "p/q" or an integer; nothing else.
    static Rational parse(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long e) const;

    /// Largest integer <= value.
    BigInt floor() const;
    BigInt ceil() const;

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

/// base^e for e >= 0.
BigInt ipow(const BigInt& base, unsigned long e);

/// 10^-digits, exactly.
Rational pow10_neg(unsigned long digits);

/// (a; x)_n = prod_{k=0}^{n-1} (1 - a x^k); the empty product is 1.
Rational qpochhammer(const Rational& a, const Rational& x, unsigned long n);

/// Closed rational interval [lo, hi] with lo <= hi.
class Enclosure {
public:
    Enclosure() = default;
    explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
    Enclosure(Rational lo, Rational hi);

    /// [center - radius, center + radius]; radius must be nonnegative.
    static Enclosure around(const Rational& center, const Rational& radius);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    /// max(|lo|, |hi|)
    Rational magnitude() const;

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Enclosure& e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }
    bool intersects(const Enclosure& e) const { return lo_ <= e.hi_ && e.lo_ <= hi_; }

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Rational& s, const Enclosure& e);
    friend Enclosure operator+(const Rational& s, const Enclosure& e);
    friend Enclosure operator-(const Enclosure& e) { return {-e.hi_, -e.lo_}; }

    friend bool operator==(const Enclosure&, const Enclosure&) = default;

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

private:
    Rational lo_;
    Rational hi_;
};

/// The point sign/q with sign in {+1, -1} and q >= 2.
class RationalPoint {
public:
    RationalPoint(int sign, long q);

    /// Accepts "1/q", "+1/q" or "-1/q".
    static RationalPoint parse(std::string_view text);

    int sign() const { return sign_; }
    long q() const { return q_; }
    Rational value() const { return Rational(BigInt(sign_), BigInt(q_)); }
    /// "+1/2" or "-1/2".
    std::string str() const;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

private:
    int sign_;
    long q_;
};

/// Scientific text such as "3.5e-41" (two significant digits, truncated).
std::string sci_text(const Rational& v);

/// Decimal digits of the enclosure that lo and hi share, truncated, never
/// more than `digits` after the point. A trailing "…" marks that the value
/// continues past what is printed. Intervals straddling zero, or sharing no
/// digit at all, come back verbatim as "[lo, hi]".
std::string decimal_render(const Enclosure& e, unsigned digits);

}  // namespace qcantor
