#include "qcantor/arith.hpp"

#include <algorithm>
#include <cctype>

namespace qcantor {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) return false;
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    std::string s(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(s, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    r.v_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    BigInt num, den(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw DomainError("not a rational: '" + std::string(text) + "'");
    } else {
        const auto dtext = text.substr(slash + 1);
        if (!parse_integer(text.substr(0, slash), num) || dtext.empty() || dtext[0] == '-' ||
            dtext[0] == '+' || !parse_integer(dtext, den))
            throw DomainError("not a rational: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational Rational::abs() const { return from_mpq(::abs(v_)); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    const auto ue = static_cast<unsigned long>(e);
    return Rational(ipow(num(), ue), ipow(den(), ue));
}

BigInt Rational::floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

BigInt Rational::ceil() const {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow10_neg(unsigned long digits) { return Rational(BigInt(1), ipow(BigInt(10), digits)); }

Rational qpochhammer(const Rational& a, const Rational& x, unsigned long n) {
    Rational prod(1);
    Rational xk(1);
    for (unsigned long k = 0; k < n; ++k) {
        prod *= Rational(1) - a * xk;
        xk *= x;
    }
    return prod;
}

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw DomainError("enclosure with lo > hi: " + str());
}

Enclosure Enclosure::around(const Rational& center, const Rational& radius) {
    if (radius.sign() < 0) throw DomainError("negative enclosure radius");
    return {center - radius, center + radius};
}

Rational Enclosure::magnitude() const { return std::max(lo_.abs(), hi_.abs()); }

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    const Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
    return {*mn, *mx};
}

Enclosure operator*(const Rational& s, const Enclosure& e) {
    if (s.sign() >= 0) return {s * e.lo_, s * e.hi_};
    return {s * e.hi_, s * e.lo_};
}

Enclosure operator+(const Rational& s, const Enclosure& e) { return {s + e.lo_, s + e.hi_}; }

RationalPoint::RationalPoint(int sign, long q) : sign_(sign), q_(q) {
    if (sign != 1 && sign != -1) throw DomainError("point sign must be +1 or -1");
    if (q < 2) throw DomainError("point denominator must be >= 2, got " + std::to_string(q));
}

RationalPoint RationalPoint::parse(std::string_view text) {
    int sign = 1;
    std::string_view rest = text;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        sign = rest[0] == '-' ? -1 : 1;
        rest.remove_prefix(1);
    }
    if (rest.size() < 3 || rest.substr(0, 2) != "1/")
        throw DomainError("expected a point of the form +-1/q, got '" + std::string(text) + "'");
    BigInt q;
    if (!parse_integer(rest.substr(2), q) || rest[2] == '-' || rest[2] == '+' || !q.fits_slong_p())
        throw DomainError("expected a point of the form +-1/q, got '" + std::string(text) + "'");
    return {sign, q.get_si()};
}

std::string RationalPoint::str() const { return (sign_ > 0 ? "+1/" : "-1/") + std::to_string(q_); }

std::string sci_text(const Rational& v) {
    if (v.is_zero()) return "0";
    const Rational a = v.abs();
    long k = static_cast<long>(a.num().get_str().size()) - static_cast<long>(a.den().get_str().size());
    const Rational ten(10);
    while (a < ten.pow(k)) --k;
    while (a >= ten.pow(k + 1)) ++k;
    const std::string m = (a * ten.pow(1 - k)).floor().get_str();
    return std::string(v.sign() < 0 ? "-" : "") + m.substr(0, 1) + "." + m.substr(1, 1) + "e" + std::to_string(k);
}

namespace {

// Digits of a nonnegative interval [lo, hi].
std::string render_nonneg(const Rational& lo, const Rational& hi, unsigned digits, bool& ok) {
    ok = true;
    BigInt scale(1);
    int shared = -1;
    BigInt shared_trunc;
    for (unsigned k = 0; k <= digits; ++k) {
        const BigInt tlo = (lo * Rational(scale)).floor();
        const BigInt thi = (hi * Rational(scale)).floor();
        if (tlo != thi) break;
        shared = static_cast<int>(k);
        shared_trunc = tlo;
        scale *= 10;
    }
    if (shared < 0) {
        ok = false;
        return {};
    }
    const BigInt pow10 = ipow(BigInt(10), static_cast<unsigned long>(shared));
    const bool exact = lo == hi && lo == Rational(shared_trunc, pow10);

    std::string ip = BigInt(shared_trunc / pow10).get_str();
    std::string fp;
    if (shared > 0) {
        fp = BigInt(shared_trunc % pow10).get_str();
        fp.insert(0, static_cast<std::size_t>(shared) - fp.size(), '0');
    }
    if (exact) {
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        return fp.empty() ? ip : ip + "." + fp;
    }
    return (fp.empty() ? ip : ip + "." + fp) + "…";
}

}  // namespace

std::string decimal_render(const Enclosure& e, unsigned digits) {
    if (digits == 0) throw DomainError("decimal_render needs digits >= 1");
    const std::string verbatim = "[" + e.lo().str() + ", " + e.hi().str() + "]";
    bool ok = false;
    std::string out;
    if (e.lo().sign() >= 0) {
        out = render_nonneg(e.lo(), e.hi(), digits, ok);
    } else if (e.hi().sign() <= 0) {
        out = render_nonneg(-e.hi(), -e.lo(), digits, ok);
        if (ok && out != "0") out.insert(0, "-");
    }
    return ok ? out : verbatim;
}

}  // namespace qcantor
