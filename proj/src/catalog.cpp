#include "qcantor/catalog.hpp"

#include <algorithm>

namespace qcantor {

namespace {

struct SeriesInfo {
    SeriesId id;
    const char* name;
    long offset;
    long first_index;
    // numerator exponent e(n) = a n^2 + b n
    long ea;
    long eb;
};

constexpr SeriesInfo infos[] = {
    {SeriesId::f, "f", 0, 0, 1, 0},       {SeriesId::phi, "phi", 0, 0, 1, 0},
    {SeriesId::psi, "psi", 0, 1, 1, 0},   {SeriesId::chi, "chi", 0, 0, 1, 0},
    {SeriesId::omega, "omega", 0, 0, 2, 2}, {SeriesId::nu, "nu", 0, 0, 1, 1},
    {SeriesId::rho, "rho", 0, 0, 2, 2},   {SeriesId::f0, "f0", 0, 0, 1, 0},
    {SeriesId::f1, "f1", 0, 0, 1, 1},     {SeriesId::F0, "F0", 0, 0, 2, 0},
    {SeriesId::F1, "F1", 0, 0, 2, 2},     {SeriesId::Phi, "Phi", -1, 0, 5, 0},
    {SeriesId::Psi, "Psi", -1, 0, 5, 0},  {SeriesId::r1, "r1", 0, 0, 1, 0},
    {SeriesId::r2, "r2", 0, 0, 1, 1},
};

const SeriesInfo& info(SeriesId id) {
    for (const auto& i : infos)
        if (i.id == id) return i;
    throw DomainError("unknown series id");
}

long num_exponent(SeriesId id, long n) {
    const auto& i = info(id);
    return i.ea * n * n + i.eb * n;
}

DenomFactor one_plus(long sign, long e) { return DenomFactor{{{1, 0}, {sign, e}}}; }

void require_unit_disk(const Rational& x) {
    if (!(x.abs() < Rational(1))) throw DomainError("point " + x.str() + " lies outside the unit disk |q| < 1");
}

}  // namespace

std::string name(SeriesId id) { return info(id).name; }

std::optional<SeriesId> parse_series(std::string_view text) {
    for (const auto& i : infos)
        if (text == i.name) return i.id;
    return std::nullopt;
}

std::string name(ProductId id) {
    switch (id) {
        case ProductId::P1: return "P1";
        case ProductId::P2: return "P2";
        case ProductId::P3: return "P3";
        case ProductId::P4: return "P4";
    }
    return "?";
}

std::optional<ProductId> parse_product(std::string_view text) {
    for (auto p : all_products)
        if (text == name(p)) return p;
    return std::nullopt;
}

Rational DenomFactor::eval(const Rational& x) const {
    Rational s(0);
    for (const auto& [c, e] : terms) s += Rational(c) * x.pow(e);
    return s;
}

Rational DenomFactor::lower_bound(const Rational& y) const {
    Rational s(1);
    for (const auto& [c, e] : terms)
        if (e > 0) s -= Rational(std::abs(c)) * y.pow(e);
    return s;
}

std::string DenomFactor::str() const {
    std::string s = "(";
    bool first = true;
    for (const auto& [c, e] : terms) {
        if (c < 0) s += "-";
        else if (!first) s += "+";
        first = false;
        const long m = std::abs(c);
        if (e == 0) {
            s += std::to_string(m);
            continue;
        }
        if (m != 1) s += std::to_string(m) + "*";
        s += e == 1 ? "q" : "q^" + std::to_string(e);
    }
    return s + ")";
}

std::vector<DenomFactor> new_factors(SeriesId id, long m) {
    switch (id) {
        case SeriesId::f:
            if (m < 1) return {};
            return {one_plus(1, m), one_plus(1, m)};
        case SeriesId::phi:
            if (m < 1) return {};
            return {one_plus(1, 2 * m)};
        case SeriesId::psi:
        case SeriesId::F0:
            if (m < 1) return {};
            return {one_plus(-1, 2 * m - 1)};
        case SeriesId::chi:
            if (m < 1) return {};
            return {DenomFactor{{{1, 0}, {-1, m}, {1, 2 * m}}}};
        case SeriesId::omega:
            return {one_plus(-1, 2 * m + 1), one_plus(-1, 2 * m + 1)};
        case SeriesId::nu:
            return {one_plus(1, 2 * m + 1)};
        case SeriesId::rho:
            return {DenomFactor{{{1, 0}, {1, 2 * m + 1}, {1, 4 * m + 2}}}};
        case SeriesId::f0:
        case SeriesId::f1:
            if (m < 1) return {};
            return {one_plus(1, m)};
        case SeriesId::F1:
            return {one_plus(-1, 2 * m + 1)};
        case SeriesId::Phi:
            if (m < 1) return {one_plus(-1, 1)};
            return {one_plus(-1, 5 * m - 1), one_plus(-1, 5 * m + 1)};
        case SeriesId::Psi:
            if (m < 1) return {one_plus(-1, 2)};
            return {one_plus(-1, 5 * m - 2), one_plus(-1, 5 * m + 2)};
        case SeriesId::r1:
        case SeriesId::r2:
            if (m < 1) return {};
            return {one_plus(-1, m)};
    }
    return {};
}

long series_offset(SeriesId id) { return info(id).offset; }
long series_first_index(SeriesId id) { return info(id).first_index; }

namespace {

Rational factor_product(SeriesId id, const Rational& x, long m) {
    Rational p(1);
    for (const auto& fac : new_factors(id, m)) {
        const Rational v = fac.eval(x);
        if (v.is_zero())
            throw PoleError(fac.str(), fac.str() + " factor vanishes at q = " + x.str() + " in " + name(id));
        p *= v;
    }
    return p;
}

}  // namespace

void check_poles(SeriesId id, const Rational& x) {
    // Factors 1 + sum c x^e with |c| <= 1 vanish only on |x| = 1; scanning the
    // first factors of each family is enough to find the first zero.
    if (x.abs() != Rational(1)) return;
    for (long m = 0; m <= 8; ++m) factor_product(id, x, m);
}

Rational term(SeriesId id, const Rational& x, long n) {
    if (n < 0) throw DomainError("negative term index");
    if (n < series_first_index(id)) return Rational(0);
    Rational denom(1);
    for (long m = 0; m <= n; ++m) denom *= factor_product(id, x, m);
    return x.pow(num_exponent(id, n)) / denom;
}

Rational term_ratio(SeriesId id, const Rational& x, long n) {
    if (n < series_first_index(id)) throw DomainError("term_ratio below the first index");
    return x.pow(num_exponent(id, n + 1) - num_exponent(id, n)) / factor_product(id, x, n + 1);
}

Rational partial_sum(SeriesId id, const Rational& x, long last) {
    check_poles(id, x);
    Rational s(series_offset(id));
    Rational t;
    for (long n = 0; n <= last; ++n) {
        if (n < series_first_index(id)) continue;
        t = n == series_first_index(id) ? term(id, x, n) : t * term_ratio(id, x, n - 1);
        s += t;
    }
    return s;
}

std::optional<Rational> ratio_bound_at(SeriesId id, const Rational& x, long n) {
    const Rational y = x.abs();
    Rational lower(1);
    for (const auto& fac : new_factors(id, n + 1)) {
        const Rational lb = fac.lower_bound(y);
        if (lb.sign() <= 0) return std::nullopt;
        lower *= lb;
    }
    return y.pow(num_exponent(id, n + 1) - num_exponent(id, n)) / lower;
}

TailStrategy tail_strategy(SeriesId id, const Rational& x, const Rational& target) {
    require_unit_disk(x);
    if (!(target < Rational(1))) throw DomainError("tail ratio target must be < 1");
    for (long n = series_first_index(id); n < 100000; ++n) {
        const auto r = ratio_bound_at(id, x, n);
        if (r && *r <= target) return {*r, n};
    }
    throw DomainError("no geometric tail bound found for " + name(id) + " at " + x.str());
}

Enclosure eval(SeriesId id, const Rational& x, const Rational& eps, long& last_index) {
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    check_poles(id, x);
    require_unit_disk(x);
    const long first = series_first_index(id);
    Rational sum(series_offset(id));
    Rational t;
    for (long n = 0; n < 1000000; ++n) {
        if (n < first) continue;
        t = n == first ? term(id, x, n) : t * term_ratio(id, x, n - 1);
        sum += t;
        const auto r = ratio_bound_at(id, x, n);
        if (!r || !(*r < Rational(1))) continue;
        // sum_{m > n} |t_m| <= |t_n| (R + R^2 + ...) since R(n) bounds all later ratios.
        const Rational tail = t.abs() * *r / (Rational(1) - *r);
        if (Rational(2) * tail <= eps) {
            last_index = n;
            return Enclosure::around(sum, tail);
        }
    }
    throw DomainError("series " + name(id) + " did not reach the requested width");
}

Enclosure eval(SeriesId id, const Rational& x, const Rational& eps) {
    long last = 0;
    return eval(id, x, eps, last);
}

namespace {

struct ProductShape {
    long e1;
    long e2;
    bool alternating;  // signs (-1)^(m+1), (-1)^m on the first/second factor (swapped for P4)
    bool swap_signs;
};

ProductShape shape(ProductId pid) {
    switch (pid) {
        case ProductId::P1: return {1, 4, false, false};
        case ProductId::P2: return {1, 4, true, false};
        case ProductId::P3: return {2, 3, false, false};
        case ProductId::P4: return {2, 3, true, true};
    }
    return {1, 4, false, false};
}

void require_product_q(long q) {
    if (q < 2) throw DomainError("products need an integer q >= 2, got " + std::to_string(q));
}

}  // namespace

Rational product_partial(ProductId pid, long q, long last) {
    require_product_q(q);
    const auto sh = shape(pid);
    const Rational qr(q);
    Rational p(1);
    for (long m = 0; m <= last; ++m) {
        long s1 = 1;
        long s2 = 1;
        if (sh.alternating) {
            // P2: (1 - (-1)^(m+1)/q^(5m+1)) (1 - (-1)^m/q^(5m+4))
            // P4: (1 - (-1)^m/q^(5m+2)) (1 - (-1)^(m+1)/q^(5m+3))
            const long odd = (m % 2 == 0) ? 1 : -1;
            s1 = sh.swap_signs ? odd : -odd;
            s2 = sh.swap_signs ? -odd : odd;
        }
        p *= Rational(1) - Rational(s1) / qr.pow(5 * m + sh.e1);
        p *= Rational(1) - Rational(s2) / qr.pow(5 * m + sh.e2);
    }
    return p;
}

Rational product_tail_sum(ProductId pid, long q, long last) {
    require_product_q(q);
    const auto sh = shape(pid);
    const Rational qr(q);
    const Rational head = qr.pow(-sh.e1) + qr.pow(-sh.e2);
    return head * qr.pow(-5 * (last + 1)) / (Rational(1) - qr.pow(-5));
}

Enclosure eval_product(ProductId pid, long q, const Rational& eps) {
    require_product_q(q);
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    for (long m = 0;; ++m) {
        const Rational sigma = product_tail_sum(pid, q, m);
        if (sigma > Rational(1, 2)) continue;
        // |prod (1 + u) - 1| <= e^sigma - 1 <= 2 sigma for sigma <= 1/2
        const Rational p = product_partial(pid, q, m);
        const Rational rad = Rational(2) * sigma * p.abs();
        if (Rational(2) * rad <= eps) return Enclosure::around(p, rad);
    }
}

ProductId rr_pairing(int which, int sign) {
    if (which == 1) return sign > 0 ? ProductId::P1 : ProductId::P2;
    if (which == 2) return sign > 0 ? ProductId::P3 : ProductId::P4;
    throw DomainError("Rogers-Ramanujan series index must be 1 or 2");
}

Enclosure rr_identity_residual(int which, const RationalPoint& pt, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    const ProductId pid = rr_pairing(which, pt.sign());
    const SeriesId sid = which == 1 ? SeriesId::r1 : SeriesId::r2;
    Rational sub = eps / Rational(8);
    for (int iter = 0; iter < 256; ++iter) {
        const Enclosure s = eval(sid, pt.value(), sub);
        const Enclosure p = eval_product(pid, pt.q(), sub);
        const Enclosure r = s * p - Enclosure(Rational(1));
        if (r.width() <= eps) return r;
        sub /= Rational(2);
    }
    throw DomainError("residual enclosure did not reach the requested width");
}

}  // namespace qcantor
