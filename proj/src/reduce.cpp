#include "qcantor/reduce.hpp"

#include <optional>

namespace qcantor {

namespace {

// Coefficient shapes, all written for x = s/q with one code path in s.
struct Shape {
    QExpPoly a;
    QExpPoly b;
    long n_start;
    Rational prefix;
    Rational factor;
    std::string a_display;
    std::string b_display;
};

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

std::string sign_power(const std::string& e) { return e == "n" ? "(-1)^n" : "(-1)^(" + e + ")"; }

// s^e as a factor: "(-1)^n*" when s = -1, nothing otherwise.
std::string alt(int s, const std::string& e = "n") { return s > 0 ? "" : sign_power(e) + "*"; }

// s^e as a summand.
std::string unit(int s, const std::string& e = "n") { return s > 0 ? "1" : sign_power(e); }

Shape shape(SeriesId id, int s, long q) {
    // c * s^(sa n + sb) * q^(alpha n + beta)
    auto P = [s](long sa, long sb, long alpha, long beta, long c = 1) {
        return QExpPoly::signed_q_pow(s, sa, sb, alpha, beta, c);
    };
    const QExpPoly one = QExpPoly::constant(1);
    const Rational qr(q);
    const Rational sr(s);
    const std::string sg = sign_text(s);
    const std::string ms = sign_text(-s);

    switch (id) {
        case SeriesId::f: {
            const QExpPoly base = P(0, 0, 1, 1) + P(1, 1, 0, 0);
            const Rational c = sr * qr / ((qr + sr) * (qr + sr));
            return {base * base, P(1, 0, 1, 0), 1, Rational(1) + c, c,
                    "(q^(n+1)+" + unit(s, "n+1") + ")^2", alt(s) + "q^n"};
        }
        case SeriesId::phi:
            return {P(0, 0, 2, 0) + one, P(1, 0, 1, 0), 1, Rational(1), Rational(1), "q^(2n)+1", alt(s) + "q^n"};
        case SeriesId::psi: {
            const Rational c = sr / (qr - sr);
            return {P(0, 0, 2, -1) - P(0, 1, 0, 0), P(1, -1, 0, 0).valid_from(2), 2, c, c,
                    "q^(2n-1)" + ms + "1", unit(s, "n-1")};
        }
        case SeriesId::chi:
            return {P(0, 0, 2, 0) - P(1, 0, 1, 0) + one, P(1, 0, 1, 0), 1, Rational(1), Rational(1),
                    "q^(2n)-" + alt(s) + "q^n+1", alt(s) + "q^n"};
        case SeriesId::omega: {
            const QExpPoly base = P(0, 0, 2, 1) - P(0, 1, 0, 0);
            const Rational c = qr * qr / ((qr - sr) * (qr - sr));
            return {base * base, P(0, 0, 2, 0), 1, c, c, "(q^(2n+1)" + ms + "1)^2", "q^(2n)"};
        }
        case SeriesId::nu:
            return {P(0, 0, 2, -1) + P(0, 1, 0, 0), P(0, 0, 1, 0), 1, Rational(0), Rational(1),
                    "q^(2n-1)" + sg + "1", "q^n"};
        case SeriesId::rho:
            return {P(0, 0, 4, -2) + P(0, 1, 2, -1) + one, P(0, 0, 2, 0), 1, Rational(0), Rational(1),
                    "q^(4n-2)" + sg + "q^(2n-1)+1", "q^(2n)"};
        case SeriesId::f0:
            return {P(0, 0, 2, -1) + P(1, 0, 1, -1), P(1, 0, 0, 0), 1, Rational(1), Rational(1),
                    "q^(n-1)*(q^n+" + unit(s) + ")", unit(s)};
        case SeriesId::f1:
            return {P(0, 0, 2, 0) + P(1, 0, 1, 0), one, 1, Rational(1), Rational(1),
                    "q^n*(q^n+" + unit(s) + ")", "1"};
        case SeriesId::F0:
            return {P(0, 0, 4, -2) - P(0, 1, 2, -1), one, 1, Rational(1), Rational(1),
                    "q^(2n-1)*(q^(2n-1)" + ms + "1)", "1"};
        case SeriesId::F1:
            return {P(0, 0, 4, 0) - P(0, 1, 2, -1), P(0, 0, 0, 1), 1, qr / (qr - sr), Rational(1) / (qr - sr),
                    "q^(2n-1)*(q^(2n+1)" + ms + "1)", "q"};
        case SeriesId::Phi: {
            const QExpPoly a = (P(0, 0, 5, -1) - P(1, 1, 0, 0)) * (P(0, 0, 5, 1) - P(1, 1, 0, 0));
            const Rational c = qr / (qr - sr);
            return {a, P(1, 0, 5, 0), 1, c - Rational(1), c,
                    "(q^(5n-1)-" + unit(s, "n+1") + ")*(q^(5n+1)-" + unit(s, "n+1") + ")", alt(s) + "q^(5n)"};
        }
        case SeriesId::Psi: {
            const QExpPoly a = (P(0, 0, 5, -2) - P(1, 0, 0, 0)) * (P(0, 0, 5, 2) - P(1, 0, 0, 0));
            const Rational c = qr * qr / (qr * qr - Rational(1));
            return {a, P(1, 0, 5, 0), 1, c - Rational(1), c,
                    "(q^(5n-2)-" + unit(s) + ")*(q^(5n+2)-" + unit(s) + ")", alt(s) + "q^(5n)"};
        }
        case SeriesId::r1:
            return {P(0, 0, 2, 0) - P(1, 0, 1, 0), P(1, 0, 1, 0), 1, Rational(1), Rational(1),
                    "q^n*(q^n-" + unit(s) + ")", alt(s) + "q^n"};
        case SeriesId::r2:
            return {P(0, 0, 2, 0) - P(1, 0, 1, 0), one, 1, Rational(1), Rational(1),
                    "q^n*(q^n-" + unit(s) + ")", "1"};
    }
    throw DomainError("unknown series id");
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

bool leading_ok(const CantorFamily& fam, long q) {
    const BigInt a = coeff_eval(fam.a, q, fam.n_start);
    const BigInt b = coeff_eval(fam.b, q, fam.n_start);
    return a >= 2 && abs_big(b) <= a - 1;
}

// First index >= n0 where the normalization conditions fail, if the
// comparisons can decide it; nullopt when they hold from n0 on.
std::optional<long> first_violation(const QExpPoly& a, const QExpPoly& b, long q, long n0) {
    const QExpPoly am1 = a - QExpPoly::constant(1);
    const ComparisonCertificate certs[] = {
        compare_eventually(a, QExpPoly::constant(2), q, n0),
        compare_eventually(am1, b, q, n0),
        compare_eventually(am1, -b, q, n0),
    };
    std::optional<long> first;
    for (const auto& c : certs) {
        if (c.holds()) continue;
        if (!c.counterexample)
            throw Unsupported("cannot decide a_n >= 2 and |b_n| <= a_n - 1 symbolically for a = " + a.str() +
                              ", b = " + b.str());
        if (!first || *c.counterexample < *first) first = c.counterexample;
    }
    return first;
}

void fold_leading(Reduction& r, long q) {
    auto& fam = r.family;
    const long n = fam.n_start;
    const BigInt a = coeff_eval(fam.a, q, n);
    const BigInt b = coeff_eval(fam.b, q, n);
    if (a == 0) throw DomainError("degenerate family: a_" + std::to_string(n) + " = 0");
    r.prefix += r.factor * Rational(b, a);
    r.factor /= Rational(a);
    ++fam.n_start;
    r.trace.push_back("fold n = " + std::to_string(n) + ": a = " + a.get_str() + ", b = " + b.get_str() +
                      "; n_start -> " + std::to_string(fam.n_start));
}

}  // namespace

Reduction reduce_raw(SeriesId id, const RationalPoint& pt) {
    Shape sh = shape(id, pt.sign(), pt.q());
    Reduction r;
    r.series = id;
    r.pt = pt;
    r.prefix = sh.prefix;
    r.factor = sh.factor;
    r.family = make_family(std::move(sh.a), std::move(sh.b), sh.n_start, sh.a_display, sh.b_display);
    r.raw_n_start = sh.n_start;
    return r;
}

Reduction normalize_family(Reduction r) {
    const long q = r.pt.q();
    auto& fam = r.family;
    for (int scan = 0; scan < 1000; ++scan) {
        if (!leading_ok(fam, q)) {
            fold_leading(r, q);
            continue;
        }
        if (!fam.symbolic()) return r;
        const auto bad = first_violation(fam.a_poly(), fam.b_poly(), q, fam.n_start);
        if (!bad) return r;
        while (fam.n_start <= *bad) fold_leading(r, q);
    }
    throw Unsupported("normalization did not settle within 1000 indices");
}

Reduction reduce(SeriesId id, const RationalPoint& pt) { return normalize_family(reduce_raw(id, pt)); }

Enclosure verify_reduction(const Reduction& r, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    if (r.factor.is_zero()) throw InternalInconsistency("reduction with zero factor");
    const Rational quarter = eps / Rational(4);
    const Enclosure direct = eval(r.series, r.pt.value(), quarter);
    const Enclosure sum = tail_S(r.family, r.pt.q(), r.family.n_start, quarter / r.factor.abs());
    return direct - (r.prefix + r.factor * sum);
}

Enclosure verify_reduction(SeriesId id, const RationalPoint& pt, const Rational& eps) {
    return verify_reduction(reduce(id, pt), eps);
}

Rational certify_gate_eps() { return pow10_neg(30); }

namespace {

CertifiedReduction certify_with(SeriesId id, const RationalPoint& pt, std::optional<Criterion> criterion) {
    CertifiedReduction out{reduce(id, pt), Enclosure(), {}};
    const auto& r = out.reduction;
    if (r.factor.is_zero()) throw InternalInconsistency("reduction of " + name(id) + " has factor 0");
    out.residual = verify_reduction(r, certify_gate_eps());
    if (!out.residual.contains(Rational(0)))
        throw InternalInconsistency("reduction identity fails for " + name(id) + " at " + pt.str() +
                                    ": residual " + out.residual.str());
    out.certificate = criterion ? check(*criterion, r.family, pt.q()) : check_auto(r.family, pt.q());
    auto& notes = out.certificate.notes;
    notes.push_back("reduction: " + name(id) + "(" + pt.str() + ") = " + r.prefix.str() + " + " + r.factor.str() +
                    " * S, a_n = " + r.family.a_display + ", b_n = " + r.family.b_display + ", n >= " +
                    std::to_string(r.family.n_start));
    for (const auto& t : r.trace) notes.push_back("normalization " + t);
    if (!criterion && out.certificate.criterion == Criterion::oppenheim4 &&
        (id == SeriesId::psi || id == SeriesId::chi))
        notes.push_back("b_n has constant sign here, so the nonnegative-digit criterion is used instead of "
                        "the signed one");
    return out;
}

}  // namespace

CertifiedReduction certify(SeriesId id, const RationalPoint& pt) { return certify_with(id, pt, std::nullopt); }

CertifiedReduction certify(SeriesId id, const RationalPoint& pt, Criterion criterion) {
    return certify_with(id, pt, criterion);
}

}  // namespace qcantor
