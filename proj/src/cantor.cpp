#include "qcantor/cantor.hpp"

#include <algorithm>

namespace qcantor {

ExplicitSeq ExplicitSeq::affine_seq(const BigInt& c0, const BigInt& c1) {
    ExplicitSeq s;
    s.gen = [c0, c1](long n) { return BigInt(c0 + c1 * n); };
    s.affine = {c0, c1};
    if (c1 == 0) s.description = c0.get_str();
    else if (c0 == 0) s.description = (c1 == 1 ? std::string() : c1.get_str() + "*") + "n";
    else s.description = (c1 == 1 ? std::string() : c1.get_str() + "*") + "n" + (c0 > 0 ? "+" : "") + c0.get_str();
    return s;
}

BigInt coeff_eval(const CoeffSeq& c, long q, long n) {
    if (const auto* p = std::get_if<QExpPoly>(&c)) return p->eval(q, n);
    return std::get<ExplicitSeq>(c).gen(n);
}

std::string coeff_text(const CoeffSeq& c) {
    if (const auto* p = std::get_if<QExpPoly>(&c)) return p->str();
    return std::get<ExplicitSeq>(c).description;
}

bool CantorFamily::symbolic() const {
    return std::holds_alternative<QExpPoly>(a) && std::holds_alternative<QExpPoly>(b);
}

const QExpPoly& CantorFamily::a_poly() const { return std::get<QExpPoly>(a); }
const QExpPoly& CantorFamily::b_poly() const { return std::get<QExpPoly>(b); }

CantorFamily make_family(QExpPoly a, QExpPoly b, long n_start, std::string a_display, std::string b_display) {
    CantorFamily fam;
    if (a_display.empty()) a_display = a.str();
    if (b_display.empty()) b_display = b.str();
    fam.a = std::move(a);
    fam.b = std::move(b);
    fam.n_start = n_start;
    fam.a_display = std::move(a_display);
    fam.b_display = std::move(b_display);
    return fam;
}

Rational partial_sum(const CantorFamily& fam, long q, long last) {
    if (last < fam.n_start) throw DomainError("partial_sum needs N >= n_start");
    Rational sum(0);
    Rational prod(1);
    for (long n = fam.n_start; n <= last; ++n) {
        const BigInt a = coeff_eval(fam.a, q, n);
        if (a == 0) throw DomainError("degenerate family: a_" + std::to_string(n) + " = 0");
        prod *= Rational(a);
        sum += Rational(coeff_eval(fam.b, q, n)) / prod;
    }
    return sum;
}

namespace {

const QExpPoly& one_poly() {
    static const QExpPoly p = QExpPoly::constant(1);
    return p;
}

QExpPoly constant(long c) { return QExpPoly::constant(c); }

bool is_zero_coeff(const CoeffSeq& c) {
    const auto* p = std::get_if<QExpPoly>(&c);
    return p && p->is_zero();
}

}  // namespace

std::optional<long> decay_shift(const QExpPoly& a, const QExpPoly& b, long q, long n0) {
    if (b.is_zero()) return 0;
    const QExpPoly qn_b = QExpPoly::q_pow(1, 0) * b;
    for (long k = 0; k <= 64; ++k) {
        const QExpPoly lhs = QExpPoly::q_pow(0, k) * a;
        if (compare_eventually(lhs, qn_b, q, n0).holds() && compare_eventually(lhs, -qn_b, q, n0).holds()) return k;
    }
    return std::nullopt;
}

Enclosure tail_S(const CantorFamily& fam, long q, long N, const Rational& eps) {
    if (N < fam.n_start) throw DomainError("tail_S needs N >= n_start");
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    if (is_zero_coeff(fam.b)) return Enclosure(Rational(0));

    // Remainder after M: sum_{n > M} |b_n|/(a_N...a_n) <= 2 lambda_{M+1} / (a_N...a_M)
    // when a_k >= 2 and |b_n| <= lambda_n a_n with lambda nonincreasing.
    bool unit = false;
    std::optional<long> shift;
    std::optional<Rational> declared;
    if (fam.symbolic()) {
        const auto& a = fam.a_poly();
        const auto& b = fam.b_poly();
        if (!compare_eventually(a, constant(2), q, N).holds())
            throw InconclusiveTail("a_n >= 2 is not certified from n = " + std::to_string(N));
        shift = decay_shift(a, b, q, N);
        unit = compare_eventually(a, b, q, N).holds() && compare_eventually(a, -b, q, N).holds();
        if (!shift && !unit) throw InconclusiveTail("no ratio certificate for |b_n| against a_n");
    } else {
        if (!fam.declared_ratio_bound) throw InconclusiveTail("generator family without a declared ratio bound");
        declared = fam.declared_ratio_bound;
    }

    const Rational qr(q);
    Rational sum(0);
    Rational prod(1);
    for (long m = N; m < N + 100000; ++m) {
        const BigInt a = coeff_eval(fam.a, q, m);
        if (a == 0) throw DomainError("degenerate family: a_" + std::to_string(m) + " = 0");
        prod *= Rational(a);
        sum += Rational(coeff_eval(fam.b, q, m)) / prod;

        std::optional<Rational> lambda;
        if (unit) lambda = Rational(1);
        if (shift) {
            const Rational d = qr.pow(*shift - m - 1);
            if (!lambda || d < *lambda) lambda = d;
        }
        if (declared) lambda = *declared;
        const Rational rem = Rational(2) * *lambda / prod.abs();
        if (Rational(2) * rem <= eps) return Enclosure::around(sum, rem);
    }
    throw InconclusiveTail("tail enclosure did not reach the requested width");
}

Rational ht_tail_bound_f(long q, long N) {
    if (q < 2) throw DomainError("q must be >= 2");
    if (N < 1) throw DomainError("N must be >= 1");
    const Rational qr(q);
    constexpr long cutoff = 5;
    Rational theta(0);
    for (long m = 0; m <= cutoff; ++m) theta += qr.pow(-m * m);
    theta += qr.pow(-cutoff * cutoff) * qr.pow(-2 * cutoff) / (Rational(1) - qr.inverse());
    return qr.pow(-N) * theta;
}

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::cantor1869: return "cantor1869";
        case Criterion::oppenheim4: return "oppenheim4";
        case Criterion::oppenheim8: return "oppenheim8";
        case Criterion::ht: return "ht";
    }
    return "?";
}

std::optional<Criterion> parse_criterion(const std::string& text) {
    for (auto c : {Criterion::cantor1869, Criterion::oppenheim4, Criterion::oppenheim8, Criterion::ht})
        if (text == to_string(c)) return c;
    return std::nullopt;
}

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::holds: return "holds";
        case HypothesisStatus::fails: return "fails";
        case HypothesisStatus::undecided: return "undecided";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::irrational: return "irrational";
        case Verdict::rational: return "rational";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

long IrrationalityCertificate::holds_count() const {
    return std::count_if(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds(); });
}

namespace {

// Hypothesis discharged by one or more comparisons that must all hold.
Hypothesis from_comparisons(std::string name, std::vector<ComparisonCertificate> certs, std::string evidence) {
    Hypothesis h;
    h.name = std::move(name);
    h.evidence = std::move(evidence);
    h.status = HypothesisStatus::holds;
    for (const auto& c : certs) {
        if (c.counterexample) h.status = HypothesisStatus::fails;
        else if (!c.holds() && h.status == HypothesisStatus::holds) h.status = HypothesisStatus::undecided;
        if (c.crossover) h.crossover = std::max(h.crossover.value_or(c.n0), *c.crossover);
        h.prefix_depth = std::max(h.prefix_depth, c.prefix_checked_to - c.n0 + 1);
    }
    h.comparisons = std::move(certs);
    return h;
}

Hypothesis compare_hyp(std::string name, const QExpPoly& p, const QExpPoly& q, long qv, long n0,
                       Relation rel = Relation::ge) {
    auto cert = compare_eventually(p, q, qv, n0, rel);
    std::string ev = "(" + p.str() + ") " + to_string(rel) + " (" + q.str() + ") by dominant term";
    return from_comparisons(std::move(name), {cert}, std::move(ev));
}

Hypothesis abs_bound_hyp(std::string name, const QExpPoly& bound, const QExpPoly& b, long qv, long n0,
                         Relation rel) {
    auto c1 = compare_eventually(bound, b, qv, n0, rel);
    auto c2 = compare_eventually(bound, -b, qv, n0, rel);
    std::string ev = "(" + bound.str() + ") " + to_string(rel) + " +-(" + b.str() + ") by dominant term";
    return from_comparisons(std::move(name), {c1, c2}, std::move(ev));
}

Hypothesis sign_hyp(std::string name, const QExpPoly& b, long q, long n0, bool want_alternating) {
    Hypothesis h;
    h.name = std::move(name);
    const auto sp = sign_pattern(b, q, n0);
    h.evidence = "sign pattern of " + b.str() + ": " + to_string(sp.pattern);
    if (sp.pattern == SignPattern::undecided) {
        h.status = b.is_zero() ? HypothesisStatus::fails : HypothesisStatus::undecided;
        return h;
    }
    h.crossover = sp.crossover;
    h.prefix_depth = 17;
    if (want_alternating) {
        h.status = sp.pattern == SignPattern::alternating ? HypothesisStatus::holds : HypothesisStatus::fails;
    } else {
        h.status = sp.pattern == SignPattern::eventually_negative ? HypothesisStatus::fails : HypothesisStatus::holds;
    }
    return h;
}

// "q^(n-K)" or "q^(K-n)" text with the K = 0 case simplified.
std::string shifted_power(long k, bool decay) {
    if (k == 0) return decay ? "q^(-n)" : "q^n";
    return decay ? "q^(" + std::to_string(k) + "-n)" : "q^(n-" + std::to_string(k) + ")";
}

Hypothesis growth_hyp(const QExpPoly& a, long q, long n0) {
    Hypothesis h;
    h.name = "a_n -> infinity";
    const QExpPoly qn = QExpPoly::q_pow(1, 0);
    for (long k = 0; k <= 64; ++k) {
        auto c = compare_eventually(QExpPoly::q_pow(0, k) * a, qn, q, n0);
        if (c.holds()) {
            h = from_comparisons(h.name, {c}, "a_n >= " + shifted_power(k, false));
            return h;
        }
    }
    h.evidence = "no bound a_n >= q^(n-K) with K <= 64";
    return h;
}

Hypothesis decay_hyp(const QExpPoly& a, const QExpPoly& b, long q, long n0, std::optional<long>& shift) {
    Hypothesis h;
    h.name = "b_n/a_n -> 0";
    shift = decay_shift(a, b, q, n0);
    if (shift) {
        h.status = HypothesisStatus::holds;
        h.crossover = n0;
        h.evidence = "|b_n| <= " + shifted_power(*shift, true) + " * a_n";
    } else {
        h.evidence = "no bound |b_n| <= q^(K-n) a_n with K <= 64";
    }
    return h;
}

void require_symbolic(const CantorFamily& fam, Criterion c) {
    if (!fam.symbolic())
        throw Unsupported(to_string(c) + " needs closed-form coefficients; generator families are not supported");
}

void set_verdict(IrrationalityCertificate& cert) {
    const bool all = std::all_of(cert.hypotheses.begin(), cert.hypotheses.end(),
                                 [](const Hypothesis& h) { return h.holds(); });
    cert.verdict = all ? Verdict::irrational : Verdict::inconclusive;
}

}  // namespace

IrrationalityCertificate check_oppenheim_nonneg(const CantorFamily& fam, long q) {
    require_symbolic(fam, Criterion::oppenheim4);
    const auto& a = fam.a_poly();
    const auto& b = fam.b_poly();
    const long n0 = fam.n_start;
    IrrationalityCertificate cert;
    cert.criterion = Criterion::oppenheim4;
    cert.hypotheses.push_back(compare_hyp("a_n >= 2", a, constant(2), q, n0));
    cert.hypotheses.push_back(compare_hyp("b_n >= 0", b, constant(0), q, n0));
    cert.hypotheses.push_back(compare_hyp("b_n <= a_n - 1", a - one_poly(), b, q, n0));
    cert.hypotheses.push_back(sign_hyp("b_n > 0 infinitely often", b, q, n0, false));
    cert.hypotheses.push_back(growth_hyp(a, q, n0));
    std::optional<long> shift;
    cert.hypotheses.push_back(decay_hyp(a, b, q, n0, shift));
    set_verdict(cert);
    return cert;
}

IrrationalityCertificate check_oppenheim_signed(const CantorFamily& fam, long q) {
    require_symbolic(fam, Criterion::oppenheim8);
    const auto& a = fam.a_poly();
    const auto& b = fam.b_poly();
    const long n0 = fam.n_start;
    IrrationalityCertificate cert;
    cert.criterion = Criterion::oppenheim8;
    cert.hypotheses.push_back(compare_hyp("a_n >= 2", a, constant(2), q, n0));
    cert.hypotheses.push_back(abs_bound_hyp("|b_n| <= a_n - 1", a - one_poly(), b, q, n0, Relation::ge));
    cert.hypotheses.push_back(sign_hyp("b_n takes both signs beyond every index", b, q, n0, true));
    cert.hypotheses.push_back(growth_hyp(a, q, n0));
    std::optional<long> shift;
    cert.hypotheses.push_back(decay_hyp(a, b, q, n0, shift));
    set_verdict(cert);
    return cert;
}

IrrationalityCertificate check_ht(const CantorFamily& fam, long q) {
    require_symbolic(fam, Criterion::ht);
    const auto& a = fam.a_poly();
    const auto& b = fam.b_poly();
    const long n0 = fam.n_start;
    IrrationalityCertificate cert;
    cert.criterion = Criterion::ht;
    cert.hypotheses.push_back(compare_hyp("a_n > 1", a, one_poly(), q, n0, Relation::gt));
    const bool a_ok = cert.hypotheses.back().holds();

    Hypothesis div;
    div.name = "a_n does not divide b_n";
    const bool pure_power = b.is_unit_monomial() && !b.terms()[0].parity_c;
    if (a_ok && pure_power && coprime_to_q_witness(a, q, n0)) {
        div.status = HypothesisStatus::holds;
        div.crossover = n0;
        div.prefix_depth = 33;
        div.evidence = "a_n = +-1 (mod q) so gcd(a_n, q) = 1, while b_n = +-q^k";
    } else {
        div = abs_bound_hyp(div.name, a, b, q, n0, Relation::gt);
        // a_n > |b_n| leaves a_n | b_n only for b_n = 0
        std::string nonzero;
        if (b.is_zero()) {
            div.status = HypothesisStatus::fails;
            nonzero = "b_n = 0";
        } else if (b.terms().size() == 1) {
            nonzero = "b_n is a single nonzero term";
        } else {
            auto c = compare_eventually(b * b, one_poly(), q, n0);
            div.comparisons.push_back(c);
            if (!c.holds() && div.status == HypothesisStatus::holds) div.status = HypothesisStatus::undecided;
            nonzero = "b_n^2 >= 1";
        }
        div.evidence += "; " + nonzero;
    }
    cert.hypotheses.push_back(div);

    Hypothesis lim;
    lim.name = "liminf |S_N| = 0";
    const auto shift = decay_shift(a, b, q, n0);
    if (a_ok && shift) {
        const Rational qr(q);
        const Rational c = qr.pow(*shift) * Rational(2 * q) / Rational(2 * q - 1);
        cert.majorant = GeometricMajorant{c, qr.inverse(), n0};
        lim.status = HypothesisStatus::holds;
        lim.crossover = n0;
        lim.evidence = "|S_N| <= " + c.str() + " * q^-N from |b_n| <= " + shifted_power(*shift, true) +
                       " * a_n and a_n >= 2";
    } else {
        lim.evidence = "no geometric majorant for S_N";
    }
    cert.hypotheses.push_back(lim);
    set_verdict(cert);
    return cert;
}

namespace {

// lo(n) <= value(n) <= hi(n) with affine bounds c0 + c1 n.
struct Linear {
    BigInt c0;
    BigInt c1;
    BigInt at(long n) const { return c0 + c1 * n; }
};

struct AffineBounds {
    Linear lo;
    Linear hi;
};

std::optional<AffineBounds> affine_bounds(const CoeffSeq& c) {
    if (const auto* p = std::get_if<QExpPoly>(&c)) {
        BigInt k = 0;
        for (const auto& t : p->terms()) {
            if (t.alpha != 0 || t.beta != 0 || t.parity_n) return std::nullopt;
            k += t.coef;
        }
        return AffineBounds{{k, 0}, {k, 0}};
    }
    const auto& e = std::get<ExplicitSeq>(c);
    if (e.affine) return AffineBounds{{e.affine->first, e.affine->second}, {e.affine->first, e.affine->second}};
    if (e.range) return AffineBounds{{e.range->first, 0}, {e.range->second, 0}};
    return std::nullopt;
}

Hypothesis named(std::string name) {
    Hypothesis h;
    h.name = std::move(name);
    return h;
}

Linear sub(const Linear& x, const Linear& y, long k) { return {x.c0 - y.c0 - k, x.c1 - y.c1}; }

bool always_at_least(const Linear& l, long bound, long n0) { return l.c1 >= 0 && l.at(n0) >= bound; }

std::optional<long> eventually_positive(const Linear& l, long n0) {
    if (l.c1 < 0 || (l.c1 == 0 && l.c0 <= 0)) return std::nullopt;
    long n = n0;
    while (l.at(n) <= 0) ++n;
    return n;
}

bool eventually_nonpositive(const Linear& l) { return l.c1 < 0 || (l.c1 == 0 && l.c0 <= 0); }

// Exact check of pred on [n0, n0 + depth); first failing index if any.
template <class Pred>
std::optional<long> prefix_violation(long n0, long depth, Pred pred) {
    for (long n = n0; n < n0 + depth; ++n)
        if (!pred(n)) return n;
    return std::nullopt;
}

}  // namespace

IrrationalityCertificate check_cantor1869(const CantorFamily& fam, long q, long depth) {
    if (!fam.divisibility_witness) throw Unsupported("cantor1869 needs a divisibility witness k -> n");
    if (depth < 1) throw DomainError("depth must be >= 1");
    const long n0 = fam.n_start;
    IrrationalityCertificate cert;
    cert.criterion = Criterion::cantor1869;
    auto a_at = [&](long n) { return coeff_eval(fam.a, q, n); };
    auto b_at = [&](long n) { return coeff_eval(fam.b, q, n); };

    Hypothesis h_a = named("a_n >= 2");
    Hypothesis h_b = named("0 <= b_n <= a_n - 1");
    Hypothesis h_pos = named("b_n > 0 infinitely often");
    Hypothesis h_gap = named("a_n - 1 > b_n infinitely often");

    const auto ab = affine_bounds(fam.a);
    const auto bb = affine_bounds(fam.b);
    const bool closed_form = fam.symbolic() && !(ab && bb);
    if (closed_form) {
        const auto& a = fam.a_poly();
        const auto& b = fam.b_poly();
        h_a = compare_hyp(h_a.name, a, constant(2), q, n0);
        auto c1 = compare_eventually(b, constant(0), q, n0);
        auto c2 = compare_eventually(a - one_poly(), b, q, n0);
        h_b = from_comparisons(h_b.name, {c1, c2}, "b_n >= 0 and a_n - 1 >= b_n by dominant term");
        h_pos = sign_hyp(h_pos.name, b, q, n0, false);
        h_gap = sign_hyp(h_gap.name, a - one_poly() - b, q, n0, false);
    } else if (ab && bb) {
        auto mark = [](Hypothesis& h, bool ok, std::string ev) {
            h.status = ok ? HypothesisStatus::holds : HypothesisStatus::undecided;
            h.crossover = 0;
            h.evidence = std::move(ev);
        };
        mark(h_a, always_at_least(ab->lo, 2, n0), "affine lower bound of a_n is >= 2");
        mark(h_b, always_at_least(bb->lo, 0, n0) && always_at_least(sub(ab->lo, bb->hi, 1), 0, n0),
             "affine bounds give 0 <= b_n and b_n <= a_n - 1");
        if (auto n = eventually_positive(bb->lo, n0)) {
            mark(h_pos, true, "lower bound of b_n is eventually positive");
            h_pos.crossover = *n;
        } else if (eventually_nonpositive(bb->hi)) {
            mark(h_pos, false, "upper bound of b_n is eventually <= 0");
            h_pos.status = HypothesisStatus::fails;
        } else if (const auto* e = std::get_if<ExplicitSeq>(&fam.b); e && e->positive_after) {
            const auto bad = prefix_violation(n0, depth, [&](long i) {
                const long n = e->positive_after(i);
                return n > i && b_at(n) > 0;
            });
            mark(h_pos, !bad, "witness i -> n > i with b_n > 0, checked for i < " + std::to_string(n0 + depth));
            if (bad) h_pos.status = HypothesisStatus::fails;
        } else {
            mark(h_pos, false, "no symbolic handle on the sign of b_n");
        }
        const Linear gap_lo = sub(ab->lo, bb->hi, 1);
        const Linear gap_hi = sub(ab->hi, bb->lo, 1);
        if (auto n = eventually_positive(gap_lo, n0)) {
            mark(h_gap, true, "lower bound of a_n - 1 - b_n is eventually positive");
            h_gap.crossover = *n;
        } else if (eventually_nonpositive(gap_hi)) {
            mark(h_gap, false, "a_n - 1 - b_n is eventually <= 0, so b_n = a_n - 1 from some index on");
            h_gap.status = HypothesisStatus::fails;
        } else {
            mark(h_gap, false, "no symbolic handle on a_n - 1 - b_n");
        }
    } else {
        throw Unsupported("cantor1869 needs closed-form, affine or range-bounded coefficients");
    }

    // Exact confirmation on a prefix of the side conditions.
    if (auto n = prefix_violation(n0, depth, [&](long k) { return a_at(k) >= 2; })) {
        h_a.status = HypothesisStatus::fails;
        h_a.evidence += "; violated at n = " + std::to_string(*n);
    }
    if (auto n = prefix_violation(n0, depth, [&](long k) { return b_at(k) >= 0 && b_at(k) <= a_at(k) - 1; })) {
        h_b.status = HypothesisStatus::fails;
        h_b.evidence += "; violated at n = " + std::to_string(*n);
    }
    h_a.prefix_depth = std::max(h_a.prefix_depth, depth);
    h_b.prefix_depth = std::max(h_b.prefix_depth, depth);

    Hypothesis h_div = named("every k divides some a_1...a_n");
    h_div.prefix_depth = depth;
    {
        std::optional<long> bad;
        for (long k = 1; k <= depth && !bad; ++k) {
            const long n = fam.divisibility_witness(k);
            if (n < n0) {
                bad = k;
                break;
            }
            // witness indices need not be monotone
            BigInt p = 1;
            for (long m = n0; m <= n; ++m) p *= a_at(m);
            if (p % k != 0) bad = k;
        }
        h_div.status = bad ? HypothesisStatus::fails : HypothesisStatus::holds;
        h_div.evidence = bad ? "witness fails at k = " + std::to_string(*bad)
                             : "witness k -> n checked for k <= " + std::to_string(depth);
    }

    cert.hypotheses = {h_a, h_b, h_div, h_pos, h_gap};
    const bool side = h_a.holds() && h_b.holds() && h_div.holds();
    if (!side) cert.verdict = Verdict::inconclusive;
    else if (h_pos.holds() && h_gap.holds()) cert.verdict = Verdict::irrational;
    else if (h_pos.status == HypothesisStatus::fails || h_gap.status == HypothesisStatus::fails)
        cert.verdict = Verdict::rational;
    else cert.verdict = Verdict::inconclusive;
    return cert;
}

IrrationalityCertificate check_auto(const CantorFamily& fam, long q) {
    std::vector<IrrationalityCertificate> tried;
    std::vector<std::string> log;
    for (auto fn : {&check_oppenheim_nonneg, &check_oppenheim_signed, &check_ht}) {
        IrrationalityCertificate c;
        try {
            c = fn(fam, q);
        } catch (const Unsupported& e) {
            log.push_back(std::string("skipped: ") + e.what());
            continue;
        }
        log.push_back("tried " + to_string(c.criterion) + ": " + to_string(c.verdict) + " (" +
                      std::to_string(c.holds_count()) + "/" + std::to_string(c.hypotheses.size()) +
                      " hypotheses hold)");
        if (c.verdict == Verdict::irrational) {
            c.notes.insert(c.notes.end(), log.begin(), log.end());
            return c;
        }
        tried.push_back(std::move(c));
    }
    if (tried.empty()) throw Unsupported("no criterion applies to this family");
    auto best = std::max_element(tried.begin(), tried.end(), [](const auto& x, const auto& y) {
        const double fx = double(x.holds_count()) / double(x.hypotheses.size());
        const double fy = double(y.holds_count()) / double(y.hypotheses.size());
        return fx < fy;
    });
    IrrationalityCertificate out = *best;
    out.notes.insert(out.notes.end(), log.begin(), log.end());
    return out;
}

IrrationalityCertificate check(Criterion c, const CantorFamily& fam, long q, long depth) {
    switch (c) {
        case Criterion::cantor1869: return check_cantor1869(fam, q, depth);
        case Criterion::oppenheim4: return check_oppenheim_nonneg(fam, q);
        case Criterion::oppenheim8: return check_oppenheim_signed(fam, q);
        case Criterion::ht: return check_ht(fam, q);
    }
    throw Unsupported("unknown criterion");
}

}  // namespace qcantor
