#include "qcantor/qexp.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace qcantor {

namespace {

long ceil_div(long a, long b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void require_q(long q) {
    if (q < 2) throw DomainError("q must be >= 2, got " + std::to_string(q));
}

BigInt qpow_exp(long q, long e) { return ipow(BigInt(q), static_cast<unsigned long>(e)); }

std::string exponent_text(long alpha, long beta) {
    std::string s;
    if (alpha != 0) {
        s = (alpha == 1 ? "" : std::to_string(alpha)) + "n";
        if (beta > 0) s += "+" + std::to_string(beta);
        if (beta < 0) s += std::to_string(beta);
    } else {
        s = std::to_string(beta);
    }
    return s;
}

}  // namespace

QExpPoly::QExpPoly(std::vector<QTerm> terms, long n_min) : terms_(std::move(terms)), n_min_(n_min) {
    normalize();
    validate();
}

QExpPoly::QExpPoly(std::vector<QTerm> terms) : terms_(std::move(terms)), n_min_(0) {
    normalize();
    for (const auto& t : terms_) {
        if (t.alpha > 0) n_min_ = std::max(n_min_, ceil_div(-t.beta, t.alpha));
    }
    validate();
}

QExpPoly QExpPoly::constant(const BigInt& c) { return QExpPoly({QTerm{c, false, false, 0, 0}}); }

QExpPoly QExpPoly::q_pow(long alpha, long beta, const BigInt& coef) {
    return QExpPoly({QTerm{coef, false, false, alpha, beta}});
}

QExpPoly QExpPoly::signed_q_pow(int sign, long sa, long sb, long alpha, long beta, const BigInt& coef) {
    const bool neg = sign < 0;
    return QExpPoly({QTerm{coef, neg && (sa % 2 != 0), neg && (sb % 2 != 0), alpha, beta}});
}

void QExpPoly::normalize() {
    std::map<std::tuple<long, long, bool>, BigInt> acc;
    for (const auto& t : terms_) {
        if (t.alpha < 0) throw DomainError("q-exponential term with negative alpha");
        acc[{t.alpha, t.beta, t.parity_n}] += t.parity_c ? BigInt(-t.coef) : t.coef;
    }
    terms_.clear();
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second == 0) continue;
        const auto& [a, b, g] = it->first;
        terms_.push_back(QTerm{it->second, g, false, a, b});
    }
}

void QExpPoly::validate() const {
    for (const auto& t : terms_) {
        if (t.alpha * n_min_ + t.beta < 0)
            throw DomainError("term q^(" + exponent_text(t.alpha, t.beta) + ") has a negative exponent at n = " +
                              std::to_string(n_min_));
    }
}

bool QExpPoly::has_parity() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const QTerm& t) { return t.parity_n; });
}

bool QExpPoly::is_unit_monomial() const { return terms_.size() == 1 && abs(terms_[0].coef) == 1; }

QExpPoly QExpPoly::valid_from(long n_min) const { return QExpPoly(terms_, std::max(n_min, n_min_)); }

BigInt QExpPoly::eval(long q, long n) const {
    require_q(q);
    if (n < n_min_)
        throw DomainError("index n = " + std::to_string(n) + " below validity bound " + std::to_string(n_min_));
    BigInt sum = 0;
    for (const auto& t : terms_) {
        BigInt v = t.coef * qpow_exp(q, t.alpha * n + t.beta);
        const long parity = (t.parity_n ? n : 0) + (t.parity_c ? 1 : 0);
        if (parity % 2 != 0) v = -v;
        sum += v;
    }
    return sum;
}

QExpPoly QExpPoly::split_parity(int residue) const {
    std::vector<QTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const bool flip = t.parity_c != (t.parity_n && residue % 2 != 0);
        out.push_back(QTerm{flip ? BigInt(-t.coef) : t.coef, false, false, 2 * t.alpha, t.alpha * residue + t.beta});
    }
    return QExpPoly(std::move(out), std::max(0L, ceil_div(n_min_ - residue, 2)));
}

std::string QExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        const bool neg = t.coef < 0;
        const BigInt mag = abs(t.coef);
        if (neg) s += "-";
        else if (i > 0) s += "+";
        const bool has_q = t.alpha != 0 || t.beta != 0;
        std::vector<std::string> factors;
        if (mag != 1 || (!has_q && !t.parity_n)) factors.push_back(mag.get_str());
        if (t.parity_n) factors.emplace_back("(-1)^n");
        if (has_q) {
            if (t.alpha == 0 && t.beta == 1) factors.emplace_back("q");
            else if (t.alpha == 0 || (t.alpha == 1 && t.beta == 0)) factors.push_back("q^" + exponent_text(t.alpha, t.beta));
            else factors.push_back("q^(" + exponent_text(t.alpha, t.beta) + ")");
        }
        for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? "*" : "") + factors[k];
    }
    return s;
}

QExpPoly QExpPoly::operator-() const {
    std::vector<QTerm> out = terms_;
    for (auto& t : out) t.coef = -t.coef;
    return QExpPoly(std::move(out), n_min_);
}

QExpPoly operator+(const QExpPoly& a, const QExpPoly& b) {
    std::vector<QTerm> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return QExpPoly(std::move(out), std::max(a.n_min_, b.n_min_));
}

QExpPoly operator-(const QExpPoly& a, const QExpPoly& b) { return a + (-b); }

QExpPoly operator*(const QExpPoly& a, const QExpPoly& b) {
    std::vector<QTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            out.push_back(QTerm{x.coef * y.coef, x.parity_n != y.parity_n, x.parity_c != y.parity_c,
                                x.alpha + y.alpha, x.beta + y.beta});
    return QExpPoly(std::move(out), std::max(a.n_min_, b.n_min_));
}

bool operator==(const QExpPoly& a, const QExpPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.coef != y.coef || x.parity_n != y.parity_n || x.alpha != y.alpha || x.beta != y.beta) return false;
    }
    return true;
}

QExpPoly qexp_combine(const QExpPoly& p, const QExpPoly& q, CombineOp op) {
    switch (op) {
        case CombineOp::add: return p + q;
        case CombineOp::sub: return p - q;
        case CombineOp::mul: return p * q;
    }
    return {};
}

BigInt qexp_eval(const QExpPoly& p, long q, long n) { return p.eval(q, n); }

std::optional<long> dominance_start(const QExpPoly& d, long q, long n0, bool strict) {
    require_q(q);
    if (d.has_parity()) throw DomainError("dominance_start needs a parity-free polynomial");
    const long start = std::max({n0, 0L, d.n_min()});
    if (d.is_zero()) return strict ? std::nullopt : std::optional<long>(start);
    const auto& terms = d.terms();
    const QTerm& top = terms[0];
    if (top.coef < 0) return std::nullopt;
    if (terms.size() == 1) return start;

    BigInt rest_sum = 0;
    long alpha_rest = terms[1].alpha;
    long beta_rest = terms[1].beta;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        rest_sum += abs(terms[i].coef);
        alpha_rest = std::max(alpha_rest, terms[i].alpha);
        beta_rest = std::max(beta_rest, terms[i].beta);
    }
    auto enough = [&](const Rational& lhs, const Rational& rhs) { return strict ? lhs > rhs : lhs >= rhs; };
    const Rational c0(top.coef);
    const Rational bound(rest_sum);
    const Rational qr(q);

    // Collective bound: rest <= rest_sum * q^(alpha_rest n + beta_rest).
    if (alpha_rest < top.alpha) {
        long k = 0;
        if (enough(c0, bound)) {
            while (enough(c0 * qr.pow(k - 1), bound)) --k;
        } else {
            while (!enough(c0 * qr.pow(k), bound)) ++k;
        }
        const long dalpha = top.alpha - alpha_rest;
        const long dbeta = top.beta - beta_rest;
        return std::max(start, ceil_div(k - dbeta, dalpha));
    }
    if (beta_rest < top.beta && enough(c0 * qr.pow(top.beta - beta_rest), bound)) return start;

    // Per-term ratios q^((alpha_i - alpha_0) N + beta_i - beta_0) are
    // nonincreasing in N; search for the first N where their weighted sum
    // drops below the leading coefficient.
    Rational limit(0);
    bool decaying = false;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].alpha == top.alpha) limit += Rational(abs(terms[i].coef)) * qr.pow(terms[i].beta - top.beta);
        else decaying = true;
    }
    if (!(limit < c0) && !(limit == c0 && !strict && !decaying)) return std::nullopt;
    auto rest_at = [&](long n) {
        Rational s(0);
        for (std::size_t i = 1; i < terms.size(); ++i)
            s += Rational(abs(terms[i].coef)) * qr.pow((terms[i].alpha - top.alpha) * n + terms[i].beta - top.beta);
        return s;
    };
    auto ok = [&](long n) { return enough(c0, rest_at(n)); };
    if (ok(start)) return start;
    long lo = start;
    long step = 1;
    constexpr long cap = 1L << 20;
    while (!ok(start + step)) {
        lo = start + step;
        if (step > cap) return std::nullopt;
        step *= 2;
    }
    long hi = start + step;
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

namespace {

// Crossover in n for d >= 0 (or > 0), splitting on the parity of n when needed.
std::optional<long> eventual_start(const QExpPoly& d, long q, long n0, bool strict) {
    if (!d.has_parity()) return dominance_start(d, q, n0, strict);
    long result = n0;
    for (int r = 0; r < 2; ++r) {
        const auto m = dominance_start(d.split_parity(r), q, ceil_div(n0 - r, 2), strict);
        if (!m) return std::nullopt;
        result = std::max(result, 2 * *m + r);
    }
    return result;
}

}  // namespace

ComparisonCertificate compare_eventually(const QExpPoly& p, const QExpPoly& q, long qv, long n0, Relation rel) {
    require_q(qv);
    if (n0 < p.n_min() || n0 < q.n_min())
        throw DomainError("compare_eventually: n0 = " + std::to_string(n0) + " below a validity bound");
    ComparisonCertificate cert;
    cert.relation = rel;
    cert.n0 = n0;
    cert.prefix_checked_to = n0 - 1;
    const bool strict = rel == Relation::gt;
    const QExpPoly d = p - q;
    cert.crossover = eventual_start(d, qv, n0, strict);
    if (!cert.crossover) {
        // The relation may fail for all large n; then the first failure is a counterexample.
        const auto against = eventual_start(-d, qv, n0, !strict);
        if (!against) return cert;
        for (long n = n0; n <= *against; ++n) {
            const BigInt v = d.eval(qv, n);
            if (strict ? v <= 0 : v < 0) {
                cert.counterexample = n;
                cert.prefix_checked_to = n;
                return cert;
            }
        }
        return cert;
    }
    const long last = std::max(*cert.crossover, n0);
    for (long n = n0; n <= last; ++n) {
        const BigInt v = d.eval(qv, n);
        if (strict ? v <= 0 : v < 0) {
            cert.counterexample = n;
            cert.prefix_checked_to = n;
            return cert;
        }
    }
    cert.prefix_checked_to = last;
    cert.verdict = ComparisonCertificate::Verdict::holds;
    return cert;
}

SignPatternResult sign_pattern(const QExpPoly& p, long q, long n0) {
    require_q(q);
    SignPatternResult out;
    if (p.is_zero()) return out;
    n0 = std::max(n0, p.n_min());

    // Eventual sign of a parity-free part together with its crossover.
    auto part_sign = [&](const QExpPoly& d, long m0) -> std::optional<std::pair<int, long>> {
        if (d.is_zero()) return std::nullopt;
        const int s = d.terms()[0].coef > 0 ? 1 : -1;
        const auto m = dominance_start(s > 0 ? d : -d, q, m0, true);
        if (!m) return std::nullopt;
        return std::make_pair(s, *m);
    };

    int sign_even = 0;
    int sign_odd = 0;
    long cross = n0;
    if (!p.has_parity()) {
        const auto r = part_sign(p, n0);
        if (!r) return out;
        sign_even = sign_odd = r->first;
        cross = std::max(cross, r->second);
    } else {
        for (int r = 0; r < 2; ++r) {
            const auto part = part_sign(p.split_parity(r), ceil_div(n0 - r, 2));
            if (!part) return out;
            (r == 0 ? sign_even : sign_odd) = part->first;
            cross = std::max(cross, 2 * part->second + r);
        }
    }
    SignPattern pat = SignPattern::alternating;
    if (sign_even == sign_odd) pat = sign_even > 0 ? SignPattern::eventually_positive : SignPattern::eventually_negative;

    for (long n = cross; n <= cross + 16; ++n) {
        const int s = sgn(p.eval(q, n));
        if (s != (n % 2 == 0 ? sign_even : sign_odd)) return out;
    }
    out.pattern = pat;
    out.crossover = cross;
    return out;
}

std::string to_string(SignPattern s) {
    switch (s) {
        case SignPattern::eventually_positive: return "eventually-positive";
        case SignPattern::eventually_negative: return "eventually-negative";
        case SignPattern::alternating: return "alternating";
        case SignPattern::undecided: return "undecided";
    }
    return "undecided";
}

std::string to_string(Relation r) { return r == Relation::ge ? ">=" : ">"; }

bool coprime_to_q_witness(const QExpPoly& p, long q, long n0) {
    require_q(q);
    n0 = std::max(n0, p.n_min());
    int units = 0;
    for (const auto& t : p.terms()) {
        if (t.alpha == 0 && t.beta == 0) {
            if (abs(t.coef) != 1) return false;
            ++units;
        } else if (t.alpha * n0 + t.beta < 1) {
            return false;
        }
    }
    if (units != 1) return false;
    const BigInt qb(q);
    for (long n = n0; n <= n0 + 32; ++n) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), p.eval(q, n).get_mpz_t(), qb.get_mpz_t());
        if (r != 1 && r != qb - 1) return false;
    }
    return true;
}

}  // namespace qcantor
