#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qcantor/cantor.hpp"

using namespace qcantor;

namespace {

Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
QExpPoly qp(long alpha, long beta, long c = 1) { return QExpPoly::q_pow(alpha, beta, c); }
QExpPoly alt(long sa, long sb, long alpha, long beta, long c = 1) {
    return QExpPoly::signed_q_pow(-1, sa, sb, alpha, beta, c);
}
QExpPoly k(long c) { return QExpPoly::constant(c); }
QExpPoly sq(const QExpPoly& p) { return p * p; }

CantorFamily geometric() { return make_family(k(2), k(1), 1); }
CantorFamily f_unshifted() { return make_family(sq(qp(1, 0) + k(1)), qp(1, 0), 1); }
CantorFamily f_plus() { return make_family(sq(qp(1, 1) + k(1)), qp(1, 0), 1); }
CantorFamily f_minus() { return make_family(sq(qp(1, 1) + alt(1, 1, 0, 0)), alt(1, 0, 1, 0), 1); }
CantorFamily omega_plus() { return make_family(sq(qp(2, 1) - k(1)), qp(2, 0), 1); }
CantorFamily r2_plus() { return make_family(qp(2, 0) - qp(1, 0), k(1), 1); }
CantorFamily phi_plus() { return make_family(qp(2, 0) + k(1), qp(1, 0), 1); }
CantorFamily phi_minus() { return make_family(qp(2, 0) + k(1), alt(1, 0, 1, 0), 1); }
CantorFamily F0_plus() { return make_family(qp(4, -2) - qp(2, -1), k(1), 1); }
// f0 at -1/q: a_n = q^(2n-1) + (-1)^n q^(n-1), b_n = (-1)^n; a_1 = 1 at q = 2
CantorFamily f0_minus(long n_start) {
    return make_family(qp(2, -1) + alt(1, 0, 1, -1), alt(1, 0, 0, 0), n_start);
}

ExplicitSeq range_seq(std::function<BigInt(long)> gen, long lo, long hi, std::string text) {
    ExplicitSeq s;
    s.gen = std::move(gen);
    s.range = {BigInt(lo), BigInt(hi)};
    s.description = std::move(text);
    return s;
}

CantorFamily explicit_family(ExplicitSeq a, ExplicitSeq b) {
    CantorFamily fam;
    fam.a_display = a.description;
    fam.b_display = b.description;
    fam.a = std::move(a);
    fam.b = std::move(b);
    return fam;
}

// a_n = n + 1: a_1 ... a_{k-1} = k!
CantorFamily factorial_family(ExplicitSeq b) {
    CantorFamily fam = explicit_family(ExplicitSeq::affine_seq(1, 1), std::move(b));
    fam.divisibility_witness = [](long k) { return std::max(1L, k - 1); };
    fam.declared_ratio_bound = R(1, 2);
    return fam;
}

long isqrt(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

ExplicitSeq square_indicator() {
    ExplicitSeq s = range_seq([](long n) { return BigInt(isqrt(n) * isqrt(n) == n ? 1 : 0); }, 0, 1,
                              "1 if n is a square else 0");
    s.positive_after = [](long i) { return (isqrt(i) + 1) * (isqrt(i) + 1); };
    return s;
}

const Hypothesis& hyp(const IrrationalityCertificate& c, const std::string& name) {
    for (const auto& h : c.hypotheses)
        if (h.name == name) return h;
    FAIL("missing hypothesis " << name);
    throw;
}

}  // namespace

TEST_CASE("partial sums") {
    CHECK(partial_sum(geometric(), 2, 3) == R(7, 8));
    CHECK(partial_sum(f_plus(), 2, 1) == R(2, 25));
    CHECK(partial_sum(factorial_family(ExplicitSeq::affine_seq(1, 0)), 2, 3) == R(17, 24));
    CHECK_THROWS_AS(partial_sum(geometric(), 2, 0), DomainError);
    CHECK_THROWS_AS(partial_sum(make_family(qp(1, 0) - k(4), k(1), 1), 2, 3), DomainError);
}

TEST_CASE("partial sums match direct division") {
    for (const auto& fam : {f_plus(), f_minus(), omega_plus(), F0_plus(), phi_minus()})
        for (long q : {2L, 3L})
            CHECK(partial_sum(fam, q, 12) ==
                  Rational::from_mpq(oracle::cantor_partial([&](long n) { return coeff_eval(fam.a, q, n); },
                                                            [&](long n) { return coeff_eval(fam.b, q, n); }, 1, 12)));
}

TEST_CASE("tail enclosures") {
    for (long N = 1; N <= 5; ++N) {
        const Enclosure e = tail_S(geometric(), 2, N, pow10_neg(10));
        CHECK(e.contains(R(1)));
        CHECK(e.width() <= pow10_neg(10));
    }
    CHECK(tail_S(make_family(qp(1, 0) + k(1), k(0), 1), 2, 1, R(1, 10)) == Enclosure(R(0)));

    const Enclosure t3 = tail_S(f_unshifted(), 2, 3, pow10_neg(30));
    CHECK(t3.hi() < ht_tail_bound_f(2, 3));
    const auto a = [](long n) -> mpz_class {
        const mpz_class f = (mpz_class(1) << n) + 1;
        return f * f;
    };
    const mpq_class s20 = oracle::cantor_partial(a, [](long n) -> mpz_class { return mpz_class(1) << n; }, 3, 22);
    CHECK(t3.contains(Rational::from_mpq(s20)));

    CHECK_THROWS_AS(tail_S(geometric(), 2, 0, R(1)), DomainError);
    CHECK_THROWS_AS(tail_S(geometric(), 2, 1, R(0)), DomainError);
    // a_n >= 2 fails at n = 1
    CHECK_THROWS_AS(tail_S(make_family(qp(1, 0), k(1), 0), 2, 0, R(1, 10)), InconclusiveTail);
    // |b_n| outgrows a_n
    CHECK_THROWS_AS(tail_S(make_family(k(2), qp(1, 0), 1), 2, 1, R(1, 10)), InconclusiveTail);
    CHECK_THROWS_AS(tail_S(explicit_family(ExplicitSeq::affine_seq(2, 0), ExplicitSeq::affine_seq(1, 0)), 2, 1, R(1, 10)),
                    InconclusiveTail);
}

TEST_CASE("tail recursion S_N = (b_N + S_{N+1}) / a_N") {
    for (const auto& fam : {f_plus(), f_minus(), f_unshifted(), omega_plus(), r2_plus(), phi_minus(), F0_plus()})
        for (long q : {2L, 3L})
            for (long N = 1; N <= 10; ++N) {
                const Enclosure lhs = tail_S(fam, q, N, pow10_neg(25));
                const Enclosure next = tail_S(fam, q, N + 1, pow10_neg(25));
                const Rational a(coeff_eval(fam.a, q, N));
                const Enclosure rhs = a.inverse() * (Rational(coeff_eval(fam.b, q, N)) + next);
                CHECK(lhs.intersects(rhs));
            }
}

TEST_CASE("truncation error shrinks for positive-term families") {
    for (const auto& fam : {f_plus(), omega_plus(), r2_plus()}) {
        const Enclosure S = tail_S(fam, 2, 1, pow10_neg(60));
        Rational prev = S.magnitude() + R(1);
        for (long N = 1; N <= 12; ++N) {
            const Rational err = (S - Enclosure(partial_sum(fam, 2, N))).lo();
            CHECK(err < prev);
            prev = err;
        }
    }
}

TEST_CASE("HT tail bound") {
    const Rational b3 = ht_tail_bound_f(2, 3);
    CHECK(R(19, 100) < b3);
    CHECK(b3 < R(20, 100));
    for (long N = 1; N <= 20; ++N) CHECK(ht_tail_bound_f(2, N + 1) / ht_tail_bound_f(2, N) == R(1, 2));
    CHECK(ht_tail_bound_f(3, 1) < R(1, 2));
    CHECK_THROWS_AS(ht_tail_bound_f(1, 3), DomainError);
    CHECK_THROWS_AS(ht_tail_bound_f(2, 0), DomainError);
}

TEST_CASE("decay shift") {
    CHECK(decay_shift(f_plus().a_poly(), f_plus().b_poly(), 2, 1) == 0);
    CHECK(decay_shift(k(2), k(1), 2, 1) == std::nullopt);
    CHECK(decay_shift(qp(1, 0), k(0), 2, 1) == 0);
    const auto K = decay_shift(qp(2, 0) - qp(1, 0), qp(1, 0), 2, 1);
    REQUIRE(K);
    for (long n = 1; n <= 60; ++n)
        CHECK(ipow(BigInt(2), *K) * qexp_eval(qp(2, 0) - qp(1, 0), 2, n) >= ipow(BigInt(2), n) * ipow(BigInt(2), n));
}

TEST_CASE("nonnegative-digit criterion") {
    CHECK(check_oppenheim_nonneg(omega_plus(), 2).verdict == Verdict::irrational);
    CHECK(check_oppenheim_nonneg(r2_plus(), 2).verdict == Verdict::irrational);
    const auto g = check_oppenheim_nonneg(geometric(), 2);
    CHECK(g.verdict == Verdict::inconclusive);
    CHECK_FALSE(hyp(g, "a_n -> infinity").holds());
    CHECK(check_oppenheim_nonneg(f_minus(), 2).verdict == Verdict::inconclusive);
    CHECK_THROWS_AS(check_oppenheim_nonneg(factorial_family(ExplicitSeq::affine_seq(1, 0)), 2), Unsupported);
}

TEST_CASE("signed-digit criterion") {
    CHECK(check_oppenheim_signed(f_minus(), 2).verdict == Verdict::irrational);
    CHECK(check_oppenheim_signed(f0_minus(2), 2).verdict == Verdict::irrational);
    const auto raw = check_oppenheim_signed(f0_minus(1), 2);
    CHECK(raw.verdict == Verdict::inconclusive);
    CHECK(hyp(raw, "a_n >= 2").status == HypothesisStatus::fails);
    const auto pos = check_oppenheim_signed(f_plus(), 2);
    CHECK(pos.verdict == Verdict::inconclusive);
    CHECK(hyp(pos, "b_n takes both signs beyond every index").status == HypothesisStatus::fails);
}

TEST_CASE("HT criterion") {
    const auto c = check_ht(f_unshifted(), 2);
    CHECK(c.verdict == Verdict::irrational);
    REQUIRE(c.majorant);
    CHECK(c.majorant->ratio == R(1, 2));
    for (long N = 1; N <= 20; ++N)
        CHECK(tail_S(f_unshifted(), 2, N, pow10_neg(30)).magnitude() <= c.majorant->constant * c.majorant->ratio.pow(N));

    const auto d = check_ht(make_family(k(2), k(2), 1), 2);
    CHECK(d.verdict == Verdict::inconclusive);
    CHECK(hyp(d, "a_n does not divide b_n").status == HypothesisStatus::fails);

    CHECK(check_ht(F0_plus(), 2).verdict == Verdict::irrational);
    for (long N = 1; N < 10; ++N)
        CHECK(tail_S(F0_plus(), 2, N + 1, pow10_neg(30)).hi() < tail_S(F0_plus(), 2, N, pow10_neg(30)).lo());
    CHECK(check_ht(geometric(), 2).verdict == Verdict::inconclusive);
}

TEST_CASE("classical criterion: factorial family") {
    const CantorFamily fam = factorial_family(ExplicitSeq::affine_seq(1, 0));
    const auto c = check_cantor1869(fam, 2, 60);
    CHECK(c.verdict == Verdict::irrational);
    const Enclosure s = tail_S(fam, 2, 1, pow10_neg(30));
    const auto e = oracle::e_minus_two();
    CHECK(s.intersects(Enclosure(Rational::from_mpq(e.lo), Rational::from_mpq(e.hi))));
    CHECK((s.midpoint() - Rational::from_mpq(e.lo)).abs() < pow10_neg(20));
}

TEST_CASE("classical criterion: telescoping family is rational") {
    const CantorFamily fam = factorial_family(ExplicitSeq::affine_seq(0, 1));
    const auto c = check_cantor1869(fam, 2, 60);
    CHECK(c.verdict == Verdict::rational);
    CHECK(hyp(c, "a_n - 1 > b_n infinitely often").status == HypothesisStatus::fails);
    // sum_{n<=N} n/(n+1)! = 1 - 1/(N+1)!
    BigInt fact = 1;
    for (long N = 1; N <= 20; ++N) {
        fact *= N + 1;
        CHECK(partial_sum(fam, 2, N) == R(1) - Rational(BigInt(1), fact));
    }
    CHECK(tail_S(fam, 2, 1, pow10_neg(30)).contains(R(1)));
}

TEST_CASE("classical criterion: square indicator digits") {
    // With a_n = 2 no product 2^n is divisible by 3, so the side condition fails.
    const CantorFamily binary = [] {
        CantorFamily f = explicit_family(ExplicitSeq::affine_seq(2, 0), square_indicator());
        f.divisibility_witness = [](long k) { return k; };
        return f;
    }();
    const auto cb = check_cantor1869(binary, 2, 60);
    CHECK(cb.verdict == Verdict::inconclusive);
    CHECK(hyp(cb, "every k divides some a_1...a_n").status == HypothesisStatus::fails);
    CHECK(hyp(cb, "b_n > 0 infinitely often").holds());
    CHECK(hyp(cb, "a_n - 1 > b_n infinitely often").status != HypothesisStatus::fails);

    const CantorFamily fam = factorial_family(square_indicator());
    const auto c = check_cantor1869(fam, 2, 60);
    CHECK(c.verdict == Verdict::irrational);
    const mpq_class s60 = oracle::cantor_partial([](long n) { return mpz_class(n + 1); },
                                                 [](long n) { return mpz_class(isqrt(n) * isqrt(n) == n ? 1 : 0); },
                                                 1, 60);
    const Enclosure s = tail_S(fam, 2, 1, pow10_neg(40));
    CHECK((s - Enclosure(Rational::from_mpq(s60))).magnitude() < pow10_neg(40));
}

TEST_CASE("classical criterion: errors and closed forms") {
    CHECK_THROWS_AS(check_cantor1869(geometric(), 2, 10), Unsupported);
    CantorFamily g = geometric();
    g.divisibility_witness = [](long k) { return k; };
    CHECK(check_cantor1869(g, 2, 10).verdict == Verdict::inconclusive);
    CHECK_THROWS_AS(check_cantor1869(g, 2, 0), DomainError);

    CantorFamily opaque = explicit_family(ExplicitSeq::affine_seq(2, 1), ExplicitSeq{});
    std::get<ExplicitSeq>(opaque.b).gen = [](long) { return BigInt(1); };
    opaque.divisibility_witness = [](long k) { return k; };
    CHECK_THROWS_AS(check_cantor1869(opaque, 2, 10), Unsupported);
}

TEST_CASE("automatic dispatch") {
    const auto p = check_auto(phi_plus(), 2);
    CHECK(p.verdict == Verdict::irrational);
    CHECK(p.criterion == Criterion::oppenheim4);
    const auto m = check_auto(phi_minus(), 2);
    CHECK(m.verdict == Verdict::irrational);
    CHECK(m.criterion == Criterion::oppenheim8);
    const auto g = check_auto(geometric(), 2);
    CHECK(g.verdict == Verdict::inconclusive);
    CHECK(g.notes.size() == 3);
    CHECK(check_auto(f_unshifted(), 2).verdict == Verdict::irrational);
}

TEST_CASE("criterion names") {
    for (auto c : {Criterion::cantor1869, Criterion::oppenheim4, Criterion::oppenheim8, Criterion::ht})
        CHECK(parse_criterion(to_string(c)) == c);
    CHECK_FALSE(parse_criterion("auto"));
    CHECK(check(Criterion::ht, f_unshifted(), 2).criterion == Criterion::ht);
}
