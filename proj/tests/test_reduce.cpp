#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qcantor/reduce.hpp"

using namespace qcantor;

namespace {

Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
QExpPoly qp(long alpha, long beta, long c = 1) { return QExpPoly::q_pow(alpha, beta, c); }
QExpPoly k(long c) { return QExpPoly::constant(c); }

std::vector<RationalPoint> grid_points() {
    std::vector<RationalPoint> pts;
    for (int s : {1, -1})
        for (long q = 2; q <= 5; ++q) pts.emplace_back(s, q);
    return pts;
}

Rational exact_cantor(const CantorFamily& fam, long q, long last) {
    return Rational::from_mpq(oracle::cantor_partial([&](long n) { return coeff_eval(fam.a, q, n); },
                                                     [&](long n) { return coeff_eval(fam.b, q, n); }, fam.n_start,
                                                     last));
}

}  // namespace

TEST_CASE("reduction examples") {
    const auto f = reduce(SeriesId::f, RationalPoint(1, 2));
    CHECK(f.prefix == R(11, 9));
    CHECK(f.factor == R(2, 9));
    CHECK(f.family.n_start == 1);
    CHECK(f.family.a_poly() == (qp(1, 1) + k(1)) * (qp(1, 1) + k(1)));
    CHECK(f.family.b_poly() == qp(1, 0));
    CHECK(f.family.a_display == "(q^(n+1)+1)^2");

    const auto F0 = reduce(SeriesId::F0, RationalPoint(-1, 2));
    CHECK(F0.prefix == R(1));
    CHECK(F0.factor == R(1));
    CHECK(F0.family.a_poly() == qp(2, -1) * (qp(2, -1) + k(1)));
    CHECK(F0.family.b_poly() == k(1));

    const auto psi = reduce(SeriesId::psi, RationalPoint(1, 3));
    CHECK(psi.prefix == R(1, 2));
    CHECK(psi.factor == R(1, 2));
    CHECK(psi.family.n_start == 2);
    CHECK(psi.family.a_poly() == qp(2, -1) - k(1));
    CHECK(psi.family.b_poly() == k(1));
}

TEST_CASE("normalization examples") {
    const auto raw = reduce_raw(SeriesId::r1, RationalPoint(1, 2));
    CHECK(coeff_eval(raw.family.a, 2, 1) == 2);
    CHECK(coeff_eval(raw.family.b, 2, 1) == 2);
    const auto r1 = normalize_family(raw);
    CHECK(r1.family.n_start == 2);
    CHECK(r1.raw_n_start == 1);
    CHECK(coeff_eval(r1.family.a, 2, 2) == 12);
    CHECK(coeff_eval(r1.family.b, 2, 2) == 4);
    CHECK(r1.trace.size() == 1);

    const auto nu_raw = reduce_raw(SeriesId::nu, RationalPoint(-1, 2));
    CHECK(coeff_eval(nu_raw.family.a, 2, 1) == 1);
    const auto nu = normalize_family(nu_raw);
    CHECK(nu.family.n_start == 2);
    CHECK(nu.prefix == R(2));
    CHECK(nu.factor == R(1));

    const auto done = reduce(SeriesId::omega, RationalPoint(-1, 3));
    const auto again = normalize_family(done);
    CHECK(again.prefix == done.prefix);
    CHECK(again.factor == done.factor);
    CHECK(again.family.n_start == done.family.n_start);
    CHECK(again.trace.size() == done.trace.size());
}

TEST_CASE("normalized families satisfy the digit bounds") {
    for (auto id : all_series)
        for (const auto& pt : grid_points()) {
            const auto r = reduce(id, pt);
            CHECK(r.factor != R(0));
            const auto& a = r.family.a_poly();
            const auto& b = r.family.b_poly();
            const long n0 = r.family.n_start;
            CHECK(compare_eventually(a, k(2), pt.q(), n0).holds());
            CHECK(compare_eventually(a - k(1), b, pt.q(), n0).holds());
            CHECK(compare_eventually(a - k(1), -b, pt.q(), n0).holds());
            for (long n = n0; n < n0 + 40; ++n) {
                const BigInt av = coeff_eval(r.family.a, pt.q(), n);
                const BigInt bv = coeff_eval(r.family.b, pt.q(), n);
                CHECK(av >= 2);
                CHECK(abs(bv) <= av - 1);
            }
        }
}

TEST_CASE("normalization preserves value exactly") {
    for (auto id : all_series)
        for (const auto& pt : grid_points()) {
            const auto raw = reduce_raw(id, pt);
            const auto norm = normalize_family(raw);
            const long q = pt.q();
            CHECK(raw.prefix + raw.factor * exact_cantor(raw.family, q, 40) ==
                  norm.prefix + norm.factor * exact_cantor(norm.family, q, 40));
        }
}

TEST_CASE("reduction identity against independent truncations") {
    const Rational tol = pow10_neg(30);
    for (auto id : all_series)
        for (const auto& pt : grid_points()) {
            const auto r = reduce(id, pt);
            const Rational lhs = Rational::from_mpq(oracle::series_partial(name(id), pt.value().mpq(), 40));
            const Rational rhs = r.prefix + r.factor * exact_cantor(r.family, pt.q(), 80);
            CHECK_MESSAGE((lhs - rhs).abs() < tol, name(id) << " at " << pt.str());
        }
}

TEST_CASE("verify_reduction contains zero") {
    const Rational eps = pow10_neg(30);
    CHECK(verify_reduction(SeriesId::f, RationalPoint(1, 2), eps).contains(R(0)));
    CHECK(verify_reduction(SeriesId::omega, RationalPoint(-1, 3), eps).contains(R(0)));
    CHECK(verify_reduction(SeriesId::nu, RationalPoint(1, 2), eps).contains(R(0)));
    for (auto id : all_series)
        for (const auto& pt : grid_points()) {
            const Enclosure e = verify_reduction(id, pt, eps);
            CHECK(e.contains(R(0)));
            CHECK(e.width() <= eps);
        }
    CHECK_THROWS_AS(verify_reduction(SeriesId::f, RationalPoint(1, 2), R(0)), DomainError);
}

TEST_CASE("a broken reduction is caught") {
    auto r = reduce(SeriesId::phi, RationalPoint(1, 2));
    r.prefix += pow10_neg(20);
    CHECK_FALSE(verify_reduction(r, pow10_neg(30)).contains(R(0)));
    r.factor = R(0);
    CHECK_THROWS_AS(verify_reduction(r, pow10_neg(30)), InternalInconsistency);
}

TEST_CASE("f-family coefficients are at least 9 at q = 2") {
    CHECK(compare_eventually((qp(1, 1) - k(1)) * (qp(1, 1) - k(1)), k(9), 2, 1).holds());
    for (int s : {1, -1}) {
        const auto r = reduce(SeriesId::f, RationalPoint(s, 2));
        CHECK(compare_eventually(r.family.a_poly(), k(9), 2, r.family.n_start).holds());
    }
}

TEST_CASE("certify examples") {
    const auto f = certify(SeriesId::f, RationalPoint(-1, 2));
    CHECK(f.certificate.verdict == Verdict::irrational);
    CHECK(f.certificate.criterion == Criterion::oppenheim8);
    CHECK(f.residual.contains(R(0)));

    const auto F1 = certify(SeriesId::F1, RationalPoint(1, 2));
    CHECK(F1.certificate.verdict == Verdict::irrational);
    CHECK(F1.certificate.criterion == Criterion::oppenheim4);

    CHECK(certify(SeriesId::Psi, RationalPoint(-1, 3)).certificate.verdict == Verdict::irrational);
    CHECK(certify(SeriesId::f0, RationalPoint(-1, 2)).certificate.criterion == Criterion::oppenheim8);

    const auto psi = certify(SeriesId::psi, RationalPoint(1, 2));
    CHECK(std::any_of(psi.certificate.notes.begin(), psi.certificate.notes.end(),
                      [](const std::string& n) { return n.find("constant sign") != std::string::npos; }));

    CHECK(certify(SeriesId::f, RationalPoint(1, 2), Criterion::oppenheim8).certificate.verdict ==
          Verdict::inconclusive);
    CHECK(certify(SeriesId::f, RationalPoint(1, 2), Criterion::ht).certificate.criterion == Criterion::ht);
    CHECK_THROWS_AS(certify(SeriesId::f, RationalPoint(1, 2), Criterion::cantor1869), Unsupported);
}

TEST_CASE("irrational verdicts survive 50 indices past every crossover") {
    for (auto id : all_series)
        for (const auto& pt : grid_points()) {
            const auto c = certify(id, pt);
            REQUIRE(c.certificate.verdict == Verdict::irrational);
            const auto& fam = c.reduction.family;
            const long q = pt.q();
            long from = fam.n_start;
            for (const auto& h : c.certificate.hypotheses) from = std::max(from, h.crossover.value_or(from));
            auto a = [&](long n) { return coeff_eval(fam.a, q, n); };
            auto b = [&](long n) { return coeff_eval(fam.b, q, n); };
            for (const auto& h : c.certificate.hypotheses) {
                bool pos = false, neg = false;
                for (long n = from; n < from + 50; ++n) {
                    if (h.name == "a_n >= 2") CHECK(a(n) >= 2);
                    else if (h.name == "b_n >= 0") CHECK(b(n) >= 0);
                    else if (h.name == "b_n <= a_n - 1") CHECK(b(n) <= a(n) - 1);
                    else if (h.name == "|b_n| <= a_n - 1") CHECK(abs(b(n)) <= a(n) - 1);
                    else if (h.name == "a_n -> infinity") CHECK(a(n + 1) > a(n));
                    else if (h.name == "b_n/a_n -> 0") CHECK(abs(b(n + 1)) * a(n) <= abs(b(n)) * a(n + 1));
                    pos = pos || b(n) > 0;
                    neg = neg || b(n) < 0;
                }
                if (h.name == "b_n > 0 infinitely often") CHECK(pos);
                if (h.name == "b_n takes both signs beyond every index") CHECK((pos && neg));
            }
        }
}
