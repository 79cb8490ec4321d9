#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcantor/arith.hpp"
#include "qcantor/qexp.hpp"

namespace qcantor {

/// An integer sequence given by a generator rather than a closed form.
///
/// The optional facts are part of how the sequence is built (an affine
/// formula, or a value range that holds by construction); the checkers use
/// them as symbolic evidence and still confirm them on a prefix.
struct ExplicitSeq {
    std::function<BigInt(long)> gen;
    std::string description;
    /// value(n) = c0 + c1 * n exactly
    std::optional<std::pair<BigInt, BigInt>> affine;
    /// lo <= value(n) <= hi for every n
    std::optional<std::pair<BigInt, BigInt>> range;
    /// i -> some n > i with value(n) > 0
    std::function<long(long)> positive_after;

    static ExplicitSeq affine_seq(const BigInt& c0, const BigInt& c1);
};

using CoeffSeq = std::variant<QExpPoly, ExplicitSeq>;

BigInt coeff_eval(const CoeffSeq& c, long q, long n);
std::string coeff_text(const CoeffSeq& c);

/// S = sum_{n >= n_start} b_n / (a_{n_start} ... a_n).
struct CantorFamily {
    CoeffSeq a;
    CoeffSeq b;
    long n_start = 1;
    /// k -> n with k | a_{n_start} ... a_n (needed only for the 1869 criterion).
    std::function<long(long)> divisibility_witness;
    /// Caller-asserted bound |b_n| <= ratio * a_n with a_n >= 2, used for tails
    /// of generator-based families.
    std::optional<Rational> declared_ratio_bound;
    /// Human-readable forms before expansion, e.g. "(q^(2n+1)-1)^2".
    std::string a_display;
    std::string b_display;

    bool symbolic() const;
    const QExpPoly& a_poly() const;
    const QExpPoly& b_poly() const;
};

/// Family with closed-form coefficients; displays default to canonical text.
CantorFamily make_family(QExpPoly a, QExpPoly b, long n_start, std::string a_display = {},
                         std::string b_display = {});

/// Exact sum_{n=n_start}^{last} b_n / (a_{n_start} ... a_n).
Rational partial_sum(const CantorFamily& fam, long q, long last);

/// Enclosure of S_N = sum_{n >= N} b_n / (a_N ... a_n) of width <= eps.
/// Throws InconclusiveTail when no remainder bound can be certified.
Enclosure tail_S(const CantorFamily& fam, long q, long N, const Rational& eps);

/// Upper bound q^-N * sum_{m >= 0} q^(-m^2) on S_N for a_n = (1+q^n)^2,
/// b_n = q^n; the theta sum is taken exactly to m = 5 plus a geometric tail.
Rational ht_tail_bound_f(long q, long N);

/// Smallest K in [0, 64] with |b_n| * q^n <= q^K * a_n for all n >= n0.
std::optional<long> decay_shift(const QExpPoly& a, const QExpPoly& b, long q, long n0);

enum class Criterion { cantor1869, oppenheim4, oppenheim8, ht };
enum class HypothesisStatus { holds, fails, undecided };
enum class Verdict { irrational, rational, inconclusive };

std::string to_string(Criterion c);
std::optional<Criterion> parse_criterion(const std::string& text);
std::string to_string(HypothesisStatus s);
std::string to_string(Verdict v);

struct Hypothesis {
    std::string name;
    HypothesisStatus status = HypothesisStatus::undecided;
    /// Index beyond which the symbolic argument applies.
    std::optional<long> crossover;
    /// Indices checked by exact evaluation, counted from the family start.
    long prefix_depth = 0;
    std::string evidence;
    std::vector<ComparisonCertificate> comparisons;

    bool holds() const { return status == HypothesisStatus::holds; }
};

/// |S_N| <= constant * ratio^N for every N >= from.
struct GeometricMajorant {
    Rational constant;
    Rational ratio;
    long from = 0;
};

struct IrrationalityCertificate {
    Criterion criterion = Criterion::oppenheim4;
    std::vector<Hypothesis> hypotheses;
    Verdict verdict = Verdict::inconclusive;
    std::optional<GeometricMajorant> majorant;
    std::vector<std::string> notes;

    long holds_count() const;
};

/// Nonnegative digits: a_n >= 2, 0 <= b_n <= a_n - 1, b_n > 0 infinitely
/// often, a_n -> inf and b_n/a_n -> 0.
IrrationalityCertificate check_oppenheim_nonneg(const CantorFamily& fam, long q);
/// Signed digits: a_n >= 2, |b_n| <= a_n - 1, b_n takes both signs beyond
/// every index, a_n -> inf and b_n/a_n -> 0.
IrrationalityCertificate check_oppenheim_signed(const CantorFamily& fam, long q);
/// a_n > 1, a_n does not divide b_n, and S_N -> 0.
IrrationalityCertificate check_ht(const CantorFamily& fam, long q);
/// The classical iff criterion under the divisibility side condition.
IrrationalityCertificate check_cantor1869(const CantorFamily& fam, long q, long depth);
/// oppenheim4, then oppenheim8, then ht; first irrational verdict wins.
IrrationalityCertificate check_auto(const CantorFamily& fam, long q);

IrrationalityCertificate check(Criterion c, const CantorFamily& fam, long q, long depth = 60);

}  // namespace qcantor
