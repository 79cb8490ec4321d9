#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcantor/arith.hpp"

namespace qcantor {

/// One summand c * (-1)^(parity_n*n + parity_c) * q^(alpha*n + beta).
struct QTerm {
    BigInt coef;
    bool parity_n = false;
    bool parity_c = false;
    long alpha = 0;
    long beta = 0;
};

/// A "q-exponential polynomial": a finite sum of QTerms, valid (integer
/// valued for integer q) for every n >= n_min.
///
/// The normalized form keeps parity_c folded into the coefficient sign,
/// merges like terms, drops zeros and sorts by (alpha, beta, parity_n)
/// descending, so terms()[0] is the dominant term for large n.
class QExpPoly {
public:
    QExpPoly() = default;
    /// Throws DomainError if some term has a negative exponent at n >= n_min.
    QExpPoly(std::vector<QTerm> terms, long n_min);
    /// As above with n_min the least n >= 0 keeping every exponent nonnegative.
    explicit QExpPoly(std::vector<QTerm> terms);

    static QExpPoly constant(const BigInt& c);
    /// coef * q^(alpha*n + beta)
    static QExpPoly q_pow(long alpha, long beta, const BigInt& coef = 1);
    /// coef * sign^(sa*n + sb) * q^(alpha*n + beta), sign in {+1, -1}.
    static QExpPoly signed_q_pow(int sign, long sa, long sb, long alpha, long beta, const BigInt& coef = 1);

    const std::vector<QTerm>& terms() const { return terms_; }
    long n_min() const { return n_min_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_parity() const;
    /// Single term with |coef| = 1, i.e. +-q^(alpha n + beta) up to a sign pattern.
    bool is_unit_monomial() const;

    /// Same polynomial declared valid only from `n_min` on (n_min may only grow).
    QExpPoly valid_from(long n_min) const;

    BigInt eval(long q, long n) const;

    /// The polynomial in m obtained from n = 2m + residue; free of (-1)^n.
    QExpPoly split_parity(int residue) const;

    /// Canonical text, e.g. "q^(4n+2)-2*q^(2n+1)+1".
    std::string str() const;

    QExpPoly operator-() const;
    friend QExpPoly operator+(const QExpPoly& a, const QExpPoly& b);
    friend QExpPoly operator-(const QExpPoly& a, const QExpPoly& b);
    friend QExpPoly operator*(const QExpPoly& a, const QExpPoly& b);
    friend bool operator==(const QExpPoly& a, const QExpPoly& b);

private:
    void normalize();
    void validate() const;

    std::vector<QTerm> terms_;
    long n_min_ = 0;
};

enum class CombineOp { add, sub, mul };

QExpPoly qexp_combine(const QExpPoly& p, const QExpPoly& q, CombineOp op);

/// Exact P(n; q). Throws DomainError for q < 2 or n < n_min.
BigInt qexp_eval(const QExpPoly& p, long q, long n);

enum class Relation { ge, gt };

struct ComparisonCertificate {
    enum class Verdict { holds, undecided };

    Relation relation = Relation::ge;
    long n0 = 0;
    /// Beyond this index the dominant-term bound proves the relation; absent
    /// when no dominant term could be established.
    std::optional<long> crossover;
    /// Exact evaluation covered every n in [n0, prefix_checked_to].
    long prefix_checked_to = 0;
    Verdict verdict = Verdict::undecided;
    /// First n in the exhaustively checked range where the relation fails.
    std::optional<long> counterexample;

    bool holds() const { return verdict == Verdict::holds; }
};

/// Tries to prove P(n; q) >= Q(n; q) (or >) for every n >= n0.
ComparisonCertificate compare_eventually(const QExpPoly& p, const QExpPoly& q, long qv, long n0,
                                         Relation rel = Relation::ge);

enum class SignPattern { eventually_positive, eventually_negative, alternating, undecided };

struct SignPatternResult {
    SignPattern pattern = SignPattern::undecided;
    /// From this index on the pattern is proven.
    long crossover = 0;
};

SignPatternResult sign_pattern(const QExpPoly& p, long q, long n0);

std::string to_string(SignPattern s);
std::string to_string(Relation r);

/// True when P has a single constant term equal to +-1 and every other term
/// carries a positive power of q on n >= n0, so P(n) = +-1 (mod q).
bool coprime_to_q_witness(const QExpPoly& p, long q, long n0);

/// Smallest N >= max(n0, 0) from which the leading term of the parity-free
/// polynomial d outweighs all others (so d(n) >= 0, or > 0 when strict).
std::optional<long> dominance_start(const QExpPoly& d, long q, long n0, bool strict);

}  // namespace qcantor
