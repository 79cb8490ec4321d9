#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcantor/arith.hpp"

namespace qcantor {

/// Raised when a denominator factor vanishes at the evaluation point.
class PoleError : public DomainError {
public:
    PoleError(std::string factor, const std::string& what)
        : DomainError(what), factor_(std::move(factor)) {}
    /// The vanishing factor, rendered in the series variable, e.g. "(1-q)".
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

enum class SeriesId { f, phi, psi, chi, omega, nu, rho, f0, f1, F0, F1, Phi, Psi, r1, r2 };

inline constexpr std::array<SeriesId, 15> all_series = {
    SeriesId::f,  SeriesId::phi, SeriesId::psi, SeriesId::chi, SeriesId::omega,
    SeriesId::nu, SeriesId::rho, SeriesId::f0,  SeriesId::f1,  SeriesId::F0,
    SeriesId::F1, SeriesId::Phi, SeriesId::Psi, SeriesId::r1,  SeriesId::r2};

std::string name(SeriesId id);
std::optional<SeriesId> parse_series(std::string_view text);

/// The two Rogers-Ramanujan products at 1/q (P1, P3) and at -1/q (P2, P4),
/// written with q >= 2.
enum class ProductId { P1, P2, P3, P4 };

inline constexpr std::array<ProductId, 4> all_products = {ProductId::P1, ProductId::P2, ProductId::P3,
                                                          ProductId::P4};

std::string name(ProductId id);
std::optional<ProductId> parse_product(std::string_view text);

/// A denominator factor 1 + sum c_j x^(e_j) of a series.
struct DenomFactor {
    std::vector<std::pair<long, long>> terms;  // (coefficient, exponent), exponent 0 first

    Rational eval(const Rational& x) const;
    /// Lower bound on |factor| for |x| <= y, valid when positive.
    Rational lower_bound(const Rational& y) const;
    /// Rendered in the series variable q, e.g. "(1-q^3)".
    std::string str() const;
};

/// Exact n-th summand of the defining series (the series value is
/// series_offset(id) + sum over n >= 0 of term(id, x, n)). Indices below the
/// first displayed index give 0.
Rational term(SeriesId id, const Rational& x, long n);

/// term(n+1)/term(n) computed from the one-step recursion, for n at or
/// beyond the first displayed index.
Rational term_ratio(SeriesId id, const Rational& x, long n);

/// Constant added to the sum (-1 for Phi and Psi, 0 otherwise).
long series_offset(SeriesId id);
/// Smallest index with a nonzero summand in general.
long series_first_index(SeriesId id);
/// The denominator factors that enter when passing from term n-1 to term n.
std::vector<DenomFactor> new_factors(SeriesId id, long n);

/// Exact offset + sum_{n=0}^{last} term(id, x, n).
Rational partial_sum(SeriesId id, const Rational& x, long last);

/// Geometric ratio bound: |term(n+1)/term(n)| <= ratio_bound for all n >= from_index.
struct TailStrategy {
    Rational ratio_bound;
    long from_index = 0;
};

/// Bound R(n) = |x|^(e(n+1)-e(n)) / L(n+1), nonincreasing in n, so it bounds
/// every later ratio too. nullopt while the factor lower bound is not positive.
std::optional<Rational> ratio_bound_at(SeriesId id, const Rational& x, long n);

/// First index from which the ratio bound is <= target (< 1).
TailStrategy tail_strategy(SeriesId id, const Rational& x, const Rational& target = Rational(3, 4));

/// Enclosure of width <= eps containing the series value at x, |x| < 1.
Enclosure eval(SeriesId id, const Rational& x, const Rational& eps);

/// Same, also reporting the truncation index used.
Enclosure eval(SeriesId id, const Rational& x, const Rational& eps, long& last_index);

/// Throws PoleError if some denominator factor of the series is zero at x.
void check_poles(SeriesId id, const Rational& x);

/// prod_{m=0}^{last} of the product's factor pairs.
Rational product_partial(ProductId pid, long q, long last);
/// sum_{m > last} |u_m| over the factors 1 + u_m left out of product_partial.
Rational product_tail_sum(ProductId pid, long q, long last);
/// Enclosure of width <= eps containing the infinite product.
Enclosure eval_product(ProductId pid, long q, const Rational& eps);

/// The product that the Rogers-Ramanujan identity pairs with r_which at the
/// given sign: r_which(sign/q) * P(q) = 1.
ProductId rr_pairing(int which, int sign);

/// Enclosure of r_which(pt) * P(q) - 1 of width <= eps.
Enclosure rr_identity_residual(int which, const RationalPoint& pt, const Rational& eps);

}  // namespace qcantor
