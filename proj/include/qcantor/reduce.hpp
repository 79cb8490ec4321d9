#pragma once

#include <string>
#include <vector>

#include "qcantor/arith.hpp"
#include "qcantor/cantor.hpp"
#include "qcantor/catalog.hpp"

namespace qcantor {

/// series(pt) = prefix + factor * (Cantor sum of family).
struct Reduction {
    SeriesId series = SeriesId::f;
    RationalPoint pt{1, 2};
    Rational prefix;
    Rational factor;
    CantorFamily family;
    /// First index of the family before normalization.
    long raw_n_start = 1;
    /// One line per folded term.
    std::vector<std::string> trace;
};

/// The reduction straight from the algebra, before any folding.
Reduction reduce_raw(SeriesId id, const RationalPoint& pt);

/// Folds leading terms into prefix and factor until a_n >= 2 and
/// |b_n| <= a_n - 1 hold for every n >= n_start.
Reduction normalize_family(Reduction r);

/// normalize_family(reduce_raw(id, pt)).
Reduction reduce(SeriesId id, const RationalPoint& pt);

/// Enclosure of width <= eps of series(pt) - (prefix + factor * S).
Enclosure verify_reduction(const Reduction& r, const Rational& eps);
Enclosure verify_reduction(SeriesId id, const RationalPoint& pt, const Rational& eps);

struct CertifiedReduction {
    Reduction reduction;
    /// verify_reduction at the gate width.
    Enclosure residual;
    IrrationalityCertificate certificate;
};

/// Width at which certify checks the reduction identity.
Rational certify_gate_eps();

/// reduce, verify the identity (InternalInconsistency when the residual
/// excludes 0), then run the criterion on the family.
CertifiedReduction certify(SeriesId id, const RationalPoint& pt);
CertifiedReduction certify(SeriesId id, const RationalPoint& pt, Criterion criterion);

}  // namespace qcantor
