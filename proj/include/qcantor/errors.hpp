#pragma once

#include <stdexcept>

namespace qcantor {

/// An argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested criterion or route does not apply to this input.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No certifiable bound for the remainder of a Cantor series.
class InconclusiveTail : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qcantor
