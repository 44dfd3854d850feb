#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// Exact division was requested but the quotient does not exist over Z[q].
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// Two constructions of the same object disagree; indicates a bug, not bad input.
class InternalMismatch : public std::logic_error {
public:
    explicit InternalMismatch(const std::string& what) : std::logic_error(what) {}
};

/// Arguments outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation of a Laurent polynomial with negative offset at x = 0.
class ZeroAtNegativeOffset : public std::domain_error {
public:
    explicit ZeroAtNegativeOffset(const std::string& what) : std::domain_error(what) {}
};

/// A sweep or CLI request named a check that does not exist.
class UnknownCheckId : public std::invalid_argument {
public:
    explicit UnknownCheckId(const std::string& id)
        : std::invalid_argument("unknown check id: " + id) {}
};

/// Malformed user input (grid syntax, missing parameter, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qcat
