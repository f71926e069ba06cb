#pragma once

#include <stdexcept>
#include <string>

namespace madgad {

/// Precondition or parameter violation (bad sizes, out-of-range indices,
/// unsupported orders).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A decomposition, packing or design failed structural validation.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An oracle refused an input beyond its declared budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace madgad
