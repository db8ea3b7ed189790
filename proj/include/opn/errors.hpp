#pragma once

#include <stdexcept>
#include <string>

namespace opn {

/// Malformed argument: non-prime where a prime is required, bad encoding, etc.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configurable work budget ran out before the computation finished.
/// Never accompanied by a partial result.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCertificate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownRelation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The LP optimum does not exist (unbounded or infeasible).
class LpUnsolvable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace opn
