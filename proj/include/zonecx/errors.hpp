#ifndef ZONECX_ERRORS_HPP
#define ZONECX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zonecx {

/// Malformed text input (numbers, documents).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input lines are not in general position (or are duplicates).
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query point lies on a line of the arrangement.
class OnBoundary : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant or a counting identity failed. Signals an engine bug.
class ConsistencyFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The C(L) <= 5 bound was observed to fail on some instance.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CheckedInt left the int64 range.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace zonecx

#endif  // ZONECX_ERRORS_HPP
