#pragma once

#include <stdexcept>
#include <string>

namespace hypercat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A raw type vector had a negative entry or was otherwise malformed.
struct InvalidTypeVector : Error {
    using Error::Error;
};

/// Two type vectors (or series) with different index bases were mixed.
struct BaseMismatch : Error {
    using Error::Error;
};

/// An enumeration request had no finite bound.
struct UnboundedEnumeration : Error {
    using Error::Error;
};

/// Multinomial parts summed past the top argument.
struct InvalidMultinomial : Error {
    using Error::Error;
};

/// A parameter is outside the supported range.
struct Unsupported : Error {
    using Error::Error;
};

/// Series division left a nonzero remainder at some face layer.
struct NotDivisible : Error {
    using Error::Error;
};

/// A coefficient was requested outside a series' truncation bounds.
/// Distinguished from a stored zero, which is a valid answer.
struct OutOfTruncation : Error {
    using Error::Error;
};

/// The linear coefficient of a polynomial is zero, so the series
/// substitution has no pivot. Shift to a nearby point first.
struct PivotZero : Error {
    using Error::Error;
};

} // namespace hypercat
