#ifndef GAUSSKIT_ERRORS_HPP
#define GAUSSKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gausskit {

/// Base class for all gausskit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input contains a character outside the token alphabet.
struct BadTokenError : Error {
    using Error::Error;
};

/// Some letter does not occur exactly twice.
struct NonGaussError : Error {
    using Error::Error;
};

/// The 62-letter canonical alphabet is exhausted.
struct CapacityError : Error {
    using Error::Error;
};

/// A letter required by the operation does not occur where expected.
struct MissingLetterError : Error {
    using Error::Error;
};

/// A span crosses a component separator.
struct SpanError : Error {
    using Error::Error;
};

/// A letter's two occurrences lie in different components.
struct SplitLetterError : Error {
    using Error::Error;
};

/// Operation requires a specific component count.
struct ArityError : Error {
    using Error::Error;
};

/// A move fails its legality re-check against the phrase.
struct IllegalMoveError : Error {
    using Error::Error;
};

/// Invalid search or policy configuration.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace gausskit

#endif
