#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A dense transform or table would exceed the size guard.
class ScopeTooLarge : public Error {
public:
    using Error::Error;
};

/// A term references a variable that is not part of the requested scope.
class ScopeMismatch : public Error {
public:
    using Error::Error;
};

class MissingAssignment : public Error {
public:
    using Error::Error;
};

/// A factor is identically zero, so the partition function is zero.
class AllZeroFactor : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

/// Malformed UAI input. `offset()` is the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class CardinalityUnsupported : public Error {
public:
    using Error::Error;
};

/// The input ended early or a declared count disagrees with the data.
class CountMismatch : public Error {
public:
    using Error::Error;
};

/// Enumeration-based routines refuse models above their variable cap.
class TooManyVariables : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Both restricted partition functions of a marginal query are zero.
class DegenerateMarginal : public Error {
public:
    using Error::Error;
};

/// An approximate run produced an unusable estimate (see VEResult).
class InferenceFailure : public Error {
public:
    using Error::Error;
};

}  // namespace fve
