#pragma once

#include <stdexcept>
#include <string>

namespace symprod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text or JSON that cannot be parsed; `where` names the offending field or offset.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class MalformedElement : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// A computed value contradicts a proven statement (non-integral structure constant, torsion).
/// Always an implementation bug, never a legitimate outcome.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

class InvalidMode : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ResourceLimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace symprod
