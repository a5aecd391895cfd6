#pragma once

#include <stdexcept>
#include <string>

namespace unimod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input polynomial does not have the degree an operation requires.
class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// Long division of the Almkvist numerator left a nonzero remainder.
class AlmkvistDivisionInexact : public Error {
public:
    using Error::Error;
};

/// The quadrature panel budget cannot satisfy the panel-width rule.
class GridTooCoarse : public Error {
public:
    using Error::Error;
};

/// A sine denominator is (numerically) zero at the requested point.
class SingularPoint : public Error {
public:
    using Error::Error;
};

/// A trigonometric identity was requested where |sin| is below its floor.
class NearSingular : public Error {
public:
    using Error::Error;
};

/// An inequality was evaluated outside its stated domain.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// A coefficient dump line is malformed.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A cached coefficient dump failed its checksum or could not be parsed.
class CacheCorrupt : public Error {
public:
    using Error::Error;
};

/// A command-line configuration is inconsistent.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

}  // namespace unimod
