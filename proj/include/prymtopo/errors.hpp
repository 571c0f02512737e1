#pragma once

#include <stdexcept>
#include <string>

namespace prymtopo {

// Base of every error raised by the library. The CLI maps the concrete
// type to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotADiscriminant : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Square discriminants carry extra boundary components and are not handled.
class SquareDiscriminant : public Error {
public:
    using Error::Error;
};

// An enumeration produced a count that violates a known divisibility.
class InternalError : public Error {
public:
    using Error::Error;
};

// The orbifold Euler formula did not solve to a nonnegative integer genus.
class NonIntegralGenus : public Error {
public:
    using Error::Error;
};

class DegenerateParameter : public Error {
public:
    using Error::Error;
};

class GluingError : public Error {
public:
    using Error::Error;
};

class CorpusParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace prymtopo
