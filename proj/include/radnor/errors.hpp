#pragma once

#include <stdexcept>
#include <string>

namespace radnor {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, radicals, expressions, spec files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Certified comparison still ambiguous at the precision cap.
class UndecidableAtCap : public Error {
public:
    using Error::Error;
};

/// A prime candidate sits inside a bound's uncertainty at the precision cap.
class UndecidableBoundary : public UndecidableAtCap {
public:
    using UndecidableAtCap::UndecidableAtCap;
};

/// Numerical certification (root isolation, coefficient rounding) gave up.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class NoPrimeInRange : public Error {
public:
    using Error::Error;
};

class NotMonic : public Error {
public:
    using Error::Error;
};

class NotSquarefree : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class GenerationStuck : public Error {
public:
    using Error::Error;
};

} // namespace radnor
