#pragma once

#include <stdexcept>
#include <string>

namespace wedgeworks {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// Invalid parameters or arguments outside a function's domain.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "pole"; }
};

/// Asymptotic evaluation requested outside its validity sector.
class SectorError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "sector"; }
};

/// Region and mode supports do not intersect, or the overlap is not a number.
class RegionError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "region"; }
};

/// Result not representable in double precision.
class RangeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "range"; }
};

class ConvergenceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "convergence"; }
};

}  // namespace wedgeworks
