#pragma once

#include <stdexcept>
#include <string>

namespace diffsum {

// Division of a rational by zero.
class DivideByZeroError : public std::domain_error {
public:
    explicit DivideByZeroError(const std::string& what)
        : std::domain_error(what) {}
};

// A term was evaluated at a pole of its defining expression.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what)
        : std::domain_error(what) {}
};

// The requested sum (or tail integral) does not converge.
class DivergenceError : public std::domain_error {
public:
    explicit DivergenceError(const std::string& what)
        : std::domain_error(what) {}
};

// Power-series division whose effective leading denominator coefficient
// is zero after prefix cancellation.
class SeriesDivisionError : public std::domain_error {
public:
    explicit SeriesDivisionError(const std::string& what)
        : std::domain_error(what) {}
};

}  // namespace diffsum
