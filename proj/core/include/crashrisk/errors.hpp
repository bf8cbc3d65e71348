#pragma once

#include <stdexcept>
#include <string>

namespace crashrisk {

/// Bad input: malformed files, violated series invariants, unknown labels.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-convergence, degenerate systems.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crashrisk
