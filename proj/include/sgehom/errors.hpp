#pragma once

#include <stdexcept>
#include <string>

namespace sgehom {

// Nonphysical or out-of-domain inputs (negative radicands, vanishing
// denominators, Poisson ratio outside (-1, 1/2), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Tensor or map dimensions do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A tensor handed in from outside violates its index symmetries.
class SymmetryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed configuration (CLI / JSON layer).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace sgehom
