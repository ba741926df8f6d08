#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bergtoep {

using Complex = std::complex<double>;

inline constexpr const char* version_string = "0.1.0";

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched lengths between multi-indices, partitions, vectors or matrices.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A radial integral does not converge for the requested exponents.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Quasi-homogeneous coordinates xi_(j) = z_(j)/r_j requested at r_j = 0.
class UndefinedCoordinatesError : public Error {
public:
    using Error::Error;
};

/// Invalid input value (configs, symbol parameters, group elements).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numeric quadrature failed its node-doubling stability check.
class QuadratureError : public Error {
public:
    using Error::Error;
};

} // namespace bergtoep
