#ifndef SUPERQYBE_ERRORS_HPP
#define SUPERQYBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superqybe {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parameter outside its mathematical domain (q <= 0, negative radicand, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// alpha in the excluded interval [-1, 0]: neither type-I nor type-II unitary.
struct NonUnitaryRangeError : DomainError {
    explicit NonUnitaryRangeError(const std::string& msg) : DomainError(msg) {}
};

/// Operator is not parity-homogeneous where homogeneity is required.
struct ParityError : Error {
    explicit ParityError(const std::string& msg) : Error(msg) {}
};

/// Chain site index out of range.
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

/// Wrap-around bond requested on an open chain.
struct BoundaryError : Error {
    explicit BoundaryError(const std::string& msg) : Error(msg) {}
};

/// A fusion denominator q-number underflowed the configured floor.
struct SingularFusionError : Error {
    explicit SingularFusionError(const std::string& msg) : Error(msg) {}
};

/// Generator label outside the modeled set.
struct UnsupportedGeneratorError : Error {
    explicit UnsupportedGeneratorError(const std::string& msg) : Error(msg) {}
};

/// Chain length beyond the configured desk-scale maximum.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

} // namespace superqybe

#endif
