#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptosc {

enum class ErrorKind {
    NonFinite,
    DegenerateDiagonal,
    NonPositiveMass,
    NegativeMixing,
    NegativeMomentum,
    ExceptionalPoint,
    BrokenPTPhase,
    NonRealTrace,
    TachyonicMass,
};

std::string_view to_string(ErrorKind kind);

/// Raised for every rejected input or unphysical regime in the library.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// At eta == 1 the eigenvalues still exist; they travel with the error.
class ExceptionalPointError : public DomainError {
public:
    ExceptionalPointError(double merged_mass_sq, const std::string& what)
        : DomainError(ErrorKind::ExceptionalPoint, what), merged_mass_sq_(merged_mass_sq) {}

    double merged_mass_sq() const noexcept { return merged_mass_sq_; }

private:
    double merged_mass_sq_;
};

}  // namespace ptosc
