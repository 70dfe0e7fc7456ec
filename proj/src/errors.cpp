#include "ptosc/errors.hpp"

namespace ptosc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
        case ErrorKind::NonPositiveMass: return "NonPositiveMass";
        case ErrorKind::NegativeMixing: return "NegativeMixing";
        case ErrorKind::NegativeMomentum: return "NegativeMomentum";
        case ErrorKind::ExceptionalPoint: return "ExceptionalPoint";
        case ErrorKind::BrokenPTPhase: return "BrokenPTPhase";
        case ErrorKind::NonRealTrace: return "NonRealTrace";
        case ErrorKind::TachyonicMass: return "TachyonicMass";
    }
    return "Unknown";
}

}  // namespace ptosc
