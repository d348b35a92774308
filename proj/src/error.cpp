#include "isospec/error.hpp"

namespace isospec {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::IllegalEvenSublattice: return "IllegalEvenSublattice";
    case ErrorCode::ZeroOrder: return "ZeroOrder";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::AffineUnsupported: return "AffineUnsupported";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace isospec
