#include <hypsum/error.hpp>

namespace hypsum
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::TruncationExceeded:
            return "TruncationExceeded";
        case ErrorKind::PochhammerPole:
            return "PochhammerPole";
        case ErrorKind::BadLowerParameter:
            return "BadLowerParameter";
        case ErrorKind::NotDistinctModZ:
            return "NotDistinctModZ";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::PrefactorPole:
            return "PrefactorPole";
        case ErrorKind::KBelowRange:
            return "KBelowRange";
        case ErrorKind::NotSimplePole:
            return "NotSimplePole";
        case ErrorKind::KOutOfAlphaRange:
            return "KOutOfAlphaRange";
        case ErrorKind::TruncationTooSmall:
            return "TruncationTooSmall";
        case ErrorKind::SupportViolation:
            return "SupportViolation";
        case ErrorKind::CheckFailed:
            return "CheckFailed";
        case ErrorKind::NumericResidualExceeded:
            return "NumericResidualExceeded";
    }
    return "Unknown";
}

} // namespace hypsum
