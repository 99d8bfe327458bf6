#ifndef HYPSUM_ERROR_HPP
#define HYPSUM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypsum
{

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    TruncationExceeded,
    PochhammerPole,
    BadLowerParameter,
    NotDistinctModZ,
    DimensionMismatch,
    PrefactorPole,
    KBelowRange,
    NotSimplePole,
    KOutOfAlphaRange,
    TruncationTooSmall,
    SupportViolation,
    CheckFailed,
    NumericResidualExceeded,
};

// Stable name used in JSON error payloads.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), m_kind(kind) {}

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

} // namespace hypsum

#endif
