#ifndef PADICFUN_ERROR_HPP
#define PADICFUN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace padicfun
{

enum class ErrorKind {
    InvalidInput,
    MissingSymbol,
    NonSquareAssignment,
    BlockMismatch,
    ShapeMismatch,
    SizeMismatch,
    InvalidSigma,
    NonIntegralShift,
    NotRelevant,
    NotDominant,
    NotSymmetric,
    NotARefinement,
    UnsupportedLinked,
    EmptyPacket,
};

inline constexpr std::string_view kind_name(ErrorKind k) noexcept
{
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::MissingSymbol: return "MissingSymbol";
        case ErrorKind::NonSquareAssignment: return "NonSquareAssignment";
        case ErrorKind::BlockMismatch: return "BlockMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidSigma: return "InvalidSigma";
        case ErrorKind::NonIntegralShift: return "NonIntegralShift";
        case ErrorKind::NotRelevant: return "NotRelevant";
        case ErrorKind::NotDominant: return "NotDominant";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotARefinement: return "NotARefinement";
        case ErrorKind::UnsupportedLinked: return "UnsupportedLinked";
        case ErrorKind::EmptyPacket: return "EmptyPacket";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI reports `kind_name(kind())` verbatim.
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

[[noreturn]] inline void raise(ErrorKind kind, const std::string &what)
{
    throw Error(kind, std::string(kind_name(kind)) + ": " + what);
}

} // namespace padicfun

#endif
