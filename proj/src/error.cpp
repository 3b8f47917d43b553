#include "orbitmorse/error.hpp"

namespace orbitmorse {

std::string_view to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::EmptyChain: return "EmptyChain";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::AlreadySylow: return "AlreadySylow";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EmptyComplex: return "EmptyComplex";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidChain: return "InvalidChain";
        case ErrorKind::MatchingFailure: return "MatchingFailure";
        case ErrorKind::BoundViolated: return "BoundViolated";
        case ErrorKind::StuckCollapse: return "StuckCollapse";
        case ErrorKind::BoundaryCheckFailed: return "BoundaryCheckFailed";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace orbitmorse
