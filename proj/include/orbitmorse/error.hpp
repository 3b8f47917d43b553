#ifndef ORBITMORSE_ERROR_HPP
#define ORBITMORSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitmorse {

enum class ErrorKind
{
    InvalidPermutation,
    DegreeMismatch,
    SizeLimit,
    EmptyChain,
    NotSubgroup,
    AlreadySylow,
    NotPrime,
    EmptyComplex,
    IndexOutOfRange,
    InvalidChain,
    MatchingFailure,
    BoundViolated,
    StuckCollapse,
    BoundaryCheckFailed,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/**
 * Single exception type for the library. The kind lets callers (the CLI,
 * tests) distinguish input errors from internal consistency failures.
 */
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Parse failure with the byte offset of the offending token.
class ParseError : public Error
{
  public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::ParseError, what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

} // namespace orbitmorse

#endif
