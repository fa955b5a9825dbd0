#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lct {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset of the offending
/// character, or npos when the error is not tied to a position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset = npos)
        : Error(offset == npos ? what : what + " at offset " + std::to_string(offset)),
          offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t offset_;
};

/// An operation was called outside its domain (wrong arity, zero
/// polynomial, non-primitive weight, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace lct
