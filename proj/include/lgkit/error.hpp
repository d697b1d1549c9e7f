#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgkit {

// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    Parse,          // malformed polynomial or catalog text
    NotInvertible,  // input outside the invertible / admissible class
    BoundExceeded,  // group enumeration larger than the configured bound
    Consistency,    // an internal cross-check failed
    InvalidArgument // caller violated a precondition
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace lgkit
