#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isosum {

enum class ErrorKind {
    DegenerateInput,
    NotConvex,
    NotConcave,
    NotClosed,
    OutsideRegion,
    CVSRegion,
    NoInteriorEdge,
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace isosum
