#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algnorm {

enum class ErrorKind {
    ParseError,
    FlagError,
    IndexOutOfRange,
    MalformedTable,
    InvalidParameter,
    NotAssociative,
    InfiniteCodimension,
    FiniteCodimension,
    EmptyComplement,
    BoundedFunctional,
    UnknownEntry,
    SymbolicOnly,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports carries one of the kinds above; the CLI
// maps kinds onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace algnorm
