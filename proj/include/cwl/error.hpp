#pragma once

#include <stdexcept>
#include <string>

namespace cwl {

enum class ErrorCode {
    InvalidVertex,
    NotIndependent,
    InvalidArgument,
    NotBipartite,
    NotVertexDecomposable,
    InvalidDecomposition,
    AmbientMismatch,
    NotSquarefree,
    EdgelessGraph,
    ZeroIdeal,
    Parse,
    TooLarge,
};

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace cwl
