#ifndef HYPERENT_ERRORS_HPP
#define HYPERENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperent {

enum class ErrorCode {
    NonUniformEdge,
    DuplicateEdge,
    VertexOutOfRange,
    IsolatedVertex,
    InvalidParameters,
    TargetInsideEdge,
    SourceNotInEdge,
    MultipleEdgeCreated,
    IsolatedVertexCreated,
    NotLinear,
    AnchorNotInEdge,
    EdgeIsPendent,
    PreconditionMismatch,
    Disconnected,
    TooLarge,
    SearchSpaceTooLarge,
    RetryExhausted,
    SyntaxError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace hyperent

#endif
