#pragma once

#include <stdexcept>
#include <string>

namespace rsciex {

// Stable error identifiers surfaced to callers and the CLI. Each maps to a
// documented failure mode of one library operation.
enum class ErrorCode {
    IoError,
    SchemaError,
    MissingAttachment,
    EmptyInput,
    MappingError,
    NetworkError,
    ProtocolError,
    ParseError,
    XmlSyntaxError,
    NotExportable,
    InvalidIssn,
    EmptyProfile,
    ZeroH,
    QOutOfRange,
    NoPublications,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace rsciex
