#include "rsciex/errors.hpp"

namespace rsciex {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::MissingAttachment: return "MISSING_ATTACHMENT";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::MappingError: return "MAPPING_ERROR";
    case ErrorCode::NetworkError: return "NETWORK_ERROR";
    case ErrorCode::ProtocolError: return "PROTOCOL_ERROR";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::XmlSyntaxError: return "XML_SYNTAX_ERROR";
    case ErrorCode::NotExportable: return "NOT_EXPORTABLE";
    case ErrorCode::InvalidIssn: return "INVALID_ISSN";
    case ErrorCode::EmptyProfile: return "EMPTY_PROFILE";
    case ErrorCode::ZeroH: return "ZERO_H";
    case ErrorCode::QOutOfRange: return "Q_OUT_OF_RANGE";
    case ErrorCode::NoPublications: return "NO_PUBLICATIONS";
    }
    return "UNKNOWN";
}

} // namespace rsciex
