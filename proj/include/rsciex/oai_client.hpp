#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsciex/dublin_core.hpp"

namespace rsciex::ingest {

struct HarvestConfig {
    std::string endpoint_url;
    std::optional<std::string> set_spec;
    std::optional<std::string> from;  // OAI datestamp bound, e.g. "2018-01-01"
    std::optional<std::string> until;
    int timeout_seconds = 30;
    std::size_t max_records = 1000;
};

/// Issues ListRecords with metadataPrefix=oai_dc and walks resumptionToken
/// pages until the server stops handing out tokens or max_records is
/// reached. Records come back in server order; deleted records are skipped.
/// One attempt per request — retrying is the caller's business.
///
/// Throws NETWORK_ERROR (transport), PROTOCOL_ERROR (OAI error condition,
/// message starts with the verbatim error code) or PARSE_ERROR (response
/// body is not the expected XML).
std::vector<DublinCoreRecord> harvest_oai(const HarvestConfig& config);

/// Same walk for ListIdentifiers; returns header identifiers.
std::vector<std::string> list_identifiers(const HarvestConfig& config);

} // namespace rsciex::ingest
