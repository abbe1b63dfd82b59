#include "rsciex/oai_client.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include <httplib.h>

namespace rsciex::ingest {

namespace {

struct SplitUrl {
    std::string base; // scheme://host[:port]
    std::string path;
};

SplitUrl split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw Error(ErrorCode::NetworkError, "endpoint URL needs a scheme: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

std::string percent_encode(const std::string& raw) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : raw) {
        const bool unreserved = std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~';
        if (unreserved) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += kHex[c >> 4];
            out += kHex[c & 0xf];
        }
    }
    return out;
}

std::string fetch_page(const HarvestConfig& config, const std::string& verb,
                       const std::string& resumption_token) {
    const auto url = split_url(config.endpoint_url);
    httplib::Client client(url.base);
    client.set_connection_timeout(config.timeout_seconds);
    client.set_read_timeout(config.timeout_seconds);

    std::string query = "verb=" + verb;
    if (resumption_token.empty()) {
        query += "&metadataPrefix=oai_dc";
        if (config.set_spec) query += "&set=" + percent_encode(*config.set_spec);
        if (config.from) query += "&from=" + percent_encode(*config.from);
        if (config.until) query += "&until=" + percent_encode(*config.until);
    } else {
        // Tokens travel alone; the protocol forbids repeating the filters.
        query += "&resumptionToken=" + percent_encode(resumption_token);
    }

    const auto result = client.Get(url.path + "?" + query);
    if (!result)
        throw Error(ErrorCode::NetworkError,
                    config.endpoint_url + ": " + httplib::to_string(result.error()));
    if (result->status != 200)
        throw Error(ErrorCode::NetworkError,
                    config.endpoint_url + ": HTTP " + std::to_string(result->status));
    return result->body;
}

xml::Element parse_envelope(const std::string& body) {
    xml::Element root;
    try {
        root = xml::parse(body);
    } catch (const Error& error) {
        throw Error(ErrorCode::ParseError, std::string("bad OAI response: ") + error.what());
    }

    for (const auto& child : root.children) {
        if (xml::local_name(child.name) == "error") {
            const auto* code = child.attribute("code");
            throw Error(ErrorCode::ProtocolError,
                        (code != nullptr ? *code : std::string("unspecified"))
                            + (child.text.empty() ? "" : " - " + child.text));
        }
    }
    return root;
}

const xml::Element* find_by_local_name(const xml::Element& parent, std::string_view name) {
    for (const auto& child : parent.children)
        if (xml::local_name(child.name) == name) return &child;
    return nullptr;
}

bool is_deleted(const xml::Element& record) {
    const auto* header = find_by_local_name(record, "header");
    if (header == nullptr) return false;
    const auto* status = header->attribute("status");
    return status != nullptr && *status == "deleted";
}

// Shared ListRecords/ListIdentifiers pagination loop. `consume` returns the
// number of items it took from the page; the walk stops once `limit` items
// are consumed or the server stops issuing tokens.
void paginate(const HarvestConfig& config, const std::string& verb, std::size_t limit,
              const std::function<std::size_t(const xml::Element&, std::size_t)>& consume) {
    if (config.timeout_seconds <= 0) throw std::invalid_argument("timeout must be positive");
    if (config.max_records == 0) throw std::invalid_argument("max_records must be positive");

    std::string token;
    std::size_t taken = 0;
    while (true) {
        const auto body = fetch_page(config, verb, token);
        const auto root = parse_envelope(body);
        const auto* list = find_by_local_name(root, verb);
        if (list == nullptr)
            throw Error(ErrorCode::ParseError, "OAI response has no " + verb + " element");

        taken += consume(*list, limit - taken);
        if (taken >= limit) return;

        const auto* next = find_by_local_name(*list, "resumptionToken");
        if (next == nullptr || next->text.empty()) return;
        token = next->text;
    }
}

} // namespace

std::vector<DublinCoreRecord> harvest_oai(const HarvestConfig& config) {
    std::vector<DublinCoreRecord> records;
    paginate(config, "ListRecords", config.max_records,
             [&records](const xml::Element& list, std::size_t room) {
                 std::size_t taken = 0;
                 for (const auto& child : list.children) {
                     if (taken == room) break;
                     if (xml::local_name(child.name) != "record" || is_deleted(child)) continue;
                     const auto* metadata = find_by_local_name(child, "metadata");
                     if (metadata == nullptr || metadata->children.empty()) continue;
                     records.push_back(record_from_xml(metadata->children.front()));
                     ++taken;
                 }
                 return taken;
             });
    return records;
}

std::vector<std::string> list_identifiers(const HarvestConfig& config) {
    std::vector<std::string> identifiers;
    paginate(config, "ListIdentifiers", config.max_records,
             [&identifiers](const xml::Element& list, std::size_t room) {
                 std::size_t taken = 0;
                 for (const auto& child : list.children) {
                     if (taken == room) break;
                     if (xml::local_name(child.name) != "header") continue;
                     const auto* id = find_by_local_name(child, "identifier");
                     if (id == nullptr) continue;
                     identifiers.push_back(id->text);
                     ++taken;
                 }
                 return taken;
             });
    return identifiers;
}

} // namespace rsciex::ingest
