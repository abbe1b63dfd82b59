#include "rsciex/dublin_core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace rsciex::ingest {

namespace {

constexpr std::array<const char*, 15> kDcElements = {
    "title",  "creator",    "subject", "description", "publisher",
    "contributor", "date",  "type",    "format",      "identifier",
    "source", "language",   "relation", "coverage",   "rights",
};

std::string join(const std::vector<std::string>& values, const char* separator) {
    std::string out;
    for (const auto& value : values) {
        if (!out.empty()) out += separator;
        out += value;
    }
    return out;
}

// dc:language values arrive as anything from "ENG" to "en-US"; normalize to
// the 3-letter uppercase form, falling back to English.
std::string title_language(const DublinCoreRecord& record) {
    static const std::map<std::string, std::string> kTwoLetter = {
        {"EN", "ENG"}, {"UK", "UKR"}, {"RU", "RUS"}, {"DE", "DEU"},
        {"FR", "FRA"}, {"ES", "SPA"}, {"PL", "POL"}, {"IT", "ITA"},
    };
    if (!record.has("language")) return "ENG";
    std::string raw = record.values("language").front();
    raw = raw.substr(0, raw.find_first_of("-_ "));
    std::transform(raw.begin(), raw.end(), raw.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (raw.size() == 3
        && std::all_of(raw.begin(), raw.end(), [](char c) { return c >= 'A' && c <= 'Z'; }))
        return raw;
    if (const auto it = kTwoLetter.find(raw); it != kTwoLetter.end()) return it->second;
    return "ENG";
}

} // namespace

bool DublinCoreRecord::is_dc_element(std::string_view name) {
    return std::find(kDcElements.begin(), kDcElements.end(), name) != kDcElements.end();
}

void DublinCoreRecord::add(std::string_view element, std::string value) {
    if (!is_dc_element(element))
        throw std::invalid_argument("not a Dublin Core element: " + std::string(element));
    elements_[std::string(element)].push_back(std::move(value));
}

bool DublinCoreRecord::has(std::string_view element) const {
    const auto it = elements_.find(std::string(element));
    return it != elements_.end() && !it->second.empty();
}

const std::vector<std::string>& DublinCoreRecord::values(std::string_view element) const {
    static const std::vector<std::string> kEmpty;
    const auto it = elements_.find(std::string(element));
    return it == elements_.end() ? kEmpty : it->second;
}

DublinCoreRecord record_from_xml(const xml::Element& container) {
    DublinCoreRecord record;
    for (const auto& child : container.children) {
        const auto name = xml::local_name(child.name);
        if (!DublinCoreRecord::is_dc_element(name)) continue;
        auto value = trim(child.text);
        if (value.empty()) continue;
        record.add(name, std::move(value));
    }
    return record;
}

AuthorRecord parse_creator(const std::string& creator) {
    AuthorRecord author;
    const auto comma = creator.find(',');
    if (comma == std::string::npos) {
        author.surname = trim(creator);
    } else {
        author.surname = trim(creator.substr(0, comma));
        author.initials = trim(creator.substr(comma + 1));
    }
    return author;
}

IssueBundle from_dublin_core(const std::vector<DublinCoreRecord>& records,
                             JournalHeader journal, IssueHeader issue) {
    if (records.empty())
        throw Error(ErrorCode::EmptyInput, "no Dublin Core records to map");

    IssueBundle bundle;
    bundle.journal = std::move(journal);
    bundle.issue = std::move(issue);
    bundle.articles.reserve(records.size());

    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& record = records[i];
        if (!record.has("title"))
            throw Error(ErrorCode::MappingError,
                        "record " + std::to_string(i) + " has no title");
        if (!record.has("creator"))
            throw Error(ErrorCode::MappingError,
                        "record " + std::to_string(i) + " has no creator");

        ArticleRecord article;
        const auto language = title_language(record);
        for (const auto& title : record.values("title"))
            article.titles.push_back({language, title});
        for (const auto& creator : record.values("creator"))
            article.authors.push_back(parse_creator(creator));
        article.keywords = record.values("subject");
        if (record.has("description"))
            article.abstract_text = join(record.values("description"), "\n");
        if (record.has("identifier"))
            article.codes["DC.identifier"] = join(record.values("identifier"), "; ");
        bundle.articles.push_back(std::move(article));
    }
    return bundle;
}

} // namespace rsciex::ingest
