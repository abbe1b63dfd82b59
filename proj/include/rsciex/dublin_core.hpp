#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rsciex/metadata.hpp"
#include "rsciex/xml.hpp"

namespace rsciex::ingest {

/// One harvested record: Dublin Core element -> repeated values, in source
/// order. Only the 15 core elements are representable.
class DublinCoreRecord {
public:
    static bool is_dc_element(std::string_view name);

    /// Throws std::invalid_argument for names outside the element set.
    void add(std::string_view element, std::string value);

    bool has(std::string_view element) const;
    const std::vector<std::string>& values(std::string_view element) const;
    const std::map<std::string, std::vector<std::string>>& elements() const {
        return elements_;
    }

private:
    std::map<std::string, std::vector<std::string>> elements_;
};

/// Reads one oai_dc container element (children like dc:title, dc:creator).
/// Unknown children and empty values are skipped; namespace prefixes are
/// ignored.
DublinCoreRecord record_from_xml(const xml::Element& container);

/// "Surname, I.I." -> {surname, initials}; with no comma the whole string is
/// the surname.
AuthorRecord parse_creator(const std::string& creator);

/// Maps each record to one article: title->titles, creator->authors,
/// subject->keywords, description->abstract, identifier->codes
/// ["DC.identifier"]. The records carry no issue structure, so journal and
/// issue headers come from the caller. Title languages use dc:language when
/// present, "ENG" otherwise.
///
/// Throws EMPTY_INPUT for zero records and MAPPING_ERROR (naming the record
/// index) when a record lacks a title or a creator.
IssueBundle from_dublin_core(const std::vector<DublinCoreRecord>& records,
                             JournalHeader journal, IssueHeader issue);

} // namespace rsciex::ingest
