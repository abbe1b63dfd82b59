#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rsciex/metadata.hpp"
#include "rsciex/xml.hpp"

namespace rsciex::rsci {

/// Import tree for the citation-index upload. The tag vocabulary is fixed:
///
///   Journal -> Titleid? ISSN? EISSN? JournalInfo{Title+} Issue
///   Issue   -> Volume? Number AltNumber? Part? DateUni IssTitle? Pages
///              Articles{Article+}
///   Article -> ArtType Authors{Author+} ArtTitles{ArtTitle+} Text? Codes?
///              KeyWords{Keyword*}? References{Reference*}? Files{File+}?
///   Author  -> Surname Initials? OrgName? Email? OtherInfo?
///
/// Title and ArtTitle carry a `lang` attribute. Absent optional fields have
/// no element; empty elements are never emitted. Unknown elements read from
/// foreign exports survive inside the tree as opaque nodes.
struct RsciDocument {
    xml::Element root;

    const xml::Element* issue() const { return root.first_child("Issue"); }
    const xml::Element* articles() const;
    std::size_t article_count() const;
    std::string issn_text() const;

    bool operator==(const RsciDocument&) const = default;
};

/// Parse result: the document plus one summary line per element that is not
/// part of the vocabulary ("OperCard: passthrough").
struct ParseOutcome {
    RsciDocument document;
    std::vector<std::string> passthrough;
};

/// Raised when an operation requires an exportable bundle; carries the full
/// report so callers can show what failed.
class NotExportableError : public Error {
public:
    explicit NotExportableError(ValidationReport report)
        : Error(ErrorCode::NotExportable,
                std::to_string(report.error_count()) + " validation error(s)"),
          report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Maps every populated bundle field onto its tag, preserving article,
/// author and reference order. Throws NotExportableError unless
/// validate_bundle(bundle) is clean of errors.
RsciDocument build_rsci_document(const IssueBundle& bundle);

/// serialize_xml contract: see xml::serialize. Same document, same bytes.
std::string serialize_xml(const RsciDocument& doc);

/// Inverse of serialize_xml on its image. Accepts any root element name and
/// any child order; requires the mandatory structure (JournalInfo with at
/// least one Title, Issue with Number/DateUni/Pages, at least one Article
/// with authors and titles). Unknown elements are kept and reported.
/// Throws XML_SYNTAX_ERROR (with byte offset) or SCHEMA_ERROR.
ParseOutcome parse_rsci_xml(std::string_view bytes);

} // namespace rsciex::rsci
