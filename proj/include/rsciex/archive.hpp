#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsciex/metadata.hpp"
#include "rsciex/rsci_document.hpp"
#include "rsciex/zip.hpp"

namespace rsciex::rsci {

/// Proleptic Gregorian calendar date (no time zone). All archive naming and
/// zip timestamps derive from one of these, never from the wall clock.
struct Date {
    int year = 0;
    unsigned month = 0;
    unsigned day = 0;

    bool valid() const;
    static std::optional<Date> parse(const std::string& iso); // "YYYY-MM-DD"

    bool operator==(const Date&) const = default;
};

/// Upload bundle: the serialized XML plus all attachment payloads, in final
/// archive order. zip_bytes() is what lands on disk.
struct ExportArchive {
    std::string archive_name; // "...(N)_unicode.zip"
    std::vector<zip::Entry> entries;
    Date generation_date;

    std::vector<std::uint8_t> zip_bytes() const;
};

/// "0317-8471", 2018-01-12, "1" -> "03178471_2018_01_12(1)_unicode.xml".
/// Throws INVALID_ISSN unless the ISSN verifies; issue_number and date must
/// be non-degenerate.
std::string make_archive_name(const std::string& issn, Date date,
                              const std::string& issue_number);

/// Validates, builds and serializes the document, and lays out the archive:
/// the XML entry first, then attachments in first-reference article order,
/// then any unreferenced attachments by name. Throws NotExportableError on a
/// dirty bundle and INVALID_ISSN when the journal has no usable ISSN.
ExportArchive package_archive(const IssueBundle& bundle, Date generation_date);

} // namespace rsciex::rsci
