#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsciex {

/// One string in one language. The language code is a 3-letter uppercase
/// token carried as the lang attribute on export (lang="UKR", lang="ENG", ...).
struct LocalizedText {
    std::string language;
    std::string value;

    bool operator==(const LocalizedText&) const = default;
};

/// Journal-level identification: at least one of issn/eissn/title_id must be
/// present for the journal to be addressable.
struct JournalHeader {
    std::optional<std::string> title_id;
    std::optional<std::string> issn;
    std::optional<std::string> eissn;
    std::vector<LocalizedText> titles;

    bool operator==(const JournalHeader&) const = default;
};

struct IssueHeader {
    std::optional<std::int64_t> volume;
    std::string number;                    // mandatory
    std::optional<std::string> alt_number; // end-to-end number
    std::optional<std::string> part;
    std::string date_uni;                  // YYYYMM, mandatory
    std::optional<std::string> iss_title;
    std::string pages;                     // mandatory; count or range, kept opaque

    bool operator==(const IssueHeader&) const = default;
};

struct AuthorRecord {
    std::string surname;
    std::string initials;
    std::optional<std::string> org_name;
    std::optional<std::string> email;
    std::optional<std::string> other_info;

    bool operator==(const AuthorRecord&) const = default;
};

/// Default article type when the source does not say otherwise.
inline constexpr const char* kDefaultArtType = "RAR";

struct ArticleRecord {
    std::string art_type = kDefaultArtType;
    std::vector<AuthorRecord> authors;
    std::vector<LocalizedText> titles;
    std::optional<std::string> abstract_text;
    std::map<std::string, std::string> codes; // code system (e.g. "UDC") -> value
    std::vector<std::string> keywords;
    std::vector<std::string> references;
    std::vector<std::string> files; // bare file names, resolved via IssueBundle::attachments
    std::optional<std::string> page_range;

    bool operator==(const ArticleRecord&) const = default;
};

struct IssueBundle {
    JournalHeader journal;
    IssueHeader issue;
    std::vector<ArticleRecord> articles;
    std::map<std::string, std::vector<std::uint8_t>> attachments; // file name -> payload

    bool operator==(const IssueBundle&) const = default;
};

enum class Severity { Error, Warning };

struct Violation {
    std::string path;    // e.g. "issue.pages", "articles[1].authors"
    std::string rule;    // stable rule identifier, e.g. "MANDATORY_MISSING"
    Severity severity;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool is_exportable() const {
        for (const auto& v : violations)
            if (v.severity == Severity::Error) return false;
        return true;
    }
    std::size_t error_count() const;
    std::size_t warning_count() const;
};

// Rule identifiers used in ValidationReport entries.
namespace rules {
inline constexpr const char* kMandatoryMissing = "MANDATORY_MISSING";
inline constexpr const char* kDateUniFormat = "DATEUNI_FORMAT";
inline constexpr const char* kIssnInvalid = "ISSN_INVALID";
inline constexpr const char* kJournalIdMissing = "JOURNAL_ID_MISSING";
inline constexpr const char* kLangFormat = "LANG_FORMAT";
inline constexpr const char* kEmptyText = "EMPTY_TEXT";
inline constexpr const char* kDuplicateLang = "DUPLICATE_LANG";
inline constexpr const char* kNoArticles = "NO_ARTICLES";
inline constexpr const char* kNoAuthors = "NO_AUTHORS";
inline constexpr const char* kNoTitles = "NO_TITLES";
inline constexpr const char* kAuthorSurname = "AUTHOR_SURNAME";
inline constexpr const char* kEmailFormat = "EMAIL_FORMAT";
inline constexpr const char* kFileName = "FILE_NAME";
inline constexpr const char* kDanglingFile = "DANGLING_FILE";
inline constexpr const char* kRecommendedMissing = "RECOMMENDED_MISSING";
inline constexpr const char* kArtTypeUnknown = "ARTTYPE_UNKNOWN";
inline constexpr const char* kOrphanAttachment = "ORPHAN_ATTACHMENT";
} // namespace rules

/// True iff `candidate` has the form NNNN-NNNC and the mod-11 check digit
/// (weights 8..2, X standing for 10) verifies.
bool check_issn(const std::string& candidate);

/// True iff `date_uni` is a 6-digit YYYYMM string with month 01..12 and
/// year 1900..2100.
bool check_date_uni(const std::string& date_uni);

/// Checks every rule against the bundle and reports all violations; never
/// throws. A bundle is exportable iff the report carries no ERROR entry.
ValidationReport validate_bundle(const IssueBundle& bundle);

/// Strips leading/trailing ASCII whitespace. Scalar fields are trimmed with
/// this on every ingest path; internal whitespace is preserved.
std::string trim(const std::string& s);

} // namespace rsciex
