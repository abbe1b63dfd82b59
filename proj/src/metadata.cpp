#include "rsciex/metadata.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rsciex {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_upper3(const std::string& s) {
    return s.size() == 3 && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

bool well_formed_email(const std::string& email) {
    const auto at = email.find('@');
    if (at == std::string::npos || at == 0 || at + 1 == email.size()) return false;
    return email.find('@', at + 1) == std::string::npos;
}

bool bare_file_name(const std::string& name) {
    return !name.empty() && name.find('/') == std::string::npos && name.find('\\') == std::string::npos;
}

// Types the import side is known to take. Others export verbatim but draw
// a warning.
bool known_art_type(const std::string& t) { return t == kDefaultArtType; }

class ReportBuilder {
public:
    void error(std::string path, const char* rule, std::string message) {
        report_.violations.push_back({std::move(path), rule, Severity::Error, std::move(message)});
    }
    void warning(std::string path, const char* rule, std::string message) {
        report_.violations.push_back({std::move(path), rule, Severity::Warning, std::move(message)});
    }
    ValidationReport take() { return std::move(report_); }

private:
    ValidationReport report_;
};

void check_localized_list(ReportBuilder& out, const std::vector<LocalizedText>& texts,
                          const std::string& path) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const auto item = path + "[" + std::to_string(i) + "]";
        if (!is_upper3(texts[i].language))
            out.error(item + ".lang", rules::kLangFormat,
                      "language must be 3 uppercase letters, got \"" + texts[i].language + "\"");
        if (trim(texts[i].value).empty())
            out.error(item + ".value", rules::kEmptyText, "text must be non-empty");
        if (!seen.insert(texts[i].language).second)
            out.error(item + ".lang", rules::kDuplicateLang,
                      "duplicate language \"" + texts[i].language + "\"");
    }
}

void check_journal(ReportBuilder& out, const JournalHeader& journal) {
    if (journal.titles.empty())
        out.error("journal.titles", rules::kMandatoryMissing, "journal title is mandatory");
    else
        check_localized_list(out, journal.titles, "journal.titles");

    if (!journal.issn && !journal.eissn && !journal.title_id)
        out.error("journal", rules::kJournalIdMissing,
                  "at least one of issn, eissn or title_id is required");
    if (journal.issn && !check_issn(*journal.issn))
        out.error("journal.issn", rules::kIssnInvalid, "malformed ISSN \"" + *journal.issn + "\"");
    if (journal.eissn && !check_issn(*journal.eissn))
        out.error("journal.eissn", rules::kIssnInvalid, "malformed eISSN \"" + *journal.eissn + "\"");
    if (!journal.eissn)
        out.warning("journal.eissn", rules::kRecommendedMissing, "eISSN is recommended");
}

void check_issue(ReportBuilder& out, const IssueHeader& issue) {
    if (issue.number.empty())
        out.error("issue.number", rules::kMandatoryMissing, "issue number is mandatory");
    if (issue.pages.empty())
        out.error("issue.pages", rules::kMandatoryMissing, "pages is mandatory");
    if (issue.date_uni.empty())
        out.error("issue.date_uni", rules::kMandatoryMissing, "publication date is mandatory");
    else if (!check_date_uni(issue.date_uni))
        out.error("issue.date_uni", rules::kDateUniFormat,
                  "date must be YYYYMM, got \"" + issue.date_uni + "\"");
    if (issue.volume && *issue.volume < 0)
        out.error("issue.volume", rules::kMandatoryMissing, "volume must be non-negative");
}

void check_article(ReportBuilder& out, const ArticleRecord& article, const std::string& path,
                   const std::map<std::string, std::vector<std::uint8_t>>& attachments) {
    if (article.authors.empty())
        out.error(path + ".authors", rules::kNoAuthors, "article needs at least one author");
    for (std::size_t i = 0; i < article.authors.size(); ++i) {
        const auto& author = article.authors[i];
        const auto apath = path + ".authors[" + std::to_string(i) + "]";
        if (trim(author.surname).empty())
            out.error(apath + ".surname", rules::kAuthorSurname, "surname must be non-empty");
        if (author.email && !well_formed_email(*author.email))
            out.error(apath + ".email", rules::kEmailFormat,
                      "malformed email \"" + *author.email + "\"");
    }

    if (article.titles.empty())
        out.error(path + ".titles", rules::kNoTitles, "article needs at least one title");
    else
        check_localized_list(out, article.titles, path + ".titles");

    if (!known_art_type(article.art_type))
        out.warning(path + ".type", rules::kArtTypeUnknown,
                    "article type \"" + article.art_type + "\" is not a known token");
    if (!article.abstract_text || trim(*article.abstract_text).empty())
        out.warning(path + ".abstract", rules::kRecommendedMissing, "abstract is recommended");
    if (article.keywords.empty())
        out.warning(path + ".keywords", rules::kRecommendedMissing, "keywords are recommended");
    if (article.references.empty())
        out.warning(path + ".references", rules::kRecommendedMissing, "references are recommended");

    for (std::size_t i = 0; i < article.files.size(); ++i) {
        const auto fpath = path + ".files[" + std::to_string(i) + "]";
        const auto& name = article.files[i];
        if (!bare_file_name(name)) {
            out.error(fpath, rules::kFileName,
                      "file entry must be a bare file name, got \"" + name + "\"");
            continue;
        }
        if (attachments.find(name) == attachments.end())
            out.error(fpath, rules::kDanglingFile,
                      "file \"" + name + "\" has no matching attachment");
    }
}

} // namespace

std::size_t ValidationReport::error_count() const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(),
        [](const Violation& v) { return v.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const {
    return violations.size() - error_count();
}

std::string trim(const std::string& s) {
    auto begin = s.begin();
    auto end = s.end();
    while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
    return std::string(begin, end);
}

bool check_issn(const std::string& candidate) {
    // Pattern NNNN-NNNC where C is a digit or X.
    if (candidate.size() != 9 || candidate[4] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 7u})
        if (!is_digit(candidate[i])) return false;
    const char last = candidate[8];
    if (!is_digit(last) && last != 'X') return false;

    // Mod-11 check digit over weights 8..2; X stands for 10.
    int sum = 0;
    int weight = 8;
    for (std::size_t i = 0; i < 8; ++i) {
        if (candidate[i] == '-') continue;
        sum += (candidate[i] - '0') * weight;
        --weight;
    }
    const int expected = (11 - sum % 11) % 11;
    const int actual = last == 'X' ? 10 : last - '0';
    return expected == actual;
}

bool check_date_uni(const std::string& date_uni) {
    if (date_uni.size() != 6 || !std::all_of(date_uni.begin(), date_uni.end(), is_digit))
        return false;
    const int year = std::stoi(date_uni.substr(0, 4));
    const int month = std::stoi(date_uni.substr(4, 2));
    return year >= 1900 && year <= 2100 && month >= 1 && month <= 12;
}

ValidationReport validate_bundle(const IssueBundle& bundle) {
    ReportBuilder out;

    check_journal(out, bundle.journal);
    check_issue(out, bundle.issue);

    if (bundle.articles.empty())
        out.error("articles", rules::kNoArticles, "issue needs at least one article");
    for (std::size_t i = 0; i < bundle.articles.size(); ++i)
        check_article(out, bundle.articles[i], "articles[" + std::to_string(i) + "]",
                      bundle.attachments);

    // Attachment names are map keys, so uniqueness holds by construction;
    // unreferenced payloads are legal but worth flagging.
    std::set<std::string> referenced;
    for (const auto& article : bundle.articles)
        referenced.insert(article.files.begin(), article.files.end());
    for (const auto& [name, payload] : bundle.attachments) {
        (void)payload;
        if (referenced.find(name) == referenced.end())
            out.warning("attachments[" + name + "]", rules::kOrphanAttachment,
                        "attachment is not referenced by any article");
    }

    return out.take();
}

} // namespace rsciex
