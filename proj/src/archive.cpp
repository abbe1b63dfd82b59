#include "rsciex/archive.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

namespace rsciex::rsci {

namespace {

std::string zero_pad(long value, std::size_t width) {
    auto digits = std::to_string(value);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return digits;
}

bool leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

unsigned days_in_month(int year, unsigned month) {
    static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && leap_year(year)) return 29;
    return kDays[month - 1];
}

} // namespace

bool Date::valid() const {
    return year >= 1 && year <= 9999 && month >= 1 && month <= 12 && day >= 1
        && day <= days_in_month(year, month);
}

std::optional<Date> Date::parse(const std::string& iso) {
    Date date;
    char trailing = 0;
    if (std::sscanf(iso.c_str(), "%4d-%2u-%2u%c", &date.year, &date.month, &date.day, &trailing)
            != 3
        || iso.size() != 10)
        return std::nullopt;
    if (!date.valid()) return std::nullopt;
    return date;
}

std::vector<std::uint8_t> ExportArchive::zip_bytes() const {
    return zip::write_archive(
        entries, zip::dos_midnight(generation_date.year, generation_date.month,
                                   generation_date.day));
}

std::string make_archive_name(const std::string& issn, Date date,
                              const std::string& issue_number) {
    if (!check_issn(issn))
        throw Error(ErrorCode::InvalidIssn, "\"" + issn + "\" is not a valid ISSN");
    if (issue_number.empty()) throw std::invalid_argument("issue number must be non-empty");
    if (!date.valid()) throw std::invalid_argument("generation date is not a calendar date");

    std::string digits;
    for (char c : issn)
        if (c != '-') digits += c;

    return digits + "_" + zero_pad(date.year, 4) + "_" + zero_pad(date.month, 2) + "_"
        + zero_pad(date.day, 2) + "(" + issue_number + ")_unicode.xml";
}

ExportArchive package_archive(const IssueBundle& bundle, Date generation_date) {
    auto report = validate_bundle(bundle);
    if (!report.is_exportable()) throw NotExportableError(std::move(report));

    const std::string* issn = nullptr;
    if (bundle.journal.issn) issn = &*bundle.journal.issn;
    else if (bundle.journal.eissn) issn = &*bundle.journal.eissn;
    if (issn == nullptr)
        throw Error(ErrorCode::InvalidIssn,
                    "archive naming needs an ISSN or eISSN on the journal");

    const auto xml_name = make_archive_name(*issn, generation_date, bundle.issue.number);
    const auto doc = build_rsci_document(bundle);
    const auto xml_text = serialize_xml(doc);

    ExportArchive archive;
    archive.archive_name = xml_name.substr(0, xml_name.size() - 4) + ".zip";
    archive.generation_date = generation_date;
    archive.entries.push_back(
        {xml_name, std::vector<std::uint8_t>(xml_text.begin(), xml_text.end())});

    // Attachments follow the XML in first-reference order; payloads nobody
    // references still ship, appended by name.
    std::set<std::string> added;
    for (const auto& article : bundle.articles) {
        for (const auto& file : article.files) {
            if (!added.insert(file).second) continue;
            archive.entries.push_back({file, bundle.attachments.at(file)});
        }
    }
    for (const auto& [name, payload] : bundle.attachments) {
        if (added.insert(name).second) archive.entries.push_back({name, payload});
    }

    // Structural invariant of every output: each File element in the XML
    // names an archive entry.
    for (const auto* article : doc.articles()->children_named("Article")) {
        const auto* files = article->first_child("Files");
        if (files == nullptr) continue;
        for (const auto* file : files->children_named("File"))
            if (added.find(file->text) == added.end())
                throw std::logic_error("archive layout lost entry " + file->text);
    }
    return archive;
}

} // namespace rsciex::rsci
