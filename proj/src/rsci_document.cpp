#include "rsciex/rsci_document.hpp"

#include <algorithm>
#include <set>

namespace rsciex::rsci {

namespace {

constexpr const char* kRootTag = "Journal";

void add_localized(xml::Element& parent, const char* tag, const LocalizedText& text) {
    auto& child = parent.add_leaf(tag, text.value);
    child.set_attribute("lang", text.language);
}

void add_optional_leaf(xml::Element& parent, const char* tag,
                       const std::optional<std::string>& value) {
    if (value && !value->empty()) parent.add_leaf(tag, *value);
}

xml::Element build_author(const AuthorRecord& author) {
    xml::Element node("Author");
    node.add_leaf("Surname", author.surname);
    if (!author.initials.empty()) node.add_leaf("Initials", author.initials);
    add_optional_leaf(node, "OrgName", author.org_name);
    add_optional_leaf(node, "Email", author.email);
    add_optional_leaf(node, "OtherInfo", author.other_info);
    return node;
}

xml::Element build_article(const ArticleRecord& article) {
    xml::Element node("Article");
    node.add_leaf("ArtType", article.art_type);

    auto& authors = node.add_child("Authors");
    for (const auto& author : article.authors) authors.children.push_back(build_author(author));

    auto& titles = node.add_child("ArtTitles");
    for (const auto& title : article.titles) add_localized(titles, "ArtTitle", title);

    add_optional_leaf(node, "Text", article.abstract_text);

    if (!article.codes.empty()) {
        auto& codes = node.add_child("Codes");
        for (const auto& [system, value] : article.codes) {
            auto& code = codes.add_leaf("Code", value);
            code.set_attribute("system", system);
        }
    }
    if (!article.keywords.empty()) {
        auto& keywords = node.add_child("KeyWords");
        for (const auto& keyword : article.keywords) keywords.add_leaf("Keyword", keyword);
    }
    if (!article.references.empty()) {
        auto& references = node.add_child("References");
        for (const auto& reference : article.references)
            references.add_leaf("Reference", reference);
    }
    if (!article.files.empty()) {
        auto& files = node.add_child("Files");
        for (const auto& file : article.files) files.add_leaf("File", file);
    }
    return node;
}

// --- parse-side checks -----------------------------------------------------

[[noreturn]] void schema_fail(const std::string& what) {
    throw Error(ErrorCode::SchemaError, what);
}

void note_unknown(std::vector<std::string>& summary, const std::string& path,
                  const std::string& name) {
    summary.push_back((path.empty() ? name : path + "/" + name) + ": passthrough");
}

void scan_children(const xml::Element& parent, const std::string& path,
                   const std::set<std::string>& known, std::vector<std::string>& summary) {
    for (const auto& child : parent.children)
        if (known.find(child.name) == known.end()) note_unknown(summary, path, child.name);
}

void check_localized(const xml::Element& element, const std::string& path) {
    const auto* lang = element.attribute("lang");
    if (lang == nullptr || lang->empty())
        schema_fail(path + " is missing its lang attribute");
    if (element.text.empty()) schema_fail(path + " has no text");
}

void check_author(const xml::Element& author, const std::string& path,
                  std::vector<std::string>& summary) {
    scan_children(author, path, {"Surname", "Initials", "OrgName", "Email", "OtherInfo"},
                  summary);
    const auto* surname = author.first_child("Surname");
    if (surname == nullptr || surname->text.empty())
        schema_fail(path + " is missing Surname");
}

void check_article(const xml::Element& article, const std::string& path,
                   std::vector<std::string>& summary) {
    scan_children(article, path,
                  {"ArtType", "Authors", "ArtTitles", "Text", "Codes", "KeyWords", "References",
                   "Files"},
                  summary);

    const auto* authors = article.first_child("Authors");
    if (authors == nullptr) schema_fail(path + " is missing Authors");
    const auto author_nodes = authors->children_named("Author");
    if (author_nodes.empty()) schema_fail(path + "/Authors has no Author");
    scan_children(*authors, path + "/Authors", {"Author"}, summary);
    for (std::size_t i = 0; i < author_nodes.size(); ++i)
        check_author(*author_nodes[i], path + "/Authors/Author[" + std::to_string(i) + "]",
                     summary);

    const auto* titles = article.first_child("ArtTitles");
    if (titles == nullptr) schema_fail(path + " is missing ArtTitles");
    const auto title_nodes = titles->children_named("ArtTitle");
    if (title_nodes.empty()) schema_fail(path + "/ArtTitles has no ArtTitle");
    scan_children(*titles, path + "/ArtTitles", {"ArtTitle"}, summary);
    for (std::size_t i = 0; i < title_nodes.size(); ++i)
        check_localized(*title_nodes[i],
                        path + "/ArtTitles/ArtTitle[" + std::to_string(i) + "]");

    if (const auto* files = article.first_child("Files")) {
        scan_children(*files, path + "/Files", {"File"}, summary);
        if (files->children_named("File").empty()) schema_fail(path + "/Files has no File");
    }
}

void check_document(const xml::Element& root, std::vector<std::string>& summary) {
    scan_children(root, "", {"Titleid", "ISSN", "EISSN", "JournalInfo", "Issue"}, summary);

    const auto* journal_info = root.first_child("JournalInfo");
    if (journal_info == nullptr) schema_fail("document is missing JournalInfo");
    const auto titles = journal_info->children_named("Title");
    if (titles.empty()) schema_fail("JournalInfo has no Title");
    scan_children(*journal_info, "JournalInfo", {"Title"}, summary);
    for (std::size_t i = 0; i < titles.size(); ++i)
        check_localized(*titles[i], "JournalInfo/Title[" + std::to_string(i) + "]");

    const auto* issue = root.first_child("Issue");
    if (issue == nullptr) schema_fail("document is missing Issue");
    scan_children(*issue, "Issue",
                  {"Volume", "Number", "AltNumber", "Part", "DateUni", "IssTitle", "Pages",
                   "Articles"},
                  summary);
    for (const char* required : {"Number", "DateUni", "Pages"}) {
        const auto* node = issue->first_child(required);
        if (node == nullptr || node->text.empty())
            schema_fail(std::string("Issue is missing ") + required);
    }
    if (!check_date_uni(issue->first_child("DateUni")->text))
        schema_fail("Issue/DateUni is not a YYYYMM date: \""
                    + issue->first_child("DateUni")->text + "\"");

    const auto* articles = issue->first_child("Articles");
    if (articles == nullptr) schema_fail("Issue is missing Articles");
    const auto article_nodes = articles->children_named("Article");
    if (article_nodes.empty()) schema_fail("Articles has no Article");
    scan_children(*articles, "Issue/Articles", {"Article"}, summary);
    for (std::size_t i = 0; i < article_nodes.size(); ++i)
        check_article(*article_nodes[i], "Article[" + std::to_string(i) + "]", summary);
}

} // namespace

const xml::Element* RsciDocument::articles() const {
    const auto* node = issue();
    return node == nullptr ? nullptr : node->first_child("Articles");
}

std::size_t RsciDocument::article_count() const {
    const auto* node = articles();
    return node == nullptr ? 0 : node->children_named("Article").size();
}

std::string RsciDocument::issn_text() const {
    const auto* node = root.first_child("ISSN");
    return node == nullptr ? std::string{} : node->text;
}

RsciDocument build_rsci_document(const IssueBundle& bundle) {
    auto report = validate_bundle(bundle);
    if (!report.is_exportable()) throw NotExportableError(std::move(report));

    RsciDocument doc;
    doc.root = xml::Element(kRootTag);

    add_optional_leaf(doc.root, "Titleid", bundle.journal.title_id);
    add_optional_leaf(doc.root, "ISSN", bundle.journal.issn);
    add_optional_leaf(doc.root, "EISSN", bundle.journal.eissn);

    auto& journal_info = doc.root.add_child("JournalInfo");
    for (const auto& title : bundle.journal.titles) add_localized(journal_info, "Title", title);

    auto& issue = doc.root.add_child("Issue");
    if (bundle.issue.volume) issue.add_leaf("Volume", std::to_string(*bundle.issue.volume));
    issue.add_leaf("Number", bundle.issue.number);
    add_optional_leaf(issue, "AltNumber", bundle.issue.alt_number);
    add_optional_leaf(issue, "Part", bundle.issue.part);
    issue.add_leaf("DateUni", bundle.issue.date_uni);
    add_optional_leaf(issue, "IssTitle", bundle.issue.iss_title);
    issue.add_leaf("Pages", bundle.issue.pages);

    auto& articles = issue.add_child("Articles");
    for (const auto& article : bundle.articles)
        articles.children.push_back(build_article(article));

    return doc;
}

std::string serialize_xml(const RsciDocument& doc) {
    return xml::serialize(doc.root);
}

ParseOutcome parse_rsci_xml(std::string_view bytes) {
    ParseOutcome outcome;
    outcome.document.root = xml::parse(bytes);
    check_document(outcome.document.root, outcome.passthrough);
    return outcome;
}

} // namespace rsciex::rsci
