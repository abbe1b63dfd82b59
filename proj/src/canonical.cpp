#include "rsciex/canonical.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>

#include <json.hpp>

namespace rsciex::ingest {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::SchemaError, path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* candidate : allowed)
            if (key == candidate) known = true;
        if (!known) schema_fail(path, "unknown key \"" + key + "\"");
    }
}

const json* get_member(const json& obj, const std::string& path, const char* key,
                       json::value_t type, const char* type_name) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    if (it->type() != type) schema_fail(path + "." + key, std::string("must be ") + type_name);
    return &*it;
}

std::optional<std::string> opt_string(const json& obj, const std::string& path,
                                      const char* key) {
    const auto* member = get_member(obj, path, key, json::value_t::string, "a string");
    if (member == nullptr) return std::nullopt;
    return trim(member->get<std::string>());
}

std::string string_or_empty(const json& obj, const std::string& path, const char* key) {
    return opt_string(obj, path, key).value_or(std::string{});
}

std::vector<LocalizedText> read_titles(const json& obj, const std::string& path) {
    std::vector<LocalizedText> titles;
    const auto* array = get_member(obj, path, "titles", json::value_t::array, "an array");
    if (array == nullptr) return titles;
    for (std::size_t i = 0; i < array->size(); ++i) {
        const auto item_path = path + ".titles[" + std::to_string(i) + "]";
        const auto& item = (*array)[i];
        if (!item.is_object()) schema_fail(item_path, "must be an object");
        check_keys(item, item_path, {"lang", "value"});
        titles.push_back({string_or_empty(item, item_path, "lang"),
                          string_or_empty(item, item_path, "value")});
    }
    return titles;
}

std::vector<std::string> read_string_array(const json& obj, const std::string& path,
                                           const char* key) {
    std::vector<std::string> values;
    const auto* array = get_member(obj, path, key, json::value_t::array, "an array");
    if (array == nullptr) return values;
    for (std::size_t i = 0; i < array->size(); ++i) {
        const auto& item = (*array)[i];
        if (!item.is_string())
            schema_fail(path + "." + key + "[" + std::to_string(i) + "]", "must be a string");
        values.push_back(trim(item.get<std::string>()));
    }
    return values;
}

JournalHeader read_journal(const json& root) {
    JournalHeader journal;
    const auto* obj = get_member(root, "$", "journal", json::value_t::object, "an object");
    if (obj == nullptr) return journal;
    check_keys(*obj, "journal", {"title_id", "issn", "eissn", "titles"});
    journal.title_id = opt_string(*obj, "journal", "title_id");
    journal.issn = opt_string(*obj, "journal", "issn");
    journal.eissn = opt_string(*obj, "journal", "eissn");
    journal.titles = read_titles(*obj, "journal");
    return journal;
}

IssueHeader read_issue(const json& root) {
    IssueHeader issue;
    const auto* obj = get_member(root, "$", "issue", json::value_t::object, "an object");
    if (obj == nullptr) return issue;
    check_keys(*obj, "issue",
               {"volume", "number", "alt_number", "part", "date_uni", "title", "pages"});
    if (const auto it = obj->find("volume"); it != obj->end() && !it->is_null()) {
        if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
            schema_fail("issue.volume", "must be a non-negative integer");
        issue.volume = it->get<std::int64_t>();
    }
    issue.number = string_or_empty(*obj, "issue", "number");
    issue.alt_number = opt_string(*obj, "issue", "alt_number");
    issue.part = opt_string(*obj, "issue", "part");
    issue.date_uni = string_or_empty(*obj, "issue", "date_uni");
    issue.iss_title = opt_string(*obj, "issue", "title");
    issue.pages = string_or_empty(*obj, "issue", "pages");
    return issue;
}

AuthorRecord read_author(const json& item, const std::string& path) {
    if (!item.is_object()) schema_fail(path, "must be an object");
    check_keys(item, path, {"surname", "initials", "org_name", "email", "other_info"});
    AuthorRecord author;
    author.surname = string_or_empty(item, path, "surname");
    author.initials = string_or_empty(item, path, "initials");
    author.org_name = opt_string(item, path, "org_name");
    author.email = opt_string(item, path, "email");
    author.other_info = opt_string(item, path, "other_info");
    return author;
}

ArticleRecord read_article(const json& item, const std::string& path) {
    if (!item.is_object()) schema_fail(path, "must be an object");
    check_keys(item, path,
               {"type", "authors", "titles", "abstract", "codes", "keywords", "references",
                "files", "pages"});

    ArticleRecord article;
    if (auto type = opt_string(item, path, "type"); type && !type->empty())
        article.art_type = *type;

    if (const auto* authors = get_member(item, path, "authors", json::value_t::array, "an array"))
        for (std::size_t i = 0; i < authors->size(); ++i)
            article.authors.push_back(
                read_author((*authors)[i], path + ".authors[" + std::to_string(i) + "]"));

    article.titles = read_titles(item, path);
    article.abstract_text = opt_string(item, path, "abstract");

    if (const auto* codes = get_member(item, path, "codes", json::value_t::object, "an object"))
        for (const auto& [system, value] : codes->items()) {
            if (!value.is_string())
                schema_fail(path + ".codes." + system, "must be a string");
            article.codes[system] = trim(value.get<std::string>());
        }

    article.keywords = read_string_array(item, path, "keywords");
    article.references = read_string_array(item, path, "references");
    article.files = read_string_array(item, path, "files");
    for (std::size_t i = 0; i < article.files.size(); ++i)
        if (article.files[i].find('/') != std::string::npos
            || article.files[i].find('\\') != std::string::npos)
            schema_fail(path + ".files[" + std::to_string(i) + "]",
                        "file entries must be bare names, got \"" + article.files[i] + "\"");
    article.page_range = opt_string(item, path, "pages");
    return article;
}

std::vector<std::uint8_t> read_payload(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::MissingAttachment, "cannot read attachment " + path.string());
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

json titles_to_json(const std::vector<LocalizedText>& titles) {
    auto array = json::array();
    for (const auto& title : titles) array.push_back({{"lang", title.language}, {"value", title.value}});
    return array;
}

json article_to_json(const ArticleRecord& article) {
    json node;
    node["type"] = article.art_type;
    auto authors = json::array();
    for (const auto& author : article.authors) {
        json a;
        a["surname"] = author.surname;
        if (!author.initials.empty()) a["initials"] = author.initials;
        if (author.org_name) a["org_name"] = *author.org_name;
        if (author.email) a["email"] = *author.email;
        if (author.other_info) a["other_info"] = *author.other_info;
        authors.push_back(std::move(a));
    }
    node["authors"] = std::move(authors);
    node["titles"] = titles_to_json(article.titles);
    if (article.abstract_text) node["abstract"] = *article.abstract_text;
    if (!article.codes.empty()) node["codes"] = article.codes;
    if (!article.keywords.empty()) node["keywords"] = article.keywords;
    if (!article.references.empty()) node["references"] = article.references;
    if (!article.files.empty()) node["files"] = article.files;
    if (article.page_range) node["pages"] = *article.page_range;
    return node;
}

} // namespace

IssueBundle load_canonical(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& error) {
        // Map the byte offset to a line number for the report.
        const auto offset = std::min<std::size_t>(error.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + offset, '\n');
        throw Error(ErrorCode::SchemaError,
                    path.string() + ":" + std::to_string(line) + ": " + error.what());
    }
    if (!root.is_object()) schema_fail("$", "top level must be an object");
    check_keys(root, "$", {"journal", "issue", "articles", "attachments"});

    IssueBundle bundle;
    bundle.journal = read_journal(root);
    bundle.issue = read_issue(root);

    if (const auto* articles =
            get_member(root, "$", "articles", json::value_t::array, "an array"))
        for (std::size_t i = 0; i < articles->size(); ++i)
            bundle.articles.push_back(
                read_article((*articles)[i], "articles[" + std::to_string(i) + "]"));

    if (const auto* attachments =
            get_member(root, "$", "attachments", json::value_t::array, "an array")) {
        const auto base_dir = path.has_parent_path() ? path.parent_path()
                                                     : std::filesystem::path(".");
        for (std::size_t i = 0; i < attachments->size(); ++i) {
            const auto item_path = "attachments[" + std::to_string(i) + "]";
            const auto& item = (*attachments)[i];
            if (!item.is_object()) schema_fail(item_path, "must be an object");
            check_keys(item, item_path, {"name", "path"});
            const auto name = string_or_empty(item, item_path, "name");
            const auto rel = string_or_empty(item, item_path, "path");
            if (name.empty()) schema_fail(item_path + ".name", "must be non-empty");
            if (name.find('/') != std::string::npos || name.find('\\') != std::string::npos)
                schema_fail(item_path + ".name", "must be a bare file name");
            if (bundle.attachments.count(name) != 0)
                schema_fail(item_path + ".name", "duplicate attachment \"" + name + "\"");
            bundle.attachments[name] = read_payload(base_dir / (rel.empty() ? name : rel));
        }
    }
    return bundle;
}

void save_canonical(const IssueBundle& bundle, const std::filesystem::path& path) {
    json root;
    json journal;
    if (bundle.journal.title_id) journal["title_id"] = *bundle.journal.title_id;
    if (bundle.journal.issn) journal["issn"] = *bundle.journal.issn;
    if (bundle.journal.eissn) journal["eissn"] = *bundle.journal.eissn;
    journal["titles"] = titles_to_json(bundle.journal.titles);
    root["journal"] = std::move(journal);

    json issue;
    if (bundle.issue.volume) issue["volume"] = *bundle.issue.volume;
    issue["number"] = bundle.issue.number;
    if (bundle.issue.alt_number) issue["alt_number"] = *bundle.issue.alt_number;
    if (bundle.issue.part) issue["part"] = *bundle.issue.part;
    issue["date_uni"] = bundle.issue.date_uni;
    if (bundle.issue.iss_title) issue["title"] = *bundle.issue.iss_title;
    issue["pages"] = bundle.issue.pages;
    root["issue"] = std::move(issue);

    auto articles = json::array();
    for (const auto& article : bundle.articles) articles.push_back(article_to_json(article));
    root["articles"] = std::move(articles);

    auto attachments = json::array();
    for (const auto& [name, payload] : bundle.attachments) {
        (void)payload;
        attachments.push_back({{"name", name}, {"path", name}});
    }
    if (!attachments.empty()) root["attachments"] = std::move(attachments);

    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    for (const auto& [name, payload] : bundle.attachments) {
        std::ofstream out(dir / name, std::ios::binary);
        out.write(reinterpret_cast<const char*>(payload.data()),
                  static_cast<std::streamsize>(payload.size()));
        if (!out) throw Error(ErrorCode::IoError, "cannot write attachment " + name);
    }
    std::ofstream out(path, std::ios::binary);
    out << root.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

std::string articles_section_json(const std::vector<ArticleRecord>& articles) {
    json root;
    auto array = json::array();
    for (const auto& article : articles) array.push_back(article_to_json(article));
    root["articles"] = std::move(array);
    return root.dump(2) + "\n";
}

} // namespace rsciex::ingest
