#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rsciex/metadata.hpp"

namespace testhelp {

// The demo issue used across suites: one journal, two articles, two PDFs.
inline rsciex::IssueBundle ladone_bundle() {
    rsciex::IssueBundle bundle;
    bundle.journal.issn = "0317-8471";
    bundle.journal.titles = {{"ENG", "Ladone Power Journal"}};

    bundle.issue.volume = 1;
    bundle.issue.number = "1";
    bundle.issue.alt_number = "1";
    bundle.issue.date_uni = "201712";
    bundle.issue.iss_title = "New best issue";
    bundle.issue.pages = "124";

    rsciex::ArticleRecord first;
    first.authors = {{"Petrenko", "O.I.", "Ladone University", "petrenko@example.org", {}}};
    first.titles = {{"UKR", "Моделювання потоків енергії"},
                    {"ENG", "Modeling of energy flows"}};
    first.abstract_text = "Energy flow modeling for regional grids.";
    first.codes = {{"UDC", "621.31"}};
    first.keywords = {"energy", "modeling"};
    first.references = {"Author A. Prior work. 2015.", "Author B. Earlier study. 2012."};
    first.files = {"1-1-4-1-10-20171225.pdf"};
    first.page_range = "1-12";

    rsciex::ArticleRecord second;
    second.authors = {{"Shevchenko", "M.", {}, {}, {}}, {"Bondar", "K.P.", {}, {}, {}}};
    second.titles = {{"ENG", "Power quality assessment"}};
    second.abstract_text = "Assessment of power quality indicators.";
    second.codes = {{"UDC", "621.317"}};
    second.keywords = {"power quality"};
    second.references = {"Author C. Survey. 2016."};
    second.files = {"2-1-8-1-10-20171225.pdf"};
    second.page_range = "13-24";

    bundle.articles = {first, second};
    bundle.attachments["1-1-4-1-10-20171225.pdf"] = {'%', 'P', 'D', 'F', '-', '1', '.', '4'};
    bundle.attachments["2-1-8-1-10-20171225.pdf"] = {'%', 'P', 'D', 'F', '-', '1', '.', '5'};
    return bundle;
}

// --- randomized bundles for round-trip properties ---------------------------

class BundleGenerator {
public:
    explicit BundleGenerator(std::uint32_t seed) : rng_(seed) {}

    rsciex::IssueBundle next() {
        rsciex::IssueBundle bundle;
        bundle.journal.issn = random_issn();
        if (flip()) bundle.journal.eissn = random_issn();
        if (flip()) bundle.journal.title_id = token(4, 10);
        bundle.journal.titles = localized_list();

        if (flip()) bundle.issue.volume = below(40);
        bundle.issue.number = std::to_string(1 + below(12));
        if (flip()) bundle.issue.alt_number = std::to_string(1 + below(200));
        if (flip()) bundle.issue.part = token(1, 3);
        bundle.issue.date_uni = random_date_uni();
        if (flip()) bundle.issue.iss_title = text(3, 30);
        bundle.issue.pages = std::to_string(1 + below(400));

        const auto articles = 1 + below(4);
        for (std::int64_t a = 0; a < articles; ++a) bundle.articles.push_back(article(bundle, a));
        return bundle;
    }

    std::string random_issn() {
        std::string digits;
        int sum = 0;
        for (int i = 0; i < 7; ++i) {
            const int d = static_cast<int>(below(10));
            digits += static_cast<char>('0' + d);
            sum += d * (8 - i);
        }
        const int check = (11 - sum % 11) % 11;
        digits += check == 10 ? 'X' : static_cast<char>('0' + check);
        return digits.substr(0, 4) + "-" + digits.substr(4);
    }

    std::string random_date_uni() {
        const auto month = 1 + below(12);
        return std::to_string(1900 + below(201)) + (month < 10 ? "0" : "")
            + std::to_string(month);
    }

    std::int64_t below(std::int64_t n) {
        return std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng_);
    }

private:
    bool flip() { return below(2) == 1; }

    std::string token(std::size_t min_len, std::size_t max_len) {
        static constexpr char kAlphabet[] =
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
        const auto len = min_len + static_cast<std::size_t>(below(
                                       static_cast<std::int64_t>(max_len - min_len + 1)));
        std::string out;
        for (std::size_t i = 0; i < len; ++i)
            out += kAlphabet[below(sizeof kAlphabet - 1)];
        return out;
    }

    // Free text with the characters that stress the serializer: markup
    // specials, quotes and multibyte letters.
    std::string text(std::size_t min_len, std::size_t max_len) {
        static const std::vector<std::string> kPieces = {
            "a", "b", "c", "x", "y", "z", "E", "Q", "1", "9", " ", "&", "<", ">", "\"", "'",
            "ї", "ж", "é", "–",
        };
        const auto len = min_len + static_cast<std::size_t>(below(
                                       static_cast<std::int64_t>(max_len - min_len + 1)));
        std::string out;
        for (std::size_t i = 0; i < len; ++i)
            out += kPieces[static_cast<std::size_t>(below(
                static_cast<std::int64_t>(kPieces.size())))];
        // Keep ingest-normal form: no surrounding whitespace.
        if (!out.empty() && out.front() == ' ') out.front() = 'p';
        if (!out.empty() && out.back() == ' ') out.back() = 'q';
        return out;
    }

    std::vector<rsciex::LocalizedText> localized_list() {
        static const std::vector<std::string> kLangs = {"ENG", "UKR", "RUS", "DEU"};
        std::vector<rsciex::LocalizedText> out;
        const auto count = 1 + below(static_cast<std::int64_t>(kLangs.size()) - 1);
        for (std::int64_t i = 0; i < count; ++i)
            out.push_back({kLangs[static_cast<std::size_t>(i)], text(1, 40)});
        return out;
    }

    rsciex::ArticleRecord article(rsciex::IssueBundle& bundle, std::int64_t index) {
        rsciex::ArticleRecord article;
        const auto authors = 1 + below(3);
        for (std::int64_t i = 0; i < authors; ++i) {
            rsciex::AuthorRecord author;
            author.surname = text(2, 20);
            if (flip()) author.initials = token(1, 4) + ".";
            if (flip()) author.org_name = text(3, 30);
            if (flip()) author.email = token(3, 8) + "@" + token(3, 8) + ".org";
            if (flip()) author.other_info = text(3, 30);
            article.authors.push_back(std::move(author));
        }
        article.titles = localized_list();
        if (flip()) article.abstract_text = text(10, 120);
        if (flip()) article.codes["UDC"] = token(3, 10);
        if (flip()) article.codes["DOI"] = "10." + token(4, 8);
        const auto keywords = below(4);
        for (std::int64_t i = 0; i < keywords; ++i) article.keywords.push_back(text(2, 15));
        const auto references = below(4);
        for (std::int64_t i = 0; i < references; ++i)
            article.references.push_back(text(10, 60));
        const auto files = below(3);
        for (std::int64_t i = 0; i < files; ++i) {
            const auto name = std::to_string(index) + "-" + std::to_string(i) + "-"
                + token(4, 8) + ".pdf";
            article.files.push_back(name);
            std::vector<std::uint8_t> payload;
            const auto size = 1 + below(256);
            for (std::int64_t b = 0; b < size; ++b)
                payload.push_back(static_cast<std::uint8_t>(below(256)));
            bundle.attachments[name] = std::move(payload);
        }
        if (flip()) article.page_range = std::to_string(1 + below(100));
        return article;
    }

    std::mt19937 rng_;
};

} // namespace testhelp
