#include "rsciex/xml.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace rsciex::xml {

namespace {

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
    throw Error(ErrorCode::XmlSyntaxError, what + " at byte " + std::to_string(offset));
}

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' || c == '-'
        || c == '.';
}

bool whitespace_only(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string trim_ws(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {
        if (in_.size() >= 3 && in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3; // UTF-8 BOM
    }

    Element run() {
        skip_prolog();
        if (eof()) fail(pos_, "document has no root element");
        Element root = parse_element();
        skip_misc();
        if (!eof()) fail(pos_, "content after document root");
        return root;
    }

private:
    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }
    bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        if (eof() || peek() != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_until(std::string_view terminator, const char* what) {
        const auto found = in_.find(terminator, pos_);
        if (found == std::string_view::npos) fail(pos_, std::string("unterminated ") + what);
        pos_ = found + terminator.size();
    }

    // Declaration, comments, PIs and a DOCTYPE line before the root.
    void skip_prolog() {
        skip_ws();
        if (starts_with("<?xml")) skip_until("?>", "XML declaration");
        skip_misc();
        if (starts_with("<!DOCTYPE")) {
            skip_until(">", "DOCTYPE");
            skip_misc();
        }
    }

    void skip_misc() {
        skip_ws();
        while (!eof()) {
            if (starts_with("<!--")) {
                pos_ += 4;
                skip_until("-->", "comment");
            } else if (starts_with("<?")) {
                pos_ += 2;
                skip_until("?>", "processing instruction");
            } else {
                break;
            }
            skip_ws();
        }
    }

    std::string parse_name() {
        const auto start = pos_;
        while (!eof() && name_char(peek())) ++pos_;
        if (pos_ == start) fail(start, "expected a name");
        return std::string(in_.substr(start, pos_ - start));
    }

    std::string parse_attribute_value() {
        if (eof() || (peek() != '"' && peek() != '\''))
            fail(pos_, "expected a quoted attribute value");
        const char quote = peek();
        ++pos_;
        std::string value;
        while (!eof() && peek() != quote) {
            if (peek() == '<') fail(pos_, "'<' inside attribute value");
            if (peek() == '&') value += parse_entity();
            else value += in_[pos_++];
        }
        expect(quote);
        return value;
    }

    std::string parse_entity() {
        const auto start = pos_;
        const auto end = in_.find(';', pos_);
        if (end == std::string_view::npos || end - pos_ > 12) fail(start, "unterminated entity");
        const auto body = in_.substr(pos_ + 1, end - pos_ - 1);
        pos_ = end + 1;
        if (body == "amp") return "&";
        if (body == "lt") return "<";
        if (body == "gt") return ">";
        if (body == "quot") return "\"";
        if (body == "apos") return "'";
        if (!body.empty() && body[0] == '#') {
            const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
            const auto digits = std::string(body.substr(hex ? 2 : 1));
            char* parse_end = nullptr;
            const auto cp = std::strtoul(digits.c_str(), &parse_end, hex ? 16 : 10);
            if (digits.empty() || *parse_end != '\0' || cp == 0 || cp > 0x10FFFF)
                fail(start, "bad character reference");
            std::string out;
            append_utf8(out, cp);
            return out;
        }
        fail(start, "unknown entity &" + std::string(body) + ";");
    }

    Element parse_element() {
        expect('<');
        Element element(parse_name());
        while (true) {
            skip_ws();
            if (eof()) fail(pos_, "unterminated start tag");
            if (peek() == '/') {
                ++pos_;
                expect('>');
                return element; // self-closing
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            auto key = parse_name();
            skip_ws();
            expect('=');
            skip_ws();
            auto value = parse_attribute_value();
            element.attributes.emplace_back(std::move(key), std::move(value));
        }
        parse_content(element);
        return element;
    }

    void parse_content(Element& element) {
        std::string text;
        while (true) {
            if (eof()) fail(pos_, "unterminated element <" + element.name + ">");
            if (peek() == '<') {
                if (starts_with("</")) {
                    pos_ += 2;
                    const auto closing = parse_name();
                    if (closing != element.name)
                        fail(pos_, "mismatched closing tag </" + closing + "> for <"
                                       + element.name + ">");
                    skip_ws();
                    expect('>');
                    break;
                }
                if (starts_with("<!--")) {
                    pos_ += 4;
                    skip_until("-->", "comment");
                    continue;
                }
                if (starts_with("<![CDATA[")) {
                    pos_ += 9;
                    const auto end = in_.find("]]>", pos_);
                    if (end == std::string_view::npos) fail(pos_, "unterminated CDATA");
                    text.append(in_.substr(pos_, end - pos_));
                    pos_ = end + 3;
                    continue;
                }
                if (starts_with("<?")) {
                    pos_ += 2;
                    skip_until("?>", "processing instruction");
                    continue;
                }
                element.children.push_back(parse_element());
                continue;
            }
            if (peek() == '&') text += parse_entity();
            else text += in_[pos_++];
        }

        if (element.children.empty()) element.text = std::move(text);
        else if (!whitespace_only(text)) element.text = trim_ws(text);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

void serialize_element(const Element& element, std::string& out, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    out += indent;
    out += '<';
    out += element.name;
    for (const auto& [key, value] : element.attributes) {
        out += ' ';
        out += key;
        out += "=\"";
        out += escape_text(value);
        out += '"';
    }

    if (element.children.empty() && element.text.empty()) {
        out += "/>\n";
        return;
    }
    if (element.children.empty()) {
        out += '>';
        out += escape_text(element.text);
        out += "</";
        out += element.name;
        out += ">\n";
        return;
    }

    out += ">\n";
    if (!element.text.empty()) {
        out += std::string(static_cast<std::size_t>(depth + 1) * 2, ' ');
        out += escape_text(element.text);
        out += '\n';
    }
    for (const auto& child : element.children) serialize_element(child, out, depth + 1);
    out += indent;
    out += "</";
    out += element.name;
    out += ">\n";
}

} // namespace

Element& Element::add_child(std::string tag) {
    children.emplace_back(std::move(tag));
    return children.back();
}

Element& Element::add_leaf(std::string tag, std::string content) {
    auto& child = add_child(std::move(tag));
    child.text = std::move(content);
    return child;
}

void Element::set_attribute(std::string key, std::string value) {
    for (auto& [existing, v] : attributes) {
        if (existing == key) {
            v = std::move(value);
            return;
        }
    }
    attributes.emplace_back(std::move(key), std::move(value));
}

const std::string* Element::attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes)
        if (k == key) return &v;
    return nullptr;
}

const Element* Element::first_child(std::string_view tag) const {
    for (const auto& child : children)
        if (child.name == tag) return &child;
    return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view tag) const {
    std::vector<const Element*> found;
    for (const auto& child : children)
        if (child.name == tag) found.push_back(&child);
    return found;
}

std::string escape_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string serialize(const Element& root) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    serialize_element(root, out, 0);
    return out;
}

Element parse(std::string_view bytes) {
    return Parser(bytes).run();
}

std::string_view local_name(std::string_view qualified) {
    const auto colon = qualified.rfind(':');
    return colon == std::string_view::npos ? qualified : qualified.substr(colon + 1);
}

} // namespace rsciex::xml
