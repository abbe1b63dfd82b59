#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsciex/errors.hpp"

namespace rsciex::xml {

/// Ordered element tree. Attribute order is preserved and significant for
/// serialization, which keeps output bytes a pure function of the tree.
///
/// Character data is leaf-oriented: `text` holds the content of elements
/// without element children. For mixed content the parser trims the gathered
/// text; the serializer emits it as one indented line ahead of the children.
struct Element {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Element> children;
    std::string text;

    Element() = default;
    explicit Element(std::string tag) : name(std::move(tag)) {}

    Element& add_child(std::string tag);
    Element& add_leaf(std::string tag, std::string content);
    void set_attribute(std::string key, std::string value);

    const std::string* attribute(std::string_view key) const;
    const Element* first_child(std::string_view tag) const;
    std::vector<const Element*> children_named(std::string_view tag) const;

    bool operator==(const Element&) const = default;
};

/// Serializes with the fixed contract: UTF-8, `<?xml version="1.0"
/// encoding="UTF-8"?>` declaration, 2-space indent, LF endings, entity
/// escaping for & < > " '. Identical trees produce identical bytes.
std::string serialize(const Element& root);

/// Parses one document and returns its root element. Comments, processing
/// instructions and CDATA are handled; DTDs are not. Throws XML_SYNTAX_ERROR
/// with the byte offset on malformed input.
Element parse(std::string_view bytes);

/// "dc:title" -> "title"; names without a prefix pass through.
std::string_view local_name(std::string_view qualified);

std::string escape_text(std::string_view raw);

} // namespace rsciex::xml
