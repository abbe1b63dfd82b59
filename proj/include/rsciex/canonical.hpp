#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rsciex/errors.hpp"
#include "rsciex/metadata.hpp"

namespace rsciex::ingest {

/// Reads the canonical issue file (UTF-8 JSON, schema in docs/canonical.md)
/// and returns the bundle with all attachment payloads loaded. Relative
/// attachment paths resolve against the file's directory.
///
/// Scalar fields the file leaves out load as empty and are reported by
/// validate_bundle, not here. Structural problems are this function's:
/// throws IO_ERROR (unreadable file), SCHEMA_ERROR (malformed JSON with
/// line context, unknown keys, wrong types, path separators in file names)
/// and MISSING_ATTACHMENT.
IssueBundle load_canonical(const std::filesystem::path& path);

/// Inverse of load_canonical: writes the JSON document and every attachment
/// payload (as sibling files named after their keys). load_canonical of the
/// result reproduces the bundle byte-for-byte.
void save_canonical(const IssueBundle& bundle, const std::filesystem::path& path);

/// The `articles` section alone, serialized in canonical-file form. This is
/// what `harvest` writes: a skeleton to complete with journal and issue
/// headers by hand.
std::string articles_section_json(const std::vector<ArticleRecord>& articles);

} // namespace rsciex::ingest
