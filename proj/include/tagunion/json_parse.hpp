#pragma once

#include "tagunion/errors.hpp"
#include "tagunion/json_value.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tagunion {

/// How a byte stream maps to documents.
enum class InputMode {
    SingleDocument,     ///< the whole input is one JSON value
    NewlineDelimited,   ///< one JSON value per non-blank line
    ArrayOfDocuments,   ///< a top-level array whose elements are the documents
};

/// Ordered set of parsed documents, pooled under an implicit virtual root so
/// that paths and relations range over the whole collection.
struct DocumentCollection {
    std::vector<JsonValue> documents;

    bool empty() const { return documents.empty(); }
    std::size_t size() const { return documents.size(); }
};

/// Parses one input in the given mode. Document indices start at
/// `first_doc_index`; every node gets its document index and canonical
/// pretty-print line assigned. Throws ParseError on syntax errors (with byte
/// offset and document index) and on duplicate labels within one object.
DocumentCollection parse_documents(std::string_view text, InputMode mode,
                                   std::size_t first_doc_index = 0);

/// Reads and parses each file with `mode`; documents are concatenated in file
/// order. Throws InputError when a file cannot be read.
DocumentCollection parse_files(const std::vector<std::string>& paths, InputMode mode);

std::string read_file(const std::string& path);

} // namespace tagunion
