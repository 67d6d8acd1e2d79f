#pragma once

#include "tagunion/emitter.hpp"
#include "tagunion/json_parse.hpp"

#include <string>

namespace tagunion {

/// Structural schema of the whole collection: types, nesting, required
/// properties, and `anyOf` alternatives where values at one position do not
/// merge. Every input document validates against the result. Throws
/// InputError on an empty collection.
SchemaNode extract_structural_schema(const DocumentCollection& coll);

/// Parses a schema produced by any other tool into a schema node. Unknown
/// keywords are preserved for re-serialization (the validator ignores them
/// with a warning). Throws ParseError on bad JSON and InputError when the
/// root is not an object.
SchemaNode load_external_schema_text(std::string_view text);
SchemaNode load_external_schema(const std::string& path);

} // namespace tagunion
