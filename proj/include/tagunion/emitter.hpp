#pragma once

#include "tagunion/heuristics.hpp"
#include "tagunion/json_value.hpp"

#include <vector>

namespace tagunion {

/// Schema nodes are ordered JSON values over the emitted keyword subset
/// (type, properties, items, required, const, enum, if/then/else, allOf,
/// anyOf); serialization via the canonical pretty-printer.
using SchemaNode = JsonValue;

enum class ConstraintEncoding : std::uint8_t { IfThenElse, AnyOf };

/// Conditional chain: `if {tag const c1, required tag} then {consequents}
/// else <next case>`, with no trailing else so unexpected tag values stay
/// unconstrained.
SchemaNode emit_if_then_else(const TaggedUnionGroup& group);

/// Disjunctive form: one object branch per case, tag pinned with `const`.
/// Unlike the conditional chain this rejects unseen tag values.
SchemaNode emit_anyof(const TaggedUnionGroup& group);

/// Wraps every group so its constraint applies at its path (property labels
/// become nested `properties`, array traversal becomes `items`), combining
/// multiple wrapped constraints under one `allOf`. No groups yield the empty
/// (accept-all) schema.
SchemaNode nest_groups(const std::vector<TaggedUnionGroup>& groups,
                       ConstraintEncoding encoding);

/// {"allOf": [S, T]}; no merging or rewriting.
SchemaNode compose(SchemaNode s, SchemaNode t);

/// Share of the constraint subschema in the composite, by canonical
/// pretty-printed lines.
double constraint_share(int constraint_loc, int composite_loc);

} // namespace tagunion
