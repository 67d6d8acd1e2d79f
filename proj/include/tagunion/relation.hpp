#pragma once

#include "tagunion/json_parse.hpp"
#include "tagunion/path.hpp"
#include "tagunion/subschema.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tagunion {

/// Column identity within a relation: the object identifier, the basic value
/// of a property, or the structural descriptor of a property at one depth.
struct AttributeId {
    enum class Role : std::uint8_t { ObjectId, Value, Type };

    Role role = Role::ObjectId;
    std::string label; // Value/Type only
    int depth = 0;     // Type only, 1..k

    static AttributeId object_id() { return {}; }
    static AttributeId value(std::string label);
    static AttributeId type(std::string label, int depth);

    /// "O.id", "type.value", "coordinates.type@3"
    std::string text() const;

    bool operator==(const AttributeId& other) const {
        return role == other.role && label == other.label && depth == other.depth;
    }
};

/// One distinct cell value within a column.
struct CellValue {
    std::string key;   ///< canonical text; compact JSON for basics, descriptor text for schemas
    bool is_schema = false;
    JsonValue basic;   ///< when !is_schema
    Subschema schema;  ///< when is_schema
};

/// Column-major storage: per row the index of its distinct value, -1 for a
/// missing cell.
struct Column {
    AttributeId attr;
    std::vector<std::int32_t> cells;  ///< row -> value index or kMissing
    std::vector<CellValue> values;    ///< distinct values in first-seen order

    static constexpr std::int32_t kMissing = -1;

    std::size_t distinct_count() const { return values.size(); }
};

/// Relation over all objects reachable by one path: one row per object, the
/// O.id column first, then per label (sorted) the value column where the
/// property ever occurs with a basic value, and the descriptor columns for
/// depths 1..k. Immutable after construction.
struct ObjectRelation {
    PathKey path;
    std::size_t row_count = 0;
    std::vector<ObjectId> object_ids;
    std::vector<Column> columns;

    const Column* find(const AttributeId& attr) const;

    std::vector<AttributeId> attributes() const;

    /// Canonical cell text; empty string for missing cells.
    std::string cell_text(std::size_t row, const Column& col) const;

    /// Debug export: header of attribute names, one line per row, RFC 4180
    /// quoting.
    std::string to_csv() const;
};

/// Builds the relation for path `p` with descriptor depths 1..max_depth.
ObjectRelation encode_relation(const DocumentCollection& coll, const PathKey& p,
                               int max_depth);

} // namespace tagunion
