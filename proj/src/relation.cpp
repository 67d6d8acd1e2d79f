#include "tagunion/relation.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>

namespace tagunion {

AttributeId AttributeId::value(std::string label) {
    AttributeId a;
    a.role = Role::Value;
    a.label = std::move(label);
    return a;
}

AttributeId AttributeId::type(std::string label, int depth) {
    AttributeId a;
    a.role = Role::Type;
    a.label = std::move(label);
    a.depth = depth;
    return a;
}

std::string AttributeId::text() const {
    switch (role) {
    case Role::ObjectId: return "O.id";
    case Role::Value: return label + ".value";
    case Role::Type: return label + ".type@" + std::to_string(depth);
    }
    return {};
}

const Column* ObjectRelation::find(const AttributeId& attr) const {
    for (const auto& col : columns)
        if (col.attr == attr) return &col;
    return nullptr;
}

std::vector<AttributeId> ObjectRelation::attributes() const {
    std::vector<AttributeId> out;
    out.reserve(columns.size());
    for (const auto& col : columns)
        out.push_back(col.attr);
    return out;
}

std::string ObjectRelation::cell_text(std::size_t row, const Column& col) const {
    std::int32_t idx = col.cells[row];
    return idx == Column::kMissing ? std::string() : col.values[idx].key;
}

namespace {

void append_csv_field(std::string& out, const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        out += field;
        return;
    }
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
}

// Appends a cell to a column, interning the value by its canonical key.
struct ColumnBuilder {
    Column col;
    std::unordered_map<std::string, std::int32_t> index;

    explicit ColumnBuilder(AttributeId attr) { col.attr = std::move(attr); }

    void add_missing() { col.cells.push_back(Column::kMissing); }

    void add(CellValue&& value) {
        auto [it, inserted] =
            index.try_emplace(value.key, static_cast<std::int32_t>(col.values.size()));
        if (inserted) col.values.push_back(std::move(value));
        col.cells.push_back(it->second);
    }

    void add_basic(JsonValue v) {
        CellValue cell;
        cell.key = v.compact_text();
        cell.is_schema = false;
        cell.basic = std::move(v);
        add(std::move(cell));
    }

    void add_schema(Subschema s) {
        CellValue cell;
        cell.key = s.canonical_text();
        cell.is_schema = true;
        cell.schema = std::move(s);
        add(std::move(cell));
    }
};

} // namespace

std::string ObjectRelation::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c > 0) out.push_back(',');
        append_csv_field(out, columns[c].attr.text());
    }
    out.push_back('\n');
    for (std::size_t row = 0; row < row_count; ++row) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c > 0) out.push_back(',');
            append_csv_field(out, cell_text(row, columns[c]));
        }
        out.push_back('\n');
    }
    return out;
}

ObjectRelation encode_relation(const DocumentCollection& coll, const PathKey& p,
                               int max_depth) {
    ObjectRelation rel;
    rel.path = p;

    auto objects = objects_at_path(coll, p);
    rel.row_count = objects.size();
    rel.object_ids.reserve(objects.size());
    for (const auto& [id, obj] : objects)
        rel.object_ids.push_back(id);

    // Label inventory across all pooled objects.
    std::set<std::string> labels;
    std::set<std::string> basic_labels;
    for (const auto& [id, obj] : objects) {
        for (const auto& m : obj->members) {
            labels.insert(m.label);
            if (m.value.is_basic()) basic_labels.insert(m.label);
        }
    }

    bool single_document = true;
    for (const auto& id : rel.object_ids)
        if (id.document != rel.object_ids.front().document) {
            single_document = false;
            break;
        }

    ColumnBuilder id_col(AttributeId::object_id());
    for (const auto& id : rel.object_ids) {
        if (single_document) {
            id_col.add_basic(JsonValue::make_number(static_cast<std::int64_t>(id.line)));
        } else {
            id_col.add_basic(JsonValue::make_string(
                std::to_string(id.document) + ":" + std::to_string(id.line)));
        }
    }

    struct LabelColumns {
        std::string label;
        std::optional<ColumnBuilder> value;       // only when the label ever has a basic value
        std::vector<ColumnBuilder> types;         // depth 1..max_depth
    };
    std::vector<LabelColumns> per_label;
    for (const auto& label : labels) {
        LabelColumns lc;
        lc.label = label;
        if (basic_labels.count(label))
            lc.value.emplace(AttributeId::value(label));
        lc.types.reserve(static_cast<std::size_t>(max_depth));
        for (int d = 1; d <= max_depth; ++d)
            lc.types.emplace_back(AttributeId::type(label, d));
        per_label.push_back(std::move(lc));
    }

    std::unordered_map<std::string_view, const JsonValue*> row_members;
    for (const auto& [id, obj] : objects) {
        row_members.clear();
        for (const auto& m : obj->members)
            row_members.emplace(m.label, &m.value);

        for (auto& lc : per_label) {
            auto it = row_members.find(lc.label);
            const JsonValue* member = it == row_members.end() ? nullptr : it->second;
            if (member == nullptr) {
                if (lc.value) lc.value->add_missing();
                for (auto& tb : lc.types) tb.add_missing();
                continue;
            }
            if (lc.value) {
                if (member->is_basic())
                    lc.value->add_basic(*member);
                else
                    lc.value->add_missing();
            }
            // Deepest view first, then successively coarser truncations.
            Subschema view = derive_subschema(*member, max_depth);
            for (int d = max_depth; d >= 1; --d) {
                if (d < max_depth) view = truncate(view, d);
                lc.types[static_cast<std::size_t>(d - 1)].add_schema(view);
            }
        }
    }

    rel.columns.reserve(1 + per_label.size() * (static_cast<std::size_t>(max_depth) + 1));
    rel.columns.push_back(std::move(id_col.col));
    for (auto& lc : per_label) {
        if (lc.value) rel.columns.push_back(std::move(lc.value->col));
        for (auto& tb : lc.types)
            rel.columns.push_back(std::move(tb.col));
    }

    assert(rel.columns.front().values.size() == rel.row_count &&
           "object identifiers must be unique");
    return rel;
}

} // namespace tagunion
