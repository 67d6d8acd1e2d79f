#include "tagunion/baseline.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace tagunion {

namespace {

// Accumulated structure of the values merged at one position. Each shape
// covers a single top-level kind; positions where incompatible values meet
// hold several shapes and render as anyOf alternatives. Incompatibility
// inside an object bubbles up to the object itself, so unions appear at the
// level of whole object variants rather than deep inside a merged member
// (matching how coexisting record layouts are usually reported).
struct Shape {
    JsonKind kind = JsonKind::Null;

    // Object: member shapes, occurrence counts, and how many objects merged.
    std::map<std::string, Shape> object_members;
    std::map<std::string, std::size_t> member_counts;
    std::size_t object_count = 0;

    // Array: alternatives for the item position. A whole array only merges
    // into this shape when every item fits one of the current alternatives
    // (or none exist yet); see `compatible`.
    std::vector<Shape> item_shapes;
};

Shape shape_of(const JsonValue& v);
void merge_into(Shape& shape, const JsonValue& v);

bool compatible(const Shape& shape, const JsonValue& v) {
    if (shape.kind != v.kind) return false;
    switch (v.kind) {
    case JsonKind::Object:
        for (const auto& m : v.members) {
            auto it = shape.object_members.find(m.label);
            if (it != shape.object_members.end() && !compatible(it->second, m.value))
                return false;
        }
        return true;
    case JsonKind::Array:
        if (shape.item_shapes.empty()) return true;
        for (const auto& item : v.items) {
            bool fits = false;
            for (const auto& alt : shape.item_shapes)
                if (compatible(alt, item)) {
                    fits = true;
                    break;
                }
            if (!fits) return false;
        }
        return true;
    default:
        return true;
    }
}

void merge_item(std::vector<Shape>& alternatives, const JsonValue& item) {
    for (auto& alt : alternatives)
        if (compatible(alt, item)) {
            merge_into(alt, item);
            return;
        }
    alternatives.push_back(shape_of(item));
}

void merge_into(Shape& shape, const JsonValue& v) {
    switch (v.kind) {
    case JsonKind::Object: {
        ++shape.object_count;
        for (const auto& m : v.members) {
            auto it = shape.object_members.find(m.label);
            if (it == shape.object_members.end()) {
                shape.object_members.emplace(m.label, shape_of(m.value));
                shape.member_counts[m.label] = 1;
            } else {
                merge_into(it->second, m.value);
                ++shape.member_counts[m.label];
            }
        }
        break;
    }
    case JsonKind::Array: {
        for (const auto& item : v.items)
            merge_item(shape.item_shapes, item);
        break;
    }
    default:
        break;
    }
}

Shape shape_of(const JsonValue& v) {
    Shape shape;
    shape.kind = v.kind;
    merge_into(shape, v);
    return shape;
}

SchemaNode shape_to_schema(const Shape& shape) {
    SchemaNode node = JsonValue::make_object();
    switch (shape.kind) {
    case JsonKind::Object: {
        node.set("type", JsonValue::make_string("object"));
        if (!shape.object_members.empty()) {
            SchemaNode props = JsonValue::make_object();
            for (const auto& [label, member] : shape.object_members)
                props.set(label, shape_to_schema(member));
            node.set("properties", std::move(props));
        }
        SchemaNode required = JsonValue::make_array();
        for (const auto& [label, count] : shape.member_counts)
            if (count == shape.object_count)
                required.push_back(JsonValue::make_string(label));
        if (!required.items.empty())
            node.set("required", std::move(required));
        break;
    }
    case JsonKind::Array: {
        node.set("type", JsonValue::make_string("array"));
        if (shape.item_shapes.size() == 1) {
            node.set("items", shape_to_schema(shape.item_shapes.front()));
        } else if (shape.item_shapes.size() > 1) {
            SchemaNode alts = JsonValue::make_array();
            for (const auto& alt : shape.item_shapes)
                alts.push_back(shape_to_schema(alt));
            SchemaNode any = JsonValue::make_object();
            any.set("anyOf", std::move(alts));
            node.set("items", std::move(any));
        }
        break;
    }
    default:
        node.set("type", JsonValue::make_string(std::string(kind_name(shape.kind))));
        break;
    }
    return node;
}

} // namespace

SchemaNode extract_structural_schema(const DocumentCollection& coll) {
    if (coll.empty())
        throw InputError("cannot extract a schema from an empty document collection");

    std::vector<Shape> roots;
    for (const auto& doc : coll.documents)
        merge_item(roots, doc);

    if (roots.size() == 1) return shape_to_schema(roots.front());

    SchemaNode alts = JsonValue::make_array();
    for (const auto& alt : roots)
        alts.push_back(shape_to_schema(alt));
    SchemaNode node = JsonValue::make_object();
    node.set("anyOf", std::move(alts));
    return node;
}

SchemaNode load_external_schema_text(std::string_view text) {
    DocumentCollection parsed = parse_documents(text, InputMode::SingleDocument);
    JsonValue& root = parsed.documents.front();
    if (root.kind != JsonKind::Object)
        throw InputError("external schema root must be an object");
    return std::move(root);
}

SchemaNode load_external_schema(const std::string& path) {
    return load_external_schema_text(read_file(path));
}

} // namespace tagunion
