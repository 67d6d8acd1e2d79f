#include "tagunion/subschema.hpp"

#include <algorithm>

namespace tagunion {

Subschema Subschema::of_basic(JsonKind k) {
    Subschema s;
    s.kind = Kind::Basic;
    s.basic = k;
    return s;
}

Subschema Subschema::any_array() {
    Subschema s;
    s.kind = Kind::Array;
    return s;
}

Subschema Subschema::array_of(Subschema item) {
    Subschema s;
    s.kind = Kind::Array;
    s.item.push_back(std::move(item));
    return s;
}

Subschema Subschema::opaque_object() {
    Subschema s;
    s.kind = Kind::Object;
    s.members_opaque = true;
    return s;
}

Subschema Subschema::object_of(std::vector<std::pair<std::string, Subschema>> members) {
    Subschema s;
    s.kind = Kind::Object;
    s.members = std::move(members);
    std::sort(s.members.begin(), s.members.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
}

bool Subschema::operator==(const Subschema& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
    case Kind::Basic:
        return basic == other.basic;
    case Kind::Array:
        return item == other.item;
    case Kind::Object:
        return members_opaque == other.members_opaque && members == other.members;
    }
    return false;
}

namespace {

void write_text(std::string& out, const Subschema& s) {
    switch (s.kind) {
    case Subschema::Kind::Basic:
        out += kind_name(s.basic);
        break;
    case Subschema::Kind::Array:
        out += "array";
        if (!s.item.empty()) {
            out.push_back('(');
            write_text(out, s.item.front());
            out.push_back(')');
        }
        break;
    case Subschema::Kind::Object:
        out += "object";
        if (!s.members_opaque) {
            out.push_back('{');
            bool first = true;
            for (const auto& [label, sub] : s.members) {
                if (!first) out.push_back(',');
                first = false;
                append_json_string(out, label);
                out.push_back(':');
                write_text(out, sub);
            }
            out.push_back('}');
        }
        break;
    }
}

} // namespace

std::string Subschema::canonical_text() const {
    std::string out;
    write_text(out, *this);
    return out;
}

JsonValue Subschema::to_schema_node() const {
    JsonValue node = JsonValue::make_object();
    switch (kind) {
    case Kind::Basic:
        node.set("type", JsonValue::make_string(std::string(kind_name(basic))));
        break;
    case Kind::Array:
        node.set("type", JsonValue::make_string("array"));
        if (!item.empty())
            node.set("items", item.front().to_schema_node());
        break;
    case Kind::Object:
        node.set("type", JsonValue::make_string("object"));
        if (!members_opaque && !members.empty()) {
            JsonValue props = JsonValue::make_object();
            for (const auto& [label, sub] : members)
                props.set(label, sub.to_schema_node());
            node.set("properties", std::move(props));
        }
        break;
    }
    return node;
}

namespace {

// Full-detail descriptor; depth bounds are applied by truncation so that the
// per-depth views agree with each other.
Subschema derive_full(const JsonValue& v) {
    switch (v.kind) {
    case JsonKind::Object: {
        std::vector<std::pair<std::string, Subschema>> members;
        members.reserve(v.members.size());
        for (const auto& m : v.members)
            members.emplace_back(m.label, derive_full(m.value));
        return Subschema::object_of(std::move(members));
    }
    case JsonKind::Array: {
        if (v.items.empty()) return Subschema::any_array();
        Subschema first = derive_full(v.items.front());
        for (std::size_t k = 1; k < v.items.size(); ++k) {
            if (!(derive_full(v.items[k]) == first))
                return Subschema::any_array();
        }
        return Subschema::array_of(std::move(first));
    }
    default:
        return Subschema::of_basic(v.kind);
    }
}

} // namespace

Subschema truncate(const Subschema& s, int depth) {
    switch (s.kind) {
    case Subschema::Kind::Basic:
        return s;
    case Subschema::Kind::Array:
        if (depth <= 1 || s.item.empty()) return Subschema::any_array();
        return Subschema::array_of(truncate(s.item.front(), depth - 1));
    case Subschema::Kind::Object: {
        if (depth <= 1 || s.members_opaque) return Subschema::opaque_object();
        std::vector<std::pair<std::string, Subschema>> members;
        members.reserve(s.members.size());
        for (const auto& [label, sub] : s.members)
            members.emplace_back(label, truncate(sub, depth - 1));
        return Subschema::object_of(std::move(members));
    }
    }
    return s;
}

Subschema derive_subschema(const JsonValue& v, int depth) {
    return truncate(derive_full(v), depth);
}

} // namespace tagunion
