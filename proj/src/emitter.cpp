#include "tagunion/emitter.hpp"

#include <algorithm>

namespace tagunion {

namespace {

SchemaNode tag_condition(const std::string& tag_label, const JsonValue& constant) {
    SchemaNode tag_schema = JsonValue::make_object();
    tag_schema.set("const", constant);

    SchemaNode props = JsonValue::make_object();
    props.set(tag_label, std::move(tag_schema));

    SchemaNode condition = JsonValue::make_object();
    condition.set("properties", std::move(props));
    condition.set("required",
                  JsonValue::make_array().push_back(JsonValue::make_string(tag_label)));
    return condition;
}

SchemaNode consequent_properties(const TaggedUnionCase& c) {
    SchemaNode props = JsonValue::make_object();
    for (const auto& [label, schema] : c.consequents)
        props.set(label, schema.to_schema_node());
    SchemaNode then = JsonValue::make_object();
    then.set("properties", std::move(props));
    return then;
}

} // namespace

SchemaNode emit_if_then_else(const TaggedUnionGroup& group) {
    SchemaNode chain;
    for (auto it = group.cases.rbegin(); it != group.cases.rend(); ++it) {
        SchemaNode node = JsonValue::make_object();
        node.set("if", tag_condition(group.tag_label, it->constant));
        node.set("then", consequent_properties(*it));
        if (chain.kind == JsonKind::Object)
            node.set("else", std::move(chain));
        chain = std::move(node);
    }
    return chain.kind == JsonKind::Object ? chain : JsonValue::make_object();
}

SchemaNode emit_anyof(const TaggedUnionGroup& group) {
    SchemaNode alternatives = JsonValue::make_array();
    for (const auto& c : group.cases) {
        SchemaNode tag_schema = JsonValue::make_object();
        tag_schema.set("const", c.constant);

        SchemaNode props = JsonValue::make_object();
        props.set(group.tag_label, std::move(tag_schema));
        for (const auto& [label, schema] : c.consequents)
            props.set(label, schema.to_schema_node());

        SchemaNode branch = JsonValue::make_object();
        branch.set("type", JsonValue::make_string("object"));
        branch.set("properties", std::move(props));
        alternatives.push_back(std::move(branch));
    }
    SchemaNode node = JsonValue::make_object();
    node.set("anyOf", std::move(alternatives));
    return node;
}

namespace {

SchemaNode wrap_at_path(const PathKey& path, SchemaNode constraint) {
    for (auto it = path.segments.rbegin(); it != path.segments.rend(); ++it) {
        SchemaNode wrapper = JsonValue::make_object();
        if (it->kind == PathKey::Segment::Kind::Wildcard) {
            wrapper.set("items", std::move(constraint));
        } else {
            SchemaNode props = JsonValue::make_object();
            props.set(it->label, std::move(constraint));
            wrapper.set("properties", std::move(props));
        }
        constraint = std::move(wrapper);
    }
    return constraint;
}

} // namespace

SchemaNode nest_groups(const std::vector<TaggedUnionGroup>& groups,
                       ConstraintEncoding encoding) {
    std::vector<SchemaNode> wrapped;
    wrapped.reserve(groups.size());
    for (const auto& group : groups) {
        SchemaNode constraint = encoding == ConstraintEncoding::IfThenElse
                                    ? emit_if_then_else(group)
                                    : emit_anyof(group);
        wrapped.push_back(wrap_at_path(group.path, std::move(constraint)));
    }

    if (wrapped.empty()) return JsonValue::make_object();
    if (wrapped.size() == 1) return std::move(wrapped.front());

    SchemaNode all = JsonValue::make_array();
    for (auto& node : wrapped)
        all.push_back(std::move(node));
    SchemaNode root = JsonValue::make_object();
    root.set("allOf", std::move(all));
    return root;
}

SchemaNode compose(SchemaNode s, SchemaNode t) {
    SchemaNode both = JsonValue::make_array();
    both.push_back(std::move(s));
    both.push_back(std::move(t));
    SchemaNode node = JsonValue::make_object();
    node.set("allOf", std::move(both));
    return node;
}

double constraint_share(int constraint_loc, int composite_loc) {
    if (composite_loc <= 0) return 0.0;
    return static_cast<double>(constraint_loc) / static_cast<double>(composite_loc);
}

} // namespace tagunion
