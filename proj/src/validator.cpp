#include "tagunion/validator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tagunion {

namespace {

const std::set<std::string, std::less<>> kAnnotations = {
    "$comment", "$id", "$schema", "default", "definitions",
    "description", "examples", "title",
};

std::string pointer_token(std::string_view raw) {
    std::string out;
    for (char c : raw) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out.push_back(c);
    }
    return out;
}

struct Context {
    ValidationResult* result;
    std::set<std::string> warned; // schema_path + keyword, warn once
};

void warn_unknown(Context& ctx, const std::string& schema_path, const std::string& keyword) {
    std::string key = schema_path + "#" + keyword;
    if (ctx.warned.insert(key).second)
        ctx.result->warnings.push_back("unsupported keyword \"" + keyword +
                                       "\" ignored at schema path \"" + schema_path + "\"");
}

bool matches_type(const JsonValue& instance, const std::string& name) {
    switch (instance.kind) {
    case JsonKind::Null: return name == "null";
    case JsonKind::Boolean: return name == "boolean";
    case JsonKind::String: return name == "string";
    case JsonKind::Object: return name == "object";
    case JsonKind::Array: return name == "array";
    case JsonKind::Number:
        if (name == "number") return true;
        return name == "integer" && instance.number.is_integral();
    }
    return false;
}

bool is_known_type_name(const std::string& name) {
    static const std::set<std::string> names = {"null",   "boolean", "number", "integer",
                                                "string", "object",  "array"};
    return names.count(name) > 0;
}

// Applies `schema` to `instance`; errors append to `out`. Returns validity.
bool check(Context& ctx, const JsonValue& instance, const JsonValue& schema,
           const std::string& instance_path, const std::string& schema_path,
           std::vector<ValidationError>* out);

bool check_silently(Context& ctx, const JsonValue& instance, const JsonValue& schema,
                    const std::string& instance_path, const std::string& schema_path) {
    std::vector<ValidationError> scratch;
    return check(ctx, instance, schema, instance_path, schema_path, &scratch);
}

const JsonValue& require_object(const JsonValue& node, const std::string& schema_path,
                                const std::string& keyword) {
    if (node.kind != JsonKind::Object)
        throw SchemaError("keyword \"" + keyword + "\" at \"" + schema_path +
                          "\" must hold an object schema");
    return node;
}

const JsonValue& require_array(const JsonValue& node, const std::string& schema_path,
                               const std::string& keyword) {
    if (node.kind != JsonKind::Array)
        throw SchemaError("keyword \"" + keyword + "\" at \"" + schema_path +
                          "\" must hold an array");
    return node;
}

bool check(Context& ctx, const JsonValue& instance, const JsonValue& schema,
           const std::string& instance_path, const std::string& schema_path,
           std::vector<ValidationError>* out) {
    if (schema.kind != JsonKind::Object)
        throw SchemaError("schema at \"" + schema_path + "\" must be an object");

    bool valid = true;
    auto fail = [&](const std::string& keyword, std::string message) {
        valid = false;
        out->push_back(ValidationError{instance_path, keyword, std::move(message)});
    };

    for (const auto& member : schema.members) {
        const std::string& keyword = member.label;
        const JsonValue& arg = member.value;
        std::string at = schema_path + "/" + pointer_token(keyword);

        if (keyword == "type") {
            if (arg.kind != JsonKind::String || !is_known_type_name(arg.string_value))
                throw SchemaError("keyword \"type\" at \"" + schema_path +
                                  "\" must name a primitive type");
            if (!matches_type(instance, arg.string_value))
                fail("type", "expected " + arg.string_value + ", got " +
                                 std::string(kind_name(instance.kind)));
        } else if (keyword == "const") {
            if (!(instance == arg))
                fail("const", "instance differs from the required constant " +
                                  arg.compact_text());
        } else if (keyword == "enum") {
            require_array(arg, schema_path, "enum");
            bool found = false;
            for (const auto& option : arg.items)
                if (instance == option) {
                    found = true;
                    break;
                }
            if (!found) fail("enum", "instance matches no enum entry");
        } else if (keyword == "required") {
            require_array(arg, schema_path, "required");
            for (const auto& name : arg.items) {
                if (name.kind != JsonKind::String)
                    throw SchemaError("keyword \"required\" at \"" + schema_path +
                                      "\" must list strings");
                if (instance.kind == JsonKind::Object &&
                    instance.find(name.string_value) == nullptr)
                    fail("required",
                         "missing required property \"" + name.string_value + "\"");
            }
        } else if (keyword == "properties") {
            require_object(arg, schema_path, "properties");
            if (instance.kind == JsonKind::Object) {
                for (const auto& prop : arg.members) {
                    const JsonValue* value = instance.find(prop.label);
                    if (value == nullptr) continue;
                    if (!check(ctx, *value, prop.value,
                               instance_path + "/" + pointer_token(prop.label),
                               at + "/" + pointer_token(prop.label), out))
                        valid = false;
                }
            }
        } else if (keyword == "items") {
            require_object(arg, schema_path, "items");
            if (instance.kind == JsonKind::Array) {
                for (std::size_t k = 0; k < instance.items.size(); ++k) {
                    if (!check(ctx, instance.items[k], arg,
                               instance_path + "/" + std::to_string(k), at, out))
                        valid = false;
                }
            }
        } else if (keyword == "allOf") {
            require_array(arg, schema_path, "allOf");
            for (std::size_t k = 0; k < arg.items.size(); ++k)
                if (!check(ctx, instance, arg.items[k], instance_path,
                           at + "/" + std::to_string(k), out))
                    valid = false;
        } else if (keyword == "anyOf") {
            require_array(arg, schema_path, "anyOf");
            bool any = false;
            for (std::size_t k = 0; k < arg.items.size(); ++k)
                if (check_silently(ctx, instance, arg.items[k], instance_path,
                                   at + "/" + std::to_string(k))) {
                    any = true;
                    break;
                }
            if (!any) fail("anyOf", "instance matches no alternative");
        } else if (keyword == "if") {
            bool condition = check_silently(ctx, instance, arg, instance_path, at);
            const JsonValue* branch = schema.find(condition ? "then" : "else");
            if (branch != nullptr) {
                std::string branch_at =
                    schema_path + "/" + (condition ? "then" : "else");
                if (!check(ctx, instance, *branch, instance_path, branch_at, out))
                    valid = false;
            }
        } else if (keyword == "then" || keyword == "else") {
            // applied via "if"; on their own they assert nothing
            require_object(arg, schema_path, keyword);
        } else if (kAnnotations.count(keyword) == 0) {
            warn_unknown(ctx, schema_path, keyword);
        }
    }
    return valid;
}

} // namespace

ValidationResult validate(const JsonValue& instance, const SchemaNode& schema) {
    ValidationResult result;
    Context ctx{&result, {}};
    std::vector<ValidationError> errors;
    check(ctx, instance, schema, "", "", &errors);
    result.errors = std::move(errors);
    return result;
}

} // namespace tagunion
