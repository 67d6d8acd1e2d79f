#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tagunion {

enum class JsonKind : std::uint8_t { Null, Boolean, Number, String, Object, Array };

std::string_view kind_name(JsonKind kind);

/// JSON number with the representation chosen at parse time. Two numbers
/// compare equal iff their mathematical values are equal (1 == 1.0), and
/// canonical_text() is consistent with that equality.
struct JsonNumber {
    enum class Rep : std::uint8_t { Int, Uint, Real };

    Rep rep = Rep::Int;
    union {
        std::int64_t i;
        std::uint64_t u;
        double d;
    };

    JsonNumber() : i(0) {}
    static JsonNumber of(std::int64_t v);
    static JsonNumber of(std::uint64_t v);
    static JsonNumber of(double v);

    double as_double() const;
    bool is_integral() const;

    /// Shortest text form that reparses to the same mathematical value.
    /// Integral values render in decimal, everything else via to_chars.
    std::string canonical_text() const;

    bool operator==(const JsonNumber& other) const;
    bool operator!=(const JsonNumber& other) const { return !(*this == other); }
};

/// Parsed JSON value. Objects keep members in source order with pairwise
/// distinct labels; `line` is the 1-based line where the value starts in the
/// canonical pretty-print of its document (see json_pretty.hpp).
struct JsonValue {
    struct Member;

    JsonKind kind = JsonKind::Null;
    bool boolean = false;
    JsonNumber number;
    std::string string_value;
    std::vector<Member> members;
    std::vector<JsonValue> items;

    std::int32_t doc_index = 0;
    std::int32_t line = 0;

    static JsonValue make_null();
    static JsonValue make_bool(bool b);
    static JsonValue make_number(std::int64_t v);
    static JsonValue make_number(double v);
    static JsonValue make_number(JsonNumber n);
    static JsonValue make_string(std::string s);
    static JsonValue make_object();
    static JsonValue make_array();

    bool is_basic() const { return kind != JsonKind::Object && kind != JsonKind::Array; }
    bool is_object() const { return kind == JsonKind::Object; }
    bool is_array() const { return kind == JsonKind::Array; }

    /// Object member lookup; nullptr when absent or not an object.
    const JsonValue* find(std::string_view label) const;
    JsonValue* find(std::string_view label);

    /// Appends a member (builder use; does not check for duplicates).
    JsonValue& set(std::string label, JsonValue value);
    /// Appends an array item (builder use).
    JsonValue& push_back(JsonValue value);

    /// Deep equality. Object comparison is label-based and order-insensitive,
    /// numbers compare mathematically; matches Draft-07 instance equality.
    bool operator==(const JsonValue& other) const;
    bool operator!=(const JsonValue& other) const { return !(*this == other); }

    /// Single-line JSON text with canonical number rendering and members in
    /// insertion order.
    std::string compact_text() const;
};

struct JsonValue::Member {
    std::string label;
    JsonValue value;
};

/// Appends the JSON string escape of `s` (quotes included) to `out`.
void append_json_string(std::string& out, std::string_view s);

} // namespace tagunion
