#include "tagunion/json_value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace tagunion {

std::string_view kind_name(JsonKind kind) {
    switch (kind) {
    case JsonKind::Null: return "null";
    case JsonKind::Boolean: return "boolean";
    case JsonKind::Number: return "number";
    case JsonKind::String: return "string";
    case JsonKind::Object: return "object";
    case JsonKind::Array: return "array";
    }
    return "?";
}

JsonNumber JsonNumber::of(std::int64_t v) {
    JsonNumber n;
    n.rep = Rep::Int;
    n.i = v;
    return n;
}

JsonNumber JsonNumber::of(std::uint64_t v) {
    JsonNumber n;
    n.rep = Rep::Uint;
    n.u = v;
    return n;
}

JsonNumber JsonNumber::of(double v) {
    JsonNumber n;
    n.rep = Rep::Real;
    n.d = v;
    return n;
}

double JsonNumber::as_double() const {
    switch (rep) {
    case Rep::Int: return static_cast<double>(i);
    case Rep::Uint: return static_cast<double>(u);
    case Rep::Real: return d;
    }
    return 0.0;
}

bool JsonNumber::is_integral() const {
    if (rep != Rep::Real) return true;
    return std::isfinite(d) && std::floor(d) == d;
}

namespace {

constexpr double kTwo63 = 9223372036854775808.0; // 2^63
constexpr double kTwo64 = 18446744073709551616.0; // 2^64

// Exact integer view of an integral double, when one exists.
bool real_to_int(double d, std::int64_t& out) {
    if (!(std::floor(d) == d)) return false;
    if (d < -kTwo63 || d >= kTwo63) return false;
    out = static_cast<std::int64_t>(d);
    return true;
}

bool real_to_uint(double d, std::uint64_t& out) {
    if (!(std::floor(d) == d)) return false;
    if (d < 0.0 || d >= kTwo64) return false;
    out = static_cast<std::uint64_t>(d);
    return true;
}

} // namespace

std::string JsonNumber::canonical_text() const {
    switch (rep) {
    case Rep::Int: return std::to_string(i);
    case Rep::Uint: return std::to_string(u);
    case Rep::Real: {
        if (std::isfinite(d)) {
            std::int64_t iv;
            if (real_to_int(d, iv)) return std::to_string(iv);
            std::uint64_t uv;
            if (real_to_uint(d, uv)) return std::to_string(uv);
        }
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), d);
        return std::string(buf, res.ptr);
    }
    }
    return "0";
}

bool JsonNumber::operator==(const JsonNumber& other) const {
    if (rep == other.rep) {
        switch (rep) {
        case Rep::Int: return i == other.i;
        case Rep::Uint: return u == other.u;
        case Rep::Real: return d == other.d;
        }
    }
    // Mixed representations: reduce real to an exact integer when possible.
    auto cmp_int_real = [](std::int64_t a, double b) {
        std::int64_t bi;
        return real_to_int(b, bi) && bi == a;
    };
    auto cmp_uint_real = [](std::uint64_t a, double b) {
        std::uint64_t bu;
        return real_to_uint(b, bu) && bu == a;
    };
    if (rep == Rep::Int && other.rep == Rep::Uint)
        return i >= 0 && static_cast<std::uint64_t>(i) == other.u;
    if (rep == Rep::Uint && other.rep == Rep::Int)
        return other.i >= 0 && static_cast<std::uint64_t>(other.i) == u;
    if (rep == Rep::Int && other.rep == Rep::Real) return cmp_int_real(i, other.d);
    if (rep == Rep::Real && other.rep == Rep::Int) return cmp_int_real(other.i, d);
    if (rep == Rep::Uint && other.rep == Rep::Real) return cmp_uint_real(u, other.d);
    if (rep == Rep::Real && other.rep == Rep::Uint) return cmp_uint_real(other.u, d);
    return false;
}

JsonValue JsonValue::make_null() {
    return JsonValue{};
}

JsonValue JsonValue::make_bool(bool b) {
    JsonValue v;
    v.kind = JsonKind::Boolean;
    v.boolean = b;
    return v;
}

JsonValue JsonValue::make_number(std::int64_t n) {
    JsonValue v;
    v.kind = JsonKind::Number;
    v.number = JsonNumber::of(n);
    return v;
}

JsonValue JsonValue::make_number(double n) {
    JsonValue v;
    v.kind = JsonKind::Number;
    v.number = JsonNumber::of(n);
    return v;
}

JsonValue JsonValue::make_number(JsonNumber n) {
    JsonValue v;
    v.kind = JsonKind::Number;
    v.number = n;
    return v;
}

JsonValue JsonValue::make_string(std::string s) {
    JsonValue v;
    v.kind = JsonKind::String;
    v.string_value = std::move(s);
    return v;
}

JsonValue JsonValue::make_object() {
    JsonValue v;
    v.kind = JsonKind::Object;
    return v;
}

JsonValue JsonValue::make_array() {
    JsonValue v;
    v.kind = JsonKind::Array;
    return v;
}

const JsonValue* JsonValue::find(std::string_view label) const {
    if (kind != JsonKind::Object) return nullptr;
    for (const auto& m : members)
        if (m.label == label) return &m.value;
    return nullptr;
}

JsonValue* JsonValue::find(std::string_view label) {
    return const_cast<JsonValue*>(static_cast<const JsonValue*>(this)->find(label));
}

JsonValue& JsonValue::set(std::string label, JsonValue value) {
    kind = JsonKind::Object;
    if (JsonValue* existing = find(label)) {
        *existing = std::move(value);
    } else {
        members.push_back(Member{std::move(label), std::move(value)});
    }
    return *this;
}

JsonValue& JsonValue::push_back(JsonValue value) {
    kind = JsonKind::Array;
    items.push_back(std::move(value));
    return *this;
}

bool JsonValue::operator==(const JsonValue& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
    case JsonKind::Null: return true;
    case JsonKind::Boolean: return boolean == other.boolean;
    case JsonKind::Number: return number == other.number;
    case JsonKind::String: return string_value == other.string_value;
    case JsonKind::Array:
        if (items.size() != other.items.size()) return false;
        for (std::size_t k = 0; k < items.size(); ++k)
            if (!(items[k] == other.items[k])) return false;
        return true;
    case JsonKind::Object: {
        if (members.size() != other.members.size()) return false;
        for (const auto& m : members) {
            const JsonValue* o = other.find(m.label);
            if (o == nullptr || !(m.value == *o)) return false;
        }
        return true;
    }
    }
    return false;
}

void append_json_string(std::string& out, std::string_view s) {
    out.push_back('"');
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(static_cast<char>(c));
            }
        }
    }
    out.push_back('"');
}

namespace {

void write_compact(std::string& out, const JsonValue& v) {
    switch (v.kind) {
    case JsonKind::Null: out += "null"; break;
    case JsonKind::Boolean: out += v.boolean ? "true" : "false"; break;
    case JsonKind::Number: out += v.number.canonical_text(); break;
    case JsonKind::String: append_json_string(out, v.string_value); break;
    case JsonKind::Array: {
        out.push_back('[');
        for (std::size_t k = 0; k < v.items.size(); ++k) {
            if (k > 0) out.push_back(',');
            write_compact(out, v.items[k]);
        }
        out.push_back(']');
        break;
    }
    case JsonKind::Object: {
        out.push_back('{');
        for (std::size_t k = 0; k < v.members.size(); ++k) {
            if (k > 0) out.push_back(',');
            append_json_string(out, v.members[k].label);
            out.push_back(':');
            write_compact(out, v.members[k].value);
        }
        out.push_back('}');
        break;
    }
    }
}

} // namespace

std::string JsonValue::compact_text() const {
    std::string out;
    write_compact(out, *this);
    return out;
}

} // namespace tagunion
