#include "tagunion/json_pretty.hpp"

#include <type_traits>

namespace tagunion {

namespace {

// An array stays on one line unless it (transitively) contains an object.
// Objects always open their own scope, so [{},{}] never collapses onto a
// single line and line-derived identifiers stay distinct.
bool fits_inline(const JsonValue& v) {
    switch (v.kind) {
    case JsonKind::Object:
        return false;
    case JsonKind::Array:
        for (const auto& item : v.items)
            if (!fits_inline(item)) return false;
        return true;
    default:
        return true;
    }
}

struct TextSink {
    std::string out;
    void write(std::string_view s) { out += s; }
    void newline() { out.push_back('\n'); }
};

struct CountSink {
    void write(std::string_view) {}
    void newline() {}
};

template <typename ValueT, typename Sink>
struct Renderer {
    Sink& sink;
    int line = 1;

    void write(std::string_view s) { sink.write(s); }

    void break_line(int depth) {
        sink.newline();
        ++line;
        for (int k = 0; k < depth; ++k)
            sink.write("  ");
    }

    void mark(ValueT& v) {
        if constexpr (!std::is_const_v<ValueT>)
            v.line = line;
    }

    void emit_basic(ValueT& v) {
        switch (v.kind) {
        case JsonKind::Null: write("null"); break;
        case JsonKind::Boolean: write(v.boolean ? "true" : "false"); break;
        case JsonKind::Number: write(v.number.canonical_text()); break;
        case JsonKind::String: {
            std::string buf;
            append_json_string(buf, v.string_value);
            write(buf);
            break;
        }
        default: break;
        }
    }

    void emit_inline(ValueT& v) {
        mark(v);
        if (v.kind == JsonKind::Array) {
            write("[");
            for (std::size_t k = 0; k < v.items.size(); ++k) {
                if (k > 0) write(", ");
                emit_inline(v.items[k]);
            }
            write("]");
        } else {
            emit_basic(v);
        }
    }

    void emit_member(typename std::conditional_t<std::is_const_v<ValueT>,
                                                 const JsonValue::Member,
                                                 JsonValue::Member>& m,
                     int depth) {
        std::string label;
        append_json_string(label, m.label);
        write(label);
        write(": ");
        emit(m.value, depth);
    }

    void emit(ValueT& v, int depth) {
        switch (v.kind) {
        case JsonKind::Object: {
            mark(v);
            if (v.members.empty()) {
                write("{}");
                return;
            }
            write("{ ");
            emit_member(v.members.front(), depth + 1);
            for (std::size_t k = 1; k < v.members.size(); ++k) {
                write(",");
                break_line(depth + 1);
                emit_member(v.members[k], depth + 1);
            }
            write(" }");
            return;
        }
        case JsonKind::Array: {
            if (fits_inline(v)) {
                emit_inline(v);
                return;
            }
            mark(v);
            write("[");
            for (std::size_t k = 0; k < v.items.size(); ++k) {
                if (k > 0) write(",");
                break_line(depth + 1);
                emit(v.items[k], depth + 1);
            }
            break_line(depth);
            write("]");
            return;
        }
        default:
            mark(v);
            emit_basic(v);
            return;
        }
    }
};

} // namespace

std::string render_pretty(const JsonValue& value) {
    TextSink sink;
    Renderer<const JsonValue, TextSink> r{sink};
    r.emit(value, 0);
    return std::move(sink.out);
}

int line_count(const JsonValue& value) {
    CountSink sink;
    Renderer<const JsonValue, CountSink> r{sink};
    r.emit(value, 0);
    return r.line;
}

namespace {

void stamp_doc_index(JsonValue& v, std::int32_t doc_index) {
    v.doc_index = doc_index;
    for (auto& m : v.members)
        stamp_doc_index(m.value, doc_index);
    for (auto& item : v.items)
        stamp_doc_index(item, doc_index);
}

} // namespace

void assign_locations(JsonValue& value, std::int32_t doc_index) {
    stamp_doc_index(value, doc_index);
    CountSink sink;
    Renderer<JsonValue, CountSink> r{sink};
    r.emit(value, 0);
}

} // namespace tagunion
