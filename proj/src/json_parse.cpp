#include "tagunion/json_parse.hpp"

#include "tagunion/json_pretty.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace tagunion {

namespace {

// SAX handler building a JsonValue tree. Detects duplicate labels within one
// object, which nlohmann's DOM parser would silently collapse.
struct TreeBuilder {
    JsonValue root;
    bool has_root = false;

    struct Frame {
        JsonValue* node;
        std::unordered_set<std::string> labels; // objects only
    };
    std::vector<Frame> frames;
    std::string pending_label;
    bool label_pending = false;

    std::string error;
    std::size_t error_offset = 0;
    bool failed = false;

    JsonValue* attach(JsonValue&& v) {
        if (frames.empty()) {
            root = std::move(v);
            has_root = true;
            return &root;
        }
        JsonValue* parent = frames.back().node;
        if (parent->kind == JsonKind::Object) {
            parent->members.push_back({std::move(pending_label), std::move(v)});
            label_pending = false;
            return &parent->members.back().value;
        }
        parent->items.push_back(std::move(v));
        return &parent->items.back();
    }

    bool null() { attach(JsonValue::make_null()); return true; }
    bool boolean(bool b) { attach(JsonValue::make_bool(b)); return true; }
    bool number_integer(std::int64_t v) { attach(JsonValue::make_number(v)); return true; }
    bool number_unsigned(std::uint64_t v) {
        attach(JsonValue::make_number(JsonNumber::of(v)));
        return true;
    }
    bool number_float(double v, const std::string&) {
        attach(JsonValue::make_number(v));
        return true;
    }
    bool string(std::string& s) { attach(JsonValue::make_string(std::move(s))); return true; }
    bool binary(nlohmann::json::binary_t&) { return false; }

    bool start_object(std::size_t) {
        JsonValue* node = attach(JsonValue::make_object());
        frames.push_back({node, {}});
        return true;
    }

    bool key(std::string& s) {
        if (!frames.back().labels.insert(s).second) {
            failed = true;
            error = "duplicate label \"" + s + "\" within one object";
            return false;
        }
        pending_label = std::move(s);
        label_pending = true;
        return true;
    }

    bool end_object() {
        frames.pop_back();
        return true;
    }

    bool start_array(std::size_t) {
        JsonValue* node = attach(JsonValue::make_array());
        frames.push_back({node, {}});
        return true;
    }

    bool end_array() {
        frames.pop_back();
        return true;
    }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::json::exception& ex) {
        if (!failed) {
            failed = true;
            error = ex.what();
            error_offset = position;
        }
        return false;
    }
};

JsonValue parse_one(std::string_view text, std::size_t doc_index, std::size_t base_offset) {
    TreeBuilder builder;
    bool ok = nlohmann::json::sax_parse(text, &builder,
                                        nlohmann::json::input_format_t::json,
                                        /*strict=*/true);
    if (!ok || !builder.has_root) {
        std::string msg = builder.error.empty() ? "invalid JSON" : builder.error;
        throw ParseError(msg, base_offset + builder.error_offset, doc_index);
    }
    return std::move(builder.root);
}

bool is_blank(std::string_view line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

} // namespace

DocumentCollection parse_documents(std::string_view text, InputMode mode,
                                   std::size_t first_doc_index) {
    DocumentCollection coll;
    switch (mode) {
    case InputMode::SingleDocument: {
        coll.documents.push_back(parse_one(text, first_doc_index, 0));
        break;
    }
    case InputMode::NewlineDelimited: {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            if (!is_blank(line)) {
                std::size_t doc_index = first_doc_index + coll.documents.size();
                coll.documents.push_back(parse_one(line, doc_index, pos));
            }
            pos = eol + 1;
        }
        break;
    }
    case InputMode::ArrayOfDocuments: {
        JsonValue top = parse_one(text, first_doc_index, 0);
        if (top.kind != JsonKind::Array)
            throw ParseError("expected a top-level array of documents", 0, first_doc_index);
        for (auto& item : top.items)
            coll.documents.push_back(std::move(item));
        break;
    }
    }
    for (std::size_t k = 0; k < coll.documents.size(); ++k)
        assign_locations(coll.documents[k],
                         static_cast<std::int32_t>(first_doc_index + k));
    return coll;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

DocumentCollection parse_files(const std::vector<std::string>& paths, InputMode mode) {
    DocumentCollection coll;
    for (const auto& path : paths) {
        DocumentCollection part =
            parse_documents(read_file(path), mode, coll.documents.size());
        for (auto& doc : part.documents)
            coll.documents.push_back(std::move(doc));
    }
    return coll;
}

} // namespace tagunion
