#include "tagunion/path.hpp"

#include <algorithm>
#include <set>

namespace tagunion {

PathKey PathKey::child(std::string label) const {
    PathKey p = *this;
    p.segments.push_back({Segment::Kind::Property, std::move(label)});
    return p;
}

PathKey PathKey::item() const {
    PathKey p = *this;
    p.segments.push_back({Segment::Kind::Wildcard, {}});
    return p;
}

std::string PathKey::render() const {
    if (segments.empty()) return "(root)";
    std::string out;
    for (const auto& seg : segments) {
        if (seg.kind == Segment::Kind::Wildcard) {
            out += "[*]";
            continue;
        }
        out.push_back('/');
        for (char c : seg.label) {
            switch (c) {
            case '~': out += "~0"; break;
            case '/': out += "~1"; break;
            case '[': out += "~2"; break;
            default: out.push_back(c);
            }
        }
    }
    return out;
}

namespace {

void collect_paths(const JsonValue& v, PathKey& current, std::set<PathKey>& out) {
    switch (v.kind) {
    case JsonKind::Object:
        out.insert(current);
        for (const auto& m : v.members) {
            current.segments.push_back(
                {PathKey::Segment::Kind::Property, m.label});
            collect_paths(m.value, current, out);
            current.segments.pop_back();
        }
        break;
    case JsonKind::Array:
        current.segments.push_back({PathKey::Segment::Kind::Wildcard, {}});
        for (const auto& item : v.items)
            collect_paths(item, current, out);
        current.segments.pop_back();
        break;
    default:
        break;
    }
}

void collect_objects(const JsonValue& v, const PathKey& p, std::size_t seg,
                     std::vector<std::pair<ObjectId, const JsonValue*>>& out) {
    if (seg == p.segments.size()) {
        if (v.kind == JsonKind::Object)
            out.emplace_back(ObjectId{v.doc_index, v.line}, &v);
        return;
    }
    const auto& s = p.segments[seg];
    if (s.kind == PathKey::Segment::Kind::Property) {
        if (const JsonValue* child = v.find(s.label))
            collect_objects(*child, p, seg + 1, out);
    } else if (v.kind == JsonKind::Array) {
        for (const auto& item : v.items)
            collect_objects(item, p, seg + 1, out);
    }
}

} // namespace

std::vector<PathKey> enumerate_object_paths(const DocumentCollection& coll) {
    std::set<PathKey> found;
    for (const auto& doc : coll.documents) {
        PathKey current;
        collect_paths(doc, current, found);
    }
    return {found.begin(), found.end()};
}

std::vector<std::pair<ObjectId, const JsonValue*>>
objects_at_path(const DocumentCollection& coll, const PathKey& p) {
    std::vector<std::pair<ObjectId, const JsonValue*>> out;
    for (const auto& doc : coll.documents)
        collect_objects(doc, p, 0, out);
    return out;
}

} // namespace tagunion
