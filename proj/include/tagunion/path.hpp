#pragma once

#include "tagunion/json_parse.hpp"
#include "tagunion/json_value.hpp"

#include <string>
#include <vector>

namespace tagunion {

/// A labeled path from the virtual root to a node. Array traversal
/// contributes a single wildcard segment; there are no per-index paths.
struct PathKey {
    struct Segment {
        enum class Kind : std::uint8_t { Property, Wildcard };
        Kind kind = Kind::Property;
        std::string label; // Property only

        bool operator==(const Segment& other) const {
            return kind == other.kind && label == other.label;
        }
    };

    std::vector<Segment> segments;

    bool is_root() const { return segments.empty(); }

    PathKey child(std::string label) const;
    PathKey item() const;

    /// Canonical text: "/label" per property, "[*]" per wildcard, "(root)"
    /// for the empty path. Labels escape `~` `/` `[` as `~0` `~1` `~2`, so
    /// the rendering is injective.
    std::string render() const;

    bool operator==(const PathKey& other) const { return segments == other.segments; }
    bool operator<(const PathKey& other) const { return render() < other.render(); }
};

/// Identifier of one object occurrence: the document it lives in and the
/// canonical pretty-print line where its scope opens.
struct ObjectId {
    std::int32_t document = 0;
    std::int32_t line = 0;

    bool operator==(const ObjectId& other) const {
        return document == other.document && line == other.line;
    }
    bool operator<(const ObjectId& other) const {
        return document != other.document ? document < other.document : line < other.line;
    }
};

/// All paths by which at least one object is reachable, sorted by rendering.
/// The root path is present when any document root is an object.
std::vector<PathKey> enumerate_object_paths(const DocumentCollection& coll);

/// Every object reachable by `p`, in document order then traversal order.
/// Unknown paths yield an empty list.
std::vector<std::pair<ObjectId, const JsonValue*>>
objects_at_path(const DocumentCollection& coll, const PathKey& p);

} // namespace tagunion
