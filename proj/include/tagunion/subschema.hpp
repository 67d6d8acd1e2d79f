#pragma once

#include "tagunion/json_value.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tagunion {

/// Structural schema derived from a JSON value, with a bounded level of
/// detail. A depth-1 descriptor records only the top-level kind; each extra
/// level expands one more level of array items / object members.
struct Subschema {
    enum class Kind : std::uint8_t { Basic, Array, Object };

    Kind kind = Kind::Basic;
    JsonKind basic = JsonKind::Null; // Basic only: Null/Boolean/Number/String

    /// Array item descriptor: empty means unconstrained (truncated away, a
    /// heterogeneous item list, or an empty array).
    std::vector<Subschema> item;

    /// Object members, sorted by label. `members_opaque` marks the depth-1
    /// truncation where the member list is not recorded; it is distinct from
    /// an object with no members.
    bool members_opaque = false;
    std::vector<std::pair<std::string, Subschema>> members;

    static Subschema of_basic(JsonKind k);
    static Subschema any_array();
    static Subschema array_of(Subschema item);
    static Subschema opaque_object();
    static Subschema object_of(std::vector<std::pair<std::string, Subschema>> members);

    bool operator==(const Subschema& other) const;
    bool operator!=(const Subschema& other) const { return !(*this == other); }

    /// Injective text form: equal text iff equal descriptor tree.
    std::string canonical_text() const;

    /// Rendering with `type` / `items` / `properties` keywords.
    JsonValue to_schema_node() const;
};

/// Descriptor of `v` cut to `depth` levels (depth >= 1). Heterogeneity of
/// array items is judged on their full structure, so that descriptors at
/// different depths are truncations of one another.
Subschema derive_subschema(const JsonValue& v, int depth);

/// Cuts `s` to `depth` levels. truncate(derive(v, k), d) == derive(v, d)
/// for all d <= k.
Subschema truncate(const Subschema& s, int depth);

} // namespace tagunion
