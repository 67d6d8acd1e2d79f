#pragma once

#include "tagunion/discovery.hpp"

#include <string>
#include <vector>

namespace tagunion {

/// Pruning configuration. The minimum support threshold is relative
/// (fraction of the relation's row count, in (0,1]) or absolute (row count
/// >= 1); max_depth bounds the descriptor relaxation.
struct HeuristicsConfig {
    enum class Mode : std::uint8_t { Relative, Absolute };

    double threshold = 0.15;
    Mode mode = Mode::Relative;
    int max_depth = 6;

    /// Throws ConfigError when out of range.
    void validate() const;
};

/// Attributes whose non-missing cells take two or more distinct values
/// (plus attributes with no non-missing cells at all, which are inert).
/// Single-valued attributes carry no conditional information and would
/// only restate constants already visible in the structural baseline.
std::vector<AttributeId> drop_single_valued(const ObjectRelation& rel);

/// Value attributes that remain eligible as tag candidates: attributes where
/// every value occurs exactly once are dropped, since each row would form its
/// own rule. The object identifier is never a tag.
std::vector<AttributeId> drop_unique(const ObjectRelation& rel);

/// Keeps candidates whose support meets the threshold; order preserved.
std::vector<UcCfdCandidate> apply_threshold(std::vector<UcCfdCandidate> candidates,
                                            std::size_t row_count,
                                            const HeuristicsConfig& config);

/// One branch of a tagged union: a tag constant together with every sibling
/// property whose descriptor it implies.
struct TaggedUnionCase {
    JsonValue constant;
    std::string constant_text;
    std::int64_t support = 0;
    std::int32_t first_witness = 0;
    std::vector<std::pair<std::string, Subschema>> consequents; ///< sorted by label
};

/// All cases discovered for one tag property at one path. Cases are ordered
/// by descending support, then by first occurrence in the relation, so the
/// most common branch is emitted first.
struct TaggedUnionGroup {
    PathKey path;
    std::string tag_label;
    std::vector<TaggedUnionCase> cases;

    std::size_t total_consequents() const;
};

/// Merges candidates that share (tag label, constant) into one case listing
/// all consequents. `candidates` must be depth-resolved. Groups are ordered
/// by tag label.
std::vector<TaggedUnionGroup> apply_union_rule(const PathKey& path,
                                               const std::vector<UcCfdCandidate>& candidates);

} // namespace tagunion
