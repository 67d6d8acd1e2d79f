#pragma once

#include "tagunion/relation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tagunion {

/// Partition of row positions by equal attribute value; rows with missing
/// cells belong to no cluster. Clusters are ordered by canonical value text.
struct PositionListIndex {
    struct Cluster {
        std::string key;                      ///< canonical value text
        std::int32_t value_index = 0;         ///< into the column's value table
        std::vector<std::int32_t> positions;  ///< ascending row positions
    };

    AttributeId attr;
    std::vector<Cluster> clusters;
};

PositionListIndex build_pli(const ObjectRelation& rel, const AttributeId& attr);

/// Candidate rule: whenever the tag property equals `tag_value`, the sibling
/// property's descriptor at `depth` equals `consequent_schema`.
struct UcCfdCandidate {
    std::string tag_label;
    JsonValue tag_value;
    std::string tag_value_text;

    std::string consequent_label;
    int depth = 0;
    Subschema consequent_schema;
    std::string consequent_text;

    std::int64_t support = 0;
    std::vector<std::int32_t> witnesses; ///< ascending row positions

    std::int32_t first_witness() const { return witnesses.empty() ? 0 : witnesses.front(); }
};

/// True when `a` orders before `b` in the canonical candidate order:
/// (tag label, tag value text, consequent label, depth descending).
bool candidate_order(const UcCfdCandidate& a, const UcCfdCandidate& b);

/// Emits one candidate per (tag attribute cluster, consequent attribute) where
/// all rows of the cluster share a single concrete consequent value, i.e. the
/// tag cluster is included in one cluster of the consequent's partition.
/// `tag_attrs` must be Value attributes and `consequent_attrs` Type
/// attributes of `rel`; pairs with equal labels are skipped. Output is in
/// canonical candidate order.
std::vector<UcCfdCandidate> discover_candidates(
    const ObjectRelation& rel, const std::vector<AttributeId>& tag_attrs,
    const std::vector<AttributeId>& consequent_attrs);

/// Testing oracle with the same contract as discover_candidates, checked by
/// comparing every pair of rows that agree on the tag value. Quadratic; keep
/// inputs small.
std::vector<UcCfdCandidate> brute_force_candidates(
    const ObjectRelation& rel, const std::vector<AttributeId>& tag_attrs,
    const std::vector<AttributeId>& consequent_attrs);

/// Keeps, per (tag label, tag value, consequent label), only the candidate
/// with the greatest depth. Input and output are in canonical order.
std::vector<UcCfdCandidate> resolve_deepest(std::vector<UcCfdCandidate> candidates);

} // namespace tagunion
