#include "tagunion/heuristics.hpp"

#include "tagunion/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace tagunion {

void HeuristicsConfig::validate() const {
    if (mode == Mode::Relative) {
        if (!(threshold > 0.0 && threshold <= 1.0))
            throw ConfigError("relative threshold must be in (0, 1]");
    } else {
        if (!(threshold >= 1.0))
            throw ConfigError("absolute threshold must be at least 1");
    }
    if (max_depth < 1) throw ConfigError("max depth must be at least 1");
}

std::vector<AttributeId> drop_single_valued(const ObjectRelation& rel) {
    std::vector<AttributeId> retained;
    for (const auto& col : rel.columns)
        if (col.distinct_count() != 1) retained.push_back(col.attr);
    return retained;
}

std::vector<AttributeId> drop_unique(const ObjectRelation& rel) {
    std::vector<AttributeId> retained;
    for (const auto& col : rel.columns) {
        if (col.attr.role != AttributeId::Role::Value) continue;
        if (col.values.empty()) {
            retained.push_back(col.attr); // inert, but nothing to drop
            continue;
        }
        std::unordered_map<std::int32_t, std::size_t> sizes;
        for (std::int32_t idx : col.cells)
            if (idx != Column::kMissing) ++sizes[idx];
        bool all_singleton = true;
        for (const auto& [idx, n] : sizes)
            if (n > 1) {
                all_singleton = false;
                break;
            }
        if (!all_singleton) retained.push_back(col.attr);
    }
    return retained;
}

std::vector<UcCfdCandidate> apply_threshold(std::vector<UcCfdCandidate> candidates,
                                            std::size_t row_count,
                                            const HeuristicsConfig& config) {
    config.validate();
    auto insufficient = [&](const UcCfdCandidate& cand) {
        if (config.mode == HeuristicsConfig::Mode::Relative) {
            if (row_count == 0) return true;
            return static_cast<double>(cand.support) / static_cast<double>(row_count) <
                   config.threshold;
        }
        return static_cast<double>(cand.support) < config.threshold;
    };
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(), insufficient),
                     candidates.end());
    return candidates;
}

std::size_t TaggedUnionGroup::total_consequents() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        n += c.consequents.size();
    return n;
}

std::vector<TaggedUnionGroup> apply_union_rule(const PathKey& path,
                                               const std::vector<UcCfdCandidate>& candidates) {
    std::vector<TaggedUnionGroup> groups;
    for (const auto& cand : candidates) {
        if (groups.empty() || groups.back().tag_label != cand.tag_label) {
            groups.push_back(TaggedUnionGroup{path, cand.tag_label, {}});
        }
        auto& cases = groups.back().cases;
        TaggedUnionCase* current = nullptr;
        for (auto& c : cases)
            if (c.constant_text == cand.tag_value_text) {
                current = &c;
                break;
            }
        if (current == nullptr) {
            cases.push_back(TaggedUnionCase{cand.tag_value, cand.tag_value_text,
                                            cand.support, cand.first_witness(), {}});
            current = &cases.back();
        }
        current->consequents.emplace_back(cand.consequent_label, cand.consequent_schema);
    }

    for (auto& group : groups) {
        for (auto& c : group.cases)
            std::sort(c.consequents.begin(), c.consequents.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        std::stable_sort(group.cases.begin(), group.cases.end(),
                         [](const TaggedUnionCase& a, const TaggedUnionCase& b) {
                             if (a.support != b.support) return a.support > b.support;
                             return a.first_witness < b.first_witness;
                         });
    }
    return groups;
}

} // namespace tagunion
