#include "tagunion/discovery.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace tagunion {

PositionListIndex build_pli(const ObjectRelation& rel, const AttributeId& attr) {
    PositionListIndex pli;
    pli.attr = attr;
    const Column* col = rel.find(attr);
    if (col == nullptr) return pli;

    std::vector<PositionListIndex::Cluster> by_value(col->values.size());
    for (std::size_t row = 0; row < col->cells.size(); ++row) {
        std::int32_t idx = col->cells[row];
        if (idx == Column::kMissing) continue;
        auto& cluster = by_value[static_cast<std::size_t>(idx)];
        if (cluster.positions.empty()) {
            cluster.key = col->values[static_cast<std::size_t>(idx)].key;
            cluster.value_index = idx;
        }
        cluster.positions.push_back(static_cast<std::int32_t>(row));
    }
    for (auto& cluster : by_value)
        if (!cluster.positions.empty())
            pli.clusters.push_back(std::move(cluster));
    std::sort(pli.clusters.begin(), pli.clusters.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return pli;
}

bool candidate_order(const UcCfdCandidate& a, const UcCfdCandidate& b) {
    return std::tie(a.tag_label, a.tag_value_text, a.consequent_label) <
                   std::tie(b.tag_label, b.tag_value_text, b.consequent_label) ||
           (std::tie(a.tag_label, a.tag_value_text, a.consequent_label) ==
                    std::tie(b.tag_label, b.tag_value_text, b.consequent_label) &&
            a.depth > b.depth);
}

namespace {

std::vector<AttributeId> sorted_tags(std::vector<AttributeId> attrs) {
    std::sort(attrs.begin(), attrs.end(),
              [](const AttributeId& a, const AttributeId& b) { return a.label < b.label; });
    return attrs;
}

std::vector<AttributeId> sorted_consequents(std::vector<AttributeId> attrs) {
    std::sort(attrs.begin(), attrs.end(), [](const AttributeId& a, const AttributeId& b) {
        return a.label != b.label ? a.label < b.label : a.depth > b.depth;
    });
    return attrs;
}

UcCfdCandidate make_candidate(const std::string& tag_label,
                              const CellValue& tag_value,
                              const AttributeId& consequent,
                              const CellValue& consequent_value,
                              std::vector<std::int32_t> witnesses) {
    UcCfdCandidate cand;
    cand.tag_label = tag_label;
    cand.tag_value = tag_value.basic;
    cand.tag_value_text = tag_value.key;
    cand.consequent_label = consequent.label;
    cand.depth = consequent.depth;
    cand.consequent_schema = consequent_value.schema;
    cand.consequent_text = consequent_value.key;
    cand.support = static_cast<std::int64_t>(witnesses.size());
    cand.witnesses = std::move(witnesses);
    return cand;
}

} // namespace

std::vector<UcCfdCandidate> discover_candidates(
    const ObjectRelation& rel, const std::vector<AttributeId>& tag_attrs,
    const std::vector<AttributeId>& consequent_attrs) {
    std::vector<UcCfdCandidate> out;

    std::vector<AttributeId> tags = sorted_tags(tag_attrs);
    std::vector<AttributeId> consequents = sorted_consequents(consequent_attrs);
    std::vector<const Column*> cons_cols;
    cons_cols.reserve(consequents.size());
    for (const auto& cons : consequents)
        cons_cols.push_back(rel.find(cons));

    for (const auto& tag : tags) {
        PositionListIndex pli = build_pli(rel, tag);
        const Column* tag_col = rel.find(tag);
        if (tag_col == nullptr) continue;

        for (const auto& cluster : pli.clusters) {
            for (std::size_t ci = 0; ci < consequents.size(); ++ci) {
                const AttributeId& cons = consequents[ci];
                if (cons.label == tag.label) continue;
                const Column* cons_col = cons_cols[ci];
                if (cons_col == nullptr) continue;

                // Inclusion test: all witness rows must fall into one
                // concrete cluster of the consequent's partition.
                std::int32_t shared = cons_col->cells[static_cast<std::size_t>(
                    cluster.positions.front())];
                if (shared == Column::kMissing) continue;
                bool included = true;
                for (std::size_t k = 1; k < cluster.positions.size(); ++k) {
                    if (cons_col->cells[static_cast<std::size_t>(cluster.positions[k])] !=
                        shared) {
                        included = false;
                        break;
                    }
                }
                if (!included) continue;

                out.push_back(make_candidate(
                    tag.label, tag_col->values[static_cast<std::size_t>(cluster.value_index)],
                    cons, cons_col->values[static_cast<std::size_t>(shared)],
                    cluster.positions));
            }
        }
    }
    std::sort(out.begin(), out.end(), candidate_order);
    return out;
}

std::vector<UcCfdCandidate> brute_force_candidates(
    const ObjectRelation& rel, const std::vector<AttributeId>& tag_attrs,
    const std::vector<AttributeId>& consequent_attrs) {
    std::vector<UcCfdCandidate> out;

    std::vector<AttributeId> tags = sorted_tags(tag_attrs);
    std::vector<AttributeId> consequents = sorted_consequents(consequent_attrs);

    for (const auto& tag : tags) {
        const Column* tag_col = rel.find(tag);
        if (tag_col == nullptr) continue;

        // Distinct tag constants in canonical text order.
        std::map<std::string, std::int32_t> constants;
        for (std::size_t row = 0; row < tag_col->cells.size(); ++row) {
            std::int32_t idx = tag_col->cells[row];
            if (idx != Column::kMissing)
                constants.emplace(tag_col->values[static_cast<std::size_t>(idx)].key, idx);
        }

        for (const auto& [text, value_index] : constants) {
            std::vector<std::int32_t> witnesses;
            for (std::size_t row = 0; row < tag_col->cells.size(); ++row)
                if (tag_col->cells[row] == value_index)
                    witnesses.push_back(static_cast<std::int32_t>(row));

            for (const auto& cons : consequents) {
                if (cons.label == tag.label) continue;
                const Column* cons_col = rel.find(cons);
                if (cons_col == nullptr) continue;

                // Definition check over every pair of witness rows, plus the
                // requirement that the implied value is concrete.
                bool holds = true;
                for (std::int32_t s : witnesses) {
                    for (std::int32_t t : witnesses) {
                        std::string cs = rel.cell_text(static_cast<std::size_t>(s), *cons_col);
                        std::string ct = rel.cell_text(static_cast<std::size_t>(t), *cons_col);
                        if (cs.empty() || ct.empty() || cs != ct) {
                            holds = false;
                            break;
                        }
                    }
                    if (!holds) break;
                }
                if (!holds || witnesses.empty()) continue;

                std::int32_t shared =
                    cons_col->cells[static_cast<std::size_t>(witnesses.front())];
                out.push_back(make_candidate(
                    tag.label, tag_col->values[static_cast<std::size_t>(value_index)], cons,
                    cons_col->values[static_cast<std::size_t>(shared)], witnesses));
            }
        }
    }
    std::sort(out.begin(), out.end(), candidate_order);
    return out;
}

std::vector<UcCfdCandidate> resolve_deepest(std::vector<UcCfdCandidate> candidates) {
    std::vector<UcCfdCandidate> out;
    for (auto& cand : candidates) {
        bool seen =
            !out.empty() && out.back().tag_label == cand.tag_label &&
            out.back().tag_value_text == cand.tag_value_text &&
            out.back().consequent_label == cand.consequent_label;
        if (!seen) out.push_back(std::move(cand));
    }
    return out;
}

} // namespace tagunion
