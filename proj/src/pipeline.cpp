#include "tagunion/pipeline.hpp"

#include "tagunion/json_pretty.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tagunion {

namespace {

std::string relation_file_name(const PathKey& path) {
    std::string name = "relation-";
    for (char c : path.render()) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
            name.push_back(c);
        else if (c == '/')
            name.push_back('.');
        else if (c == '*')
            name.push_back('_');
        // brackets and escapes dropped
    }
    return name + ".csv";
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path.string());
    out << text;
}

bool attr_retained(const std::vector<AttributeId>& retained, const std::string& label,
                   int depth, AttributeId::Role role) {
    for (const auto& attr : retained)
        if (attr.role == role && attr.label == label && (role != AttributeId::Role::Type || attr.depth == depth))
            return true;
    return false;
}

} // namespace

PipelineResult run_pipeline(const DocumentCollection& coll, const PipelineConfig& config) {
    auto started = std::chrono::steady_clock::now();
    config.heuristics.validate();
    if (coll.empty()) throw InputError("no documents to analyze");

    PipelineResult result;
    ExtractionReport& report = result.report;
    report.dataset = config.dataset_name;
    report.threshold = config.heuristics.threshold;
    report.threshold_mode =
        config.heuristics.mode == HeuristicsConfig::Mode::Relative ? "relative" : "absolute";
    report.max_depth = config.heuristics.max_depth;

    for (const auto& doc : coll.documents)
        report.input_loc += line_count(doc);

    // Discovery per path. Counts for the report come from the undropped
    // attribute set; the emitted constraints additionally apply the
    // single-valued / unique attribute drops before the union rule.
    std::vector<TaggedUnionGroup> groups;
    for (const PathKey& path : enumerate_object_paths(coll)) {
        ObjectRelation rel = encode_relation(coll, path, config.heuristics.max_depth);
        if (!config.dump_relations_dir.empty()) {
            std::filesystem::path dir(config.dump_relations_dir);
            std::filesystem::create_directories(dir);
            write_text_file(dir / relation_file_name(path), rel.to_csv());
        }

        std::vector<AttributeId> all_tags;
        std::vector<AttributeId> all_consequents;
        for (const auto& col : rel.columns) {
            if (col.attr.role == AttributeId::Role::Value)
                all_tags.push_back(col.attr);
            else if (col.attr.role == AttributeId::Role::Type)
                all_consequents.push_back(col.attr);
        }

        std::vector<UcCfdCandidate> candidates =
            resolve_deepest(discover_candidates(rel, all_tags, all_consequents));
        report.cfds_without_heuristics += static_cast<long>(candidates.size());

        candidates = apply_threshold(std::move(candidates), rel.row_count, config.heuristics);
        report.cfds_with_threshold += static_cast<long>(candidates.size());

        std::vector<AttributeId> multi_valued = drop_single_valued(rel);
        std::vector<AttributeId> tag_candidates = drop_unique(rel);
        candidates.erase(
            std::remove_if(candidates.begin(), candidates.end(),
                           [&](const UcCfdCandidate& cand) {
                               return !attr_retained(multi_valued, cand.tag_label, 0,
                                                     AttributeId::Role::Value) ||
                                      !attr_retained(tag_candidates, cand.tag_label, 0,
                                                     AttributeId::Role::Value) ||
                                      !attr_retained(multi_valued, cand.consequent_label,
                                                     cand.depth, AttributeId::Role::Type);
                           }),
            candidates.end());

        for (auto& group : apply_union_rule(path, candidates)) {
            report.cfds_with_heuristics += static_cast<long>(group.cases.size());
            groups.push_back(std::move(group));
        }
    }

    result.schema_t = nest_groups(groups, config.encoding);
    result.groups = std::move(groups);

    result.schema_s = config.baseline_file.empty()
                          ? extract_structural_schema(coll)
                          : load_external_schema(config.baseline_file);

    result.composite = compose(result.schema_s, result.schema_t);

    report.baseline_loc = line_count(result.schema_s);
    report.constraints_loc = line_count(result.schema_t);
    report.composite_loc = line_count(result.composite);
    report.ratio_t = constraint_share(report.constraints_loc, report.composite_loc);

    if (config.validate_documents) {
        bool all_valid = true;
        for (const auto& doc : coll.documents) {
            ValidationResult vr = validate(doc, result.composite);
            if (!vr.valid()) {
                all_valid = false;
                for (auto& err : vr.errors)
                    result.validation_errors.push_back(std::move(err));
            }
        }
        report.valid = all_valid;
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

namespace {

JsonValue report_to_value(const ExtractionReport& report) {
    JsonValue v = JsonValue::make_object();
    v.set("dataset", JsonValue::make_string(report.dataset));
    v.set("input_loc", JsonValue::make_number(static_cast<std::int64_t>(report.input_loc)));
    v.set("baseline_loc",
          JsonValue::make_number(static_cast<std::int64_t>(report.baseline_loc)));
    v.set("constraints_loc",
          JsonValue::make_number(static_cast<std::int64_t>(report.constraints_loc)));
    v.set("composite_loc",
          JsonValue::make_number(static_cast<std::int64_t>(report.composite_loc)));
    v.set("ratio_t", JsonValue::make_number(report.ratio_t));
    v.set("cfds_without_heuristics",
          JsonValue::make_number(static_cast<std::int64_t>(report.cfds_without_heuristics)));
    v.set("cfds_with_threshold",
          JsonValue::make_number(static_cast<std::int64_t>(report.cfds_with_threshold)));
    v.set("cfds_with_heuristics",
          JsonValue::make_number(static_cast<std::int64_t>(report.cfds_with_heuristics)));
    v.set("valid", report.valid ? JsonValue::make_bool(*report.valid) : JsonValue::make_null());
    v.set("threshold", JsonValue::make_number(report.threshold));
    v.set("threshold_mode", JsonValue::make_string(report.threshold_mode));
    v.set("max_depth", JsonValue::make_number(static_cast<std::int64_t>(report.max_depth)));
    v.set("seconds", JsonValue::make_number(report.seconds));
    return v;
}

} // namespace

std::string report_json(const ExtractionReport& report) {
    return render_pretty(report_to_value(report)) + "\n";
}

std::string report_table(const ExtractionReport& report) {
    std::ostringstream out;
    auto row = [&](const std::string& name, const std::string& value) {
        out << "  " << name;
        for (std::size_t k = name.size(); k < 26; ++k)
            out << ' ';
        out << value << '\n';
    };
    out << "dataset: " << report.dataset << '\n';
    row("|D| (LoC)", std::to_string(report.input_loc));
    row("|S| (LoC)", std::to_string(report.baseline_loc));
    row("|T| (LoC)", std::to_string(report.constraints_loc));
    {
        std::ostringstream ratio;
        ratio.precision(1);
        ratio << std::fixed << report.ratio_t * 100.0 << "%";
        row("ratio T", ratio.str());
    }
    row("threshold",
        (report.threshold_mode == "relative"
             ? std::to_string(report.threshold * 100.0).substr(0, 4) + "% of rows"
             : std::to_string(report.threshold) + " rows"));
    row("CFDs w/o heuristics", std::to_string(report.cfds_without_heuristics));
    row("CFDs w/ threshold", std::to_string(report.cfds_with_threshold));
    row("CFDs w/ heuristics", std::to_string(report.cfds_with_heuristics));
    row("valid", report.valid ? (*report.valid ? "yes" : "NO") : "not checked");
    {
        std::ostringstream secs;
        secs.precision(3);
        secs << std::fixed << report.seconds << " s";
        row("wall clock", secs.str());
    }
    return std::move(out).str();
}

void write_outputs(const PipelineResult& result, const std::string& directory) {
    std::filesystem::path dir(directory.empty() ? "." : directory);
    std::filesystem::create_directories(dir);

    write_text_file(dir / "schema-S.json", render_pretty(result.schema_s) + "\n");
    write_text_file(dir / "schema-T.json", render_pretty(result.schema_t) + "\n");

    SchemaNode composite_doc = JsonValue::make_object();
    composite_doc.set("$schema",
                      JsonValue::make_string("http://json-schema.org/draft-07/schema#"));
    for (const auto& m : result.composite.members)
        composite_doc.set(m.label, m.value);
    write_text_file(dir / "schema-ite.json", render_pretty(composite_doc) + "\n");

    write_text_file(dir / "report.json", report_json(result.report));
}

} // namespace tagunion
