#pragma once

#include "tagunion/baseline.hpp"
#include "tagunion/emitter.hpp"
#include "tagunion/heuristics.hpp"
#include "tagunion/validator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tagunion {

struct PipelineConfig {
    HeuristicsConfig heuristics;
    ConstraintEncoding encoding = ConstraintEncoding::IfThenElse;

    /// Empty: extract the baseline internally. Otherwise: path of a schema
    /// file produced by another tool.
    std::string baseline_file;

    bool validate_documents = false;
    std::string dataset_name = "dataset";

    /// When non-empty, every relation is exported as CSV into this directory.
    std::string dump_relations_dir;
};

/// Run summary; `valid` is absent when validation was not requested.
struct ExtractionReport {
    std::string dataset;
    int input_loc = 0;      ///< |D|: canonical pretty-printed input lines
    int baseline_loc = 0;   ///< |S|
    int constraints_loc = 0;///< |T|
    int composite_loc = 0;
    double ratio_t = 0.0;   ///< |T| / |composite|

    long cfds_without_heuristics = 0;
    long cfds_with_threshold = 0;
    long cfds_with_heuristics = 0;

    std::optional<bool> valid;
    double threshold = 0.0;
    std::string threshold_mode;
    int max_depth = 0;
    double seconds = 0.0;
};

struct PipelineResult {
    SchemaNode schema_s;
    SchemaNode schema_t;
    SchemaNode composite;
    std::vector<TaggedUnionGroup> groups;
    ExtractionReport report;
    std::vector<ValidationError> validation_errors;
};

/// Full extraction: relational encoding per path, candidate discovery, depth
/// resolution, threshold, default heuristics, union rule, emission, and
/// composition; optionally validates every document against the composite.
PipelineResult run_pipeline(const DocumentCollection& coll, const PipelineConfig& config);

/// Writes schema-S.json, schema-T.json, schema-ite.json (composite, with the
/// Draft-07 "$schema" declaration) and report.json into `directory`.
void write_outputs(const PipelineResult& result, const std::string& directory);

/// Machine-readable report; stable field names, one JSON object.
std::string report_json(const ExtractionReport& report);

/// Human-readable two-column table.
std::string report_table(const ExtractionReport& report);

} // namespace tagunion
