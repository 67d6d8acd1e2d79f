#include "tagunion/json_parse.hpp"
#include "tagunion/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extracts tagged-union constraints from JSON document "
                 "collections and emits them as a JSON Schema if-then-else "
                 "subschema composed with a structural baseline schema."};

    std::vector<std::string> inputs;
    app.add_option("inputs", inputs, "JSON input file(s)")->required();

    std::string docs_mode = "single";
    app.add_option("--docs", docs_mode,
                   "how each input file maps to documents: single | lines | array")
        ->check(CLI::IsMember({"single", "lines", "array"}))
        ->capture_default_str();

    double threshold = 0.15;
    app.add_option("--threshold", threshold, "minimum support for a dependency")
        ->capture_default_str();

    std::string threshold_mode = "relative";
    app.add_option("--threshold-mode", threshold_mode,
                   "relative (fraction of rows) or absolute (row count)")
        ->check(CLI::IsMember({"relative", "absolute"}))
        ->capture_default_str();

    int max_depth = 6;
    app.add_option("--max-depth", max_depth, "descriptor relaxation depth limit")
        ->capture_default_str();

    std::string encoding = "ite";
    app.add_option("--encoding", encoding, "constraint encoding: ite | anyof")
        ->check(CLI::IsMember({"ite", "anyof"}))
        ->capture_default_str();

    std::string baseline = "internal";
    app.add_option("--baseline", baseline,
                   "'internal' or the path of a baseline schema file")
        ->capture_default_str();

    bool validate_documents = false;
    app.add_flag("--validate", validate_documents,
                 "validate every document against the composite schema");

    std::string report_format = "table";
    app.add_option("--report", report_format, "stdout report format: json | table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::string output_dir = ".";
    app.add_option("--output-dir", output_dir, "directory for the emitted files")
        ->capture_default_str();

    std::string dump_relations;
    app.add_option("--dump-relations", dump_relations,
                   "export every per-path relation as CSV into this directory");

    std::string name;
    app.add_option("--name", name, "dataset name for the report (default: input stem)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    tagunion::PipelineConfig config;
    config.heuristics.threshold = threshold;
    config.heuristics.mode = threshold_mode == "relative"
                                 ? tagunion::HeuristicsConfig::Mode::Relative
                                 : tagunion::HeuristicsConfig::Mode::Absolute;
    config.heuristics.max_depth = max_depth;
    config.encoding = encoding == "ite" ? tagunion::ConstraintEncoding::IfThenElse
                                        : tagunion::ConstraintEncoding::AnyOf;
    if (baseline != "internal") config.baseline_file = baseline;
    config.validate_documents = validate_documents;
    config.dump_relations_dir = dump_relations;
    config.dataset_name =
        !name.empty() ? name : std::filesystem::path(inputs.front()).stem().string();

    tagunion::InputMode mode = tagunion::InputMode::SingleDocument;
    if (docs_mode == "lines") mode = tagunion::InputMode::NewlineDelimited;
    if (docs_mode == "array") mode = tagunion::InputMode::ArrayOfDocuments;

    try {
        tagunion::DocumentCollection coll = tagunion::parse_files(inputs, mode);
        tagunion::PipelineResult result = tagunion::run_pipeline(coll, config);
        tagunion::write_outputs(result, output_dir);

        if (report_format == "json")
            std::cout << tagunion::report_json(result.report);
        else
            std::cout << tagunion::report_table(result.report);

        if (result.report.valid && !*result.report.valid) {
            std::size_t shown = 0;
            for (const auto& err : result.validation_errors) {
                if (++shown > 10) {
                    std::cerr << "... (" << result.validation_errors.size() - 10
                              << " more)\n";
                    break;
                }
                std::cerr << "invalid at " << (err.instance_path.empty() ? "/" : err.instance_path)
                          << " [" << err.keyword << "]: " << err.message << '\n';
            }
            return kExitInvalid;
        }
        return kExitOk;
    } catch (const tagunion::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tagunion::ParseError& e) {
        std::cerr << "parse error in document " << e.document_index << " at byte "
                  << e.byte_offset << ": " << e.what() << '\n';
        return kExitInput;
    } catch (const tagunion::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const tagunion::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitInput;
    }
}
