#include "tagunion/pipeline.hpp"

#include "tagunion/json_pretty.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace tagunion;

namespace {

PipelineConfig config_with(double threshold,
                           HeuristicsConfig::Mode mode = HeuristicsConfig::Mode::Relative) {
    PipelineConfig config;
    config.heuristics.threshold = threshold;
    config.heuristics.mode = mode;
    config.heuristics.max_depth = 6;
    config.validate_documents = true;
    return config;
}

} // namespace

TEST_CASE("full run on the running example at the aggressive threshold") {
    DocumentCollection coll = testutil::parse_fixture("geometry_collection.json");
    PipelineResult result = run_pipeline(coll, config_with(0.5));

    CHECK(result.report.input_loc == 11);
    CHECK(result.report.cfds_with_heuristics == 2);
    REQUIRE(result.groups.size() == 1);
    CHECK(result.groups[0].tag_label == "type");
    CHECK(result.groups[0].cases.size() == 2);

    REQUIRE(result.report.valid.has_value());
    CHECK(*result.report.valid);
    CHECK(result.validation_errors.empty());

    CHECK(result.report.cfds_with_heuristics <= result.report.cfds_with_threshold);
    CHECK(result.report.cfds_with_threshold <= result.report.cfds_without_heuristics);
    CHECK(result.report.ratio_t > 0.0);
    CHECK(result.report.ratio_t < 1.0);
}

TEST_CASE("an empty document set is rejected before encoding") {
    DocumentCollection coll = parse_documents("[]", InputMode::ArrayOfDocuments);
    CHECK_THROWS_AS(run_pipeline(coll, config_with(0.5)), InputError);
}

TEST_CASE("threshold grid produces nested rule sets") {
    for (const char* name : {"geometry_collection.json", "feature_collection.json",
                             "minecraft_predicates.json"}) {
        DocumentCollection coll = testutil::parse_fixture(name);
        long previous = -1;
        for (double tau : {0.5, 0.35, 0.15}) {
            PipelineResult result = run_pipeline(coll, config_with(tau));
            if (previous >= 0) CHECK(result.report.cfds_with_heuristics >= previous);
            previous = result.report.cfds_with_heuristics;
            REQUIRE(result.report.valid.has_value());
            CHECK(*result.report.valid);
        }
    }
}

TEST_CASE("newline-delimited input flows through the pipeline") {
    DocumentCollection coll =
        testutil::parse_fixture("records.ndjson", InputMode::NewlineDelimited);
    PipelineResult result = run_pipeline(coll, config_with(0.15));
    CHECK(*result.report.valid);
    // kind=point implies the flat pair encoding of loc
    bool found = false;
    for (const auto& group : result.groups)
        for (const auto& c : group.cases)
            if (group.tag_label == "kind" && c.constant_text == "\"point\"")
                found = true;
    CHECK(found);
}

TEST_CASE("external baseline replaces the internal extractor") {
    DocumentCollection coll = testutil::parse_fixture("geometry_collection.json");
    PipelineConfig config = config_with(0.5);
    config.baseline_file = testutil::fixture_path("union_baseline.json");
    config.validate_documents = false;
    PipelineResult result = run_pipeline(coll, config);
    CHECK(result.schema_s.find("anyOf") != nullptr);
    CHECK(result.schema_s.find("$comment") != nullptr);
}

TEST_CASE("reports carry stable fields in both formats") {
    DocumentCollection coll = testutil::parse_fixture("geometry_collection.json");
    PipelineResult result = run_pipeline(coll, config_with(0.5));

    std::string json = report_json(result.report);
    for (const char* field :
         {"\"dataset\"", "\"input_loc\"", "\"baseline_loc\"", "\"constraints_loc\"",
          "\"composite_loc\"", "\"ratio_t\"", "\"cfds_without_heuristics\"",
          "\"cfds_with_threshold\"", "\"cfds_with_heuristics\"", "\"valid\"",
          "\"threshold\"", "\"threshold_mode\"", "\"max_depth\"", "\"seconds\""})
        CHECK(json.find(field) != std::string::npos);

    std::string table = report_table(result.report);
    CHECK(table.find("CFDs w/o heuristics") != std::string::npos);
    CHECK(table.find("|T| (LoC)") != std::string::npos);
}

TEST_CASE("two runs agree byte for byte, timing aside") {
    DocumentCollection coll = testutil::parse_fixture("feature_collection.json");
    PipelineResult a = run_pipeline(coll, config_with(0.15));
    PipelineResult b = run_pipeline(coll, config_with(0.15));

    CHECK(render_pretty(a.schema_s) == render_pretty(b.schema_s));
    CHECK(render_pretty(a.schema_t) == render_pretty(b.schema_t));
    CHECK(render_pretty(a.composite) == render_pretty(b.composite));

    a.report.seconds = 0.0;
    b.report.seconds = 0.0;
    CHECK(report_json(a.report) == report_json(b.report));
}

TEST_CASE("output files land in the requested directory") {
    DocumentCollection coll = testutil::parse_fixture("geometry_collection.json");
    PipelineConfig config = config_with(0.5);
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "tagunion-test-out";
    std::filesystem::remove_all(dir);
    config.dump_relations_dir = (dir / "relations").string();

    PipelineResult result = run_pipeline(coll, config);
    write_outputs(result, dir.string());

    for (const char* name :
         {"schema-S.json", "schema-T.json", "schema-ite.json", "report.json"})
        CHECK(std::filesystem::exists(dir / name));

    std::string composite = read_file((dir / "schema-ite.json").string());
    CHECK(composite.find("\"$schema\": \"http://json-schema.org/draft-07/schema#\"") !=
          std::string::npos);

    CHECK(std::filesystem::exists(dir / "relations"));
    std::size_t csv_files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir / "relations"))
        if (entry.path().extension() == ".csv") ++csv_files;
    CHECK(csv_files == 2); // root and the geometries path

    std::filesystem::remove_all(dir);
}

TEST_CASE("validation failures surface in the report") {
    // a baseline that contradicts the data
    DocumentCollection coll = testutil::parse_fixture("geometry_collection.json");
    PipelineConfig config = config_with(0.5);
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "tagunion-test-baseline";
    std::filesystem::create_directories(dir);
    std::filesystem::path baseline = dir / "baseline.json";
    {
        std::ofstream out(baseline);
        out << R"({"type": "array"})";
    }
    config.baseline_file = baseline.string();
    PipelineResult result = run_pipeline(coll, config);
    REQUIRE(result.report.valid.has_value());
    CHECK(!*result.report.valid);
    CHECK(!result.validation_errors.empty());
    std::filesystem::remove_all(dir);
}
