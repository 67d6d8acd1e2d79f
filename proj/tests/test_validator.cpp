#include "tagunion/validator.hpp"

#include "tagunion/baseline.hpp"
#include "tagunion/json_pretty.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace tagunion;

namespace {

JsonValue parse_value(const std::string& text) {
    return std::move(
        parse_documents(text, InputMode::SingleDocument).documents.front());
}

const char* kGeometryChain = R"({
  "if": {
    "properties": { "type": { "const": "Point" } },
    "required": [ "type" ] },
  "then": {
    "properties": {
      "coordinates": {
        "type": "array",
        "items": { "type": "number" } } } },
  "else": {
    "if": {
      "properties": { "type": { "const": "LineString" } },
      "required": [ "type" ] },
    "then": {
      "properties": {
        "coordinates": {
          "type": "array",
          "items": {
            "type": "array",
            "items": { "type": "number" } } } } } }
})";

} // namespace

TEST_CASE("the empty schema accepts any instance") {
    for (const char* text : {"null", "true", "3", "\"s\"", "[1]", "{\"a\": 1}"})
        CHECK(validate(parse_value(text), parse_value("{}")).valid());
}

TEST_CASE("type assertion") {
    CHECK(validate(parse_value("3"), parse_value(R"({"type": "number"})")).valid());
    CHECK(validate(parse_value("3"), parse_value(R"({"type": "integer"})")).valid());
    CHECK(!validate(parse_value("3.5"), parse_value(R"({"type": "integer"})")).valid());
    CHECK(!validate(parse_value("\"3\""), parse_value(R"({"type": "number"})")).valid());
    CHECK(validate(parse_value("null"), parse_value(R"({"type": "null"})")).valid());
}

TEST_CASE("const and enum use mathematical number equality") {
    CHECK(validate(parse_value("1.0"), parse_value(R"({"const": 1})")).valid());
    CHECK(validate(parse_value("1"), parse_value(R"({"enum": [2, 1.0]})")).valid());
    CHECK(!validate(parse_value("true"), parse_value(R"({"const": 1})")).valid());
    CHECK(!validate(parse_value("1"), parse_value(R"({"const": true})")).valid());
    CHECK(validate(parse_value(R"({"b": 2, "a": 1})"),
                   parse_value(R"({"const": {"a": 1, "b": 2}})"))
              .valid());
}

TEST_CASE("required and properties") {
    SchemaNode schema = parse_value(
        R"({"required": ["a"], "properties": {"a": {"type": "number"}}})");
    CHECK(validate(parse_value(R"({"a": 1})"), schema).valid());
    CHECK(!validate(parse_value(R"({"b": 1})"), schema).valid());
    CHECK(!validate(parse_value(R"({"a": "x"})"), schema).valid());
    // non-objects satisfy object keywords vacuously
    CHECK(validate(parse_value("3"), schema).valid());
    // unmentioned members validate vacuously
    CHECK(validate(parse_value(R"({"a": 1, "z": []})"), schema).valid());
}

TEST_CASE("geometry objects against the conditional chain") {
    SchemaNode chain = parse_value(kGeometryChain);
    CHECK(validate(parse_value(R"({"type": "Point", "coordinates": [30, 10]})"), chain)
              .valid());
    CHECK(validate(parse_value(
                       R"({"type": "LineString", "coordinates": [[55, 5], [10, 30]]})"),
                   chain)
              .valid());
    // no trailing else: unexpected tags stay unconstrained
    CHECK(validate(parse_value(R"({"type": "Polygon", "coordinates": [[[0]]]})"), chain)
              .valid());
}

TEST_CASE("a point with nested-array coordinates is located precisely") {
    SchemaNode chain = parse_value(kGeometryChain);
    ValidationResult vr =
        validate(parse_value(R"({"type": "Point", "coordinates": [[1, 2]]})"), chain);
    REQUIRE(!vr.valid());
    REQUIRE(vr.errors.size() == 1);
    CHECK(vr.errors[0].instance_path == "/coordinates/0");
    CHECK(vr.errors[0].keyword == "type");
    CHECK(vr.errors[0].message.find("number") != std::string::npos);
}

TEST_CASE("conditional law") {
    std::mt19937 rng(11211);
    SchemaNode condition = parse_value(R"({"type": "object"})");
    SchemaNode then_branch = parse_value(R"({"required": ["a"]})");
    SchemaNode else_branch = parse_value(R"({"type": "array"})");

    SchemaNode full = JsonValue::make_object();
    full.set("if", condition);
    full.set("then", then_branch);
    full.set("else", else_branch);

    SchemaNode no_else = JsonValue::make_object();
    no_else.set("if", condition);
    no_else.set("then", then_branch);

    for (int round = 0; round < 500; ++round) {
        JsonValue instance = testutil::random_value(rng, 3);
        bool cond = validate(instance, condition).valid();
        bool expect_full = cond ? validate(instance, then_branch).valid()
                                : validate(instance, else_branch).valid();
        CHECK(validate(instance, full).valid() == expect_full);
        bool expect_no_else = cond ? validate(instance, then_branch).valid() : true;
        CHECK(validate(instance, no_else).valid() == expect_no_else);
    }
}

TEST_CASE("conjunction and disjunction laws") {
    std::mt19937 rng(22322);
    for (int round = 0; round < 200; ++round) {
        JsonValue instance = testutil::random_value(rng, 3);
        CHECK(validate(instance, parse_value(R"({"allOf": []})")).valid());
        CHECK(!validate(instance, parse_value(R"({"anyOf": []})")).valid());
    }

    SchemaNode a = parse_value(R"({"type": "number"})");
    SchemaNode b = parse_value(R"({"const": 3})");
    SchemaNode all = parse_value(R"({"allOf": [{"type": "number"}, {"const": 3}]})");
    SchemaNode any = parse_value(R"({"anyOf": [{"type": "number"}, {"const": 3}]})");
    for (int round = 0; round < 200; ++round) {
        JsonValue instance = testutil::random_value(rng, 3);
        bool va = validate(instance, a).valid();
        bool vb = validate(instance, b).valid();
        CHECK(validate(instance, all).valid() == (va && vb));
        CHECK(validate(instance, any).valid() == (va || vb));
    }
}

TEST_CASE("unsupported keywords warn and are ignored") {
    SchemaNode schema = parse_value(
        R"({"pattern": "^a", "type": "string", "patternProperties": {}, "$ref": "#/x"})");
    ValidationResult vr = validate(parse_value("\"abc\""), schema);
    CHECK(vr.valid());
    CHECK(vr.warnings.size() == 3);

    // annotations stay silent
    SchemaNode annotated = parse_value(
        R"({"title": "t", "description": "d", "$comment": "c", "type": "string"})");
    CHECK(validate(parse_value("\"abc\""), annotated).warnings.empty());
}

TEST_CASE("malformed schemas raise schema errors, not invalidity") {
    CHECK_THROWS_AS(validate(parse_value("1"), parse_value("[]")), SchemaError);
    CHECK_THROWS_AS(validate(parse_value("1"), parse_value(R"({"type": "float"})")),
                    SchemaError);
    CHECK_THROWS_AS(validate(parse_value("1"), parse_value(R"({"type": 3})")),
                    SchemaError);
    CHECK_THROWS_AS(validate(parse_value("1"), parse_value(R"({"allOf": {}})")),
                    SchemaError);
    CHECK_THROWS_AS(validate(parse_value("1"), parse_value(R"({"enum": 3})")),
                    SchemaError);
    CHECK_THROWS_AS(
        validate(parse_value(R"({"a": 1})"), parse_value(R"({"properties": []})")),
        SchemaError);
    CHECK_THROWS_AS(
        validate(parse_value(R"({"a": 1})"), parse_value(R"({"required": [1]})")),
        SchemaError);
}

TEST_CASE("error paths escape pointer characters") {
    SchemaNode schema =
        parse_value(R"({"properties": {"a/b": {"type": "number"}}})");
    ValidationResult vr = validate(parse_value(R"({"a/b": "x"})"), schema);
    REQUIRE(!vr.valid());
    CHECK(vr.errors[0].instance_path == "/a~1b");
}
