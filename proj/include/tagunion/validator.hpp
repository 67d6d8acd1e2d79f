#pragma once

#include "tagunion/emitter.hpp"
#include "tagunion/errors.hpp"
#include "tagunion/json_value.hpp"

#include <string>
#include <vector>

namespace tagunion {

struct ValidationError {
    std::string instance_path; ///< JSON Pointer into the instance
    std::string keyword;
    std::string message;
};

struct ValidationResult {
    std::vector<ValidationError> errors;
    std::vector<std::string> warnings; ///< unsupported keywords encountered

    bool valid() const { return errors.empty(); }
};

/// Draft-07 validation over the supported subset: type, properties, items
/// (uniform), required, const, enum, allOf, anyOf, if/then/else. Annotation
/// keywords are ignored silently; any other keyword is ignored with a
/// warning. Throws SchemaError when the schema itself is malformed, which is
/// distinct from instance invalidity.
ValidationResult validate(const JsonValue& instance, const SchemaNode& schema);

} // namespace tagunion
