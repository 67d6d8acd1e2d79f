#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tagunion {

/// Syntax or structural error while reading JSON input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t byte_offset, std::size_t document_index)
        : std::runtime_error(std::move(message)),
          byte_offset(byte_offset),
          document_index(document_index) {}

    std::size_t byte_offset = 0;
    std::size_t document_index = 0;
};

/// Invalid configuration (threshold out of range, unknown option value, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unusable input (missing file, empty document collection, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed schema handed to the validator; distinct from instance invalidity.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tagunion
