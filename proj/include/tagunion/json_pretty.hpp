#pragma once

#include "tagunion/json_value.hpp"

#include <string>

namespace tagunion {

/// Canonical 2-space pretty-printer. Layout rules, chosen so that object
/// identifiers derived from line numbers are stable and unique per path:
///   - an object opens with its first member on the brace line, each further
///     member on its own line, and the closing brace trailing the last member;
///   - an array whose items are all basic values (or arrays thereof) renders
///     on one line; any array containing an object renders one item per line
///     with the closing bracket on its own line;
///   - numbers render in their canonical text form.
std::string render_pretty(const JsonValue& value);

/// Number of lines render_pretty would produce.
int line_count(const JsonValue& value);

/// Stores in every node the 1-based line at which it starts under
/// render_pretty, and propagates `doc_index`. Run once per parsed document.
void assign_locations(JsonValue& value, std::int32_t doc_index);

} // namespace tagunion
