#pragma once

#include "tagunion/json_parse.hpp"
#include "tagunion/json_value.hpp"

#include <random>
#include <string>

#ifndef TESTS_DATA_DIR
#define TESTS_DATA_DIR "tests/data"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(TESTS_DATA_DIR) + "/" + name;
}

inline std::string load_fixture(const std::string& name) {
    return tagunion::read_file(fixture_path(name));
}

inline tagunion::DocumentCollection
parse_fixture(const std::string& name,
              tagunion::InputMode mode = tagunion::InputMode::SingleDocument) {
    return tagunion::parse_documents(load_fixture(name), mode);
}

/// Small random JSON value, bounded in depth and width.
inline tagunion::JsonValue random_value(std::mt19937& rng, int depth = 3) {
    using tagunion::JsonValue;
    std::uniform_int_distribution<int> kind_dist(0, depth > 0 ? 5 : 3);
    std::uniform_int_distribution<int> width_dist(0, 3);
    std::uniform_int_distribution<int> int_dist(-20, 20);
    std::uniform_int_distribution<int> letter(0, 25);

    switch (kind_dist(rng)) {
    case 0: return JsonValue::make_null();
    case 1: return JsonValue::make_bool(rng() % 2 == 0);
    case 2:
        if (rng() % 3 == 0)
            return JsonValue::make_number(int_dist(rng) / 4.0);
        return JsonValue::make_number(static_cast<std::int64_t>(int_dist(rng)));
    case 3: {
        std::string s(1 + rng() % 3, 'a');
        for (auto& c : s)
            c = static_cast<char>('a' + letter(rng));
        return JsonValue::make_string(s);
    }
    case 4: {
        JsonValue arr = JsonValue::make_array();
        int n = width_dist(rng);
        for (int k = 0; k < n; ++k)
            arr.push_back(random_value(rng, depth - 1));
        return arr;
    }
    default: {
        JsonValue obj = JsonValue::make_object();
        int n = width_dist(rng);
        for (int k = 0; k < n; ++k) {
            std::string label(1, static_cast<char>('a' + k));
            obj.set(label, random_value(rng, depth - 1));
        }
        return obj;
    }
    }
}

} // namespace testutil
