// Minimal JSON-Schema-subset validator for the report schema: type,
// required, properties, additionalProperties, enum, items, pattern.
#ifndef ADIC_TESTS_SCHEMA_CHECK_HPP
#define ADIC_TESTS_SCHEMA_CHECK_HPP

#include <json.hpp>

#include <regex>
#include <string>

namespace adic::testsupport {

inline bool validates(const nlohmann::json& value, const nlohmann::json& schema,
                      std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return fail("not an object");
        if (t == "array" && !value.is_array()) return fail("not an array");
        if (t == "string" && !value.is_string()) return fail("not a string");
        if (t == "integer" && !value.is_number_integer()) return fail("not an integer");
        if (t == "number" && !value.is_number()) return fail("not a number");
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema["enum"])
            if (value == e) ok = true;
        if (!ok) return fail("value not in enum");
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re))
            return fail("pattern mismatch");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!value.contains(k.get<std::string>()))
                    return fail("missing required key " + k.get<std::string>());
        const nlohmann::json props =
            schema.value("properties", nlohmann::json::object());
        bool extra_ok = schema.value("additionalProperties", true);
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validates(it.value(), props[it.key()], why)) {
                    if (why) *why = it.key() + ": " + *why;
                    return false;
                }
            } else if (!extra_ok) {
                return fail("unexpected key " + it.key());
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& el : value)
            if (!validates(el, schema["items"], why)) return false;
    }
    return true;
}

} // namespace adic::testsupport

#endif
