#pragma once

// Minimal JSON Schema checker covering the subset used by the shipped
// schemas: type, properties, required, items, anyOf, additionalProperties.

#include <string>

#include <json.hpp>

namespace schema_check {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate(const nlohmann::json& value, const nlohmann::json& schema,
                     std::string* error, const std::string& path = "$") {
  if (schema.contains("anyOf")) {
    for (const auto& sub : schema.at("anyOf")) {
      std::string ignored;
      if (validate(value, sub, &ignored, path)) return true;
    }
    if (error) *error = path + ": no anyOf branch matched";
    return false;
  }
  if (schema.contains("type") &&
      !type_matches(value, schema.at("type").get<std::string>())) {
    if (error)
      *error = path + ": expected " + schema.at("type").get<std::string>();
    return false;
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          if (error) *error = path + ": missing " + key.get<std::string>();
          return false;
        }
      }
    }
    const bool closed = schema.contains("additionalProperties") &&
                        schema.at("additionalProperties").is_boolean() &&
                        !schema.at("additionalProperties").get<bool>();
    for (const auto& [key, sub] : value.items()) {
      if (schema.contains("properties") && schema.at("properties").contains(key)) {
        if (!validate(sub, schema.at("properties").at(key), error,
                      path + "." + key))
          return false;
      } else if (closed) {
        if (error) *error = path + ": unexpected property " + key;
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (!validate(value[i], schema.at("items"), error,
                    path + "[" + std::to_string(i) + "]"))
        return false;
    }
  }
  return true;
}

}  // namespace schema_check
