#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace gradealg {

using json = nlohmann::ordered_json;

/// Validator for the JSON Schema subset used by the published schemas:
/// type, enum, const, properties, required, additionalProperties (boolean),
/// items, minItems, minimum, oneOf, anyOf and $ref into #/$defs.
class SchemaValidator {
public:
    explicit SchemaValidator(json schema) : root_(std::move(schema)) {}

    std::vector<std::string> errors(const json& doc) const {
        std::vector<std::string> out;
        check(root_, doc, "$", out);
        return out;
    }

    bool valid(const json& doc) const { return errors(doc).empty(); }

private:
    const json& resolve(const json& s) const {
        if (!s.is_object() || !s.contains("$ref")) return s;
        const std::string ref = s["$ref"];
        const std::string prefix = "#/$defs/";
        if (ref.rfind(prefix, 0) != 0) throw std::logic_error("unsupported $ref " + ref);
        return resolve(root_.at("$defs").at(ref.substr(prefix.size())));
    }

    static bool has_type(const json& v, const std::string& t) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        throw std::logic_error("unknown schema type " + t);
    }

    void check(const json& schema, const json& v, const std::string& path, std::vector<std::string>& out) const {
        const json& s = resolve(schema);
        if (s.is_boolean()) {
            if (!s.get<bool>()) out.push_back(path + ": not allowed");
            return;
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
            } else {
                ok = has_type(v, s["type"].get<std::string>());
            }
            if (!ok) {
                out.push_back(path + ": expected type " + s["type"].dump());
                return;
            }
        }
        if (s.contains("const") && v != s["const"]) out.push_back(path + ": expected " + s["const"].dump());
        if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
            out.push_back(path + ": value " + v.dump() + " not in " + s["enum"].dump());
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
            out.push_back(path + ": below minimum " + s["minimum"].dump());

        if (v.is_object()) {
            if (s.contains("required"))
                for (const auto& key : s["required"])
                    if (!v.contains(key.get<std::string>())) out.push_back(path + ": missing '" + key.get<std::string>() + "'");
            const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
            for (const auto& [key, val] : v.items()) {
                if (s.contains("properties") && s["properties"].contains(key))
                    check(s["properties"][key], val, path + "." + key, out);
                else if (closed)
                    out.push_back(path + ": unexpected property '" + key + "'");
            }
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>())
                out.push_back(path + ": fewer than " + s["minItems"].dump() + " items");
            if (s.contains("items"))
                for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], path + "[" + std::to_string(i) + "]", out);
        }
        if (s.contains("oneOf")) {
            int matches = 0;
            for (const auto& alt : s["oneOf"]) {
                std::vector<std::string> sub;
                check(alt, v, path, sub);
                if (sub.empty()) ++matches;
            }
            if (matches != 1) out.push_back(path + ": matches " + std::to_string(matches) + " alternatives of oneOf");
        }
        if (s.contains("anyOf")) {
            bool any = false;
            for (const auto& alt : s["anyOf"]) {
                std::vector<std::string> sub;
                check(alt, v, path, sub);
                any = any || sub.empty();
            }
            if (!any) out.push_back(path + ": matches no alternative of anyOf");
        }
    }

    json root_;
};

}  // namespace gradealg
