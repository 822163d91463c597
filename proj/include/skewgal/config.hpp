#pragma once

// JSON job configuration: named algebras, named extension fixtures, and a
// task list. Rationals travel as strings (or integers) so nothing is ever
// rounded. Schema problems throw ConfigError, which the CLI maps to its own
// exit code, distinct from verification failure.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewgal/galois_ext.hpp"
#include "skewgal/normform.hpp"
#include "skewgal/structalg.hpp"

namespace skewgal {

struct ConfigError : Error {
    using Error::Error;
};

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace cfg_detail {

inline Rat rat_from_json(const json& v, const std::string& where) {
    if (v.is_string()) return Rat::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw ConfigError(where + ": rationals must be strings like \"3/2\" or integers");
}

inline Poly<Rat> tpoly_from_json(const json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + ": expected an array of coefficients (low degree first)");
    std::vector<Rat> c;
    for (const auto& x : v) c.push_back(rat_from_json(x, where));
    return Poly<Rat>(std::move(c));
}

inline KRatFunc ratfunc_from_json(const json& v, const std::string& where) {
    if (v.is_array()) return KRatFunc(tpoly_from_json(v, where));
    if (v.is_object()) {
        if (!v.contains("num")) throw ConfigError(where + ": rational function object needs \"num\"");
        Poly<Rat> num = tpoly_from_json(v.at("num"), where + ".num");
        Poly<Rat> den = v.contains("den") ? tpoly_from_json(v.at("den"), where + ".den")
                                          : Poly<Rat>::constant(Rat(1));
        if (den.is_zero()) throw ConfigError(where + ": zero denominator");
        return KRatFunc(num, den);
    }
    throw ConfigError(where + ": expected a coefficient array or {num, den} object");
}

inline YPoly ypoly_from_json(const json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + ": expected an array of y-coefficients");
    std::vector<KRatFunc> c;
    for (std::size_t k = 0; k < v.size(); ++k)
        c.push_back(ratfunc_from_json(v[k], where + "[" + std::to_string(k) + "]"));
    return YPoly(std::move(c));
}

} // namespace cfg_detail

struct JobConfig {
    std::uint64_t seed = 0;
    int order = 16;
    std::map<std::string, StructureAlgebra<Rat>> algebras;
    std::map<std::string, ExtensionPresentation> extensions;
    json tasks; // validated per task by the runner
    std::string raw;
};

inline StructureAlgebra<Rat> algebra_from_json(const json& a) {
    if (!a.is_object() || !a.contains("type")) throw ConfigError("algebra entries need a \"type\"");
    std::string type = a.at("type").get<std::string>();
    using cfg_detail::rat_from_json;
    if (type == "quaternion") {
        if (!a.contains("a") || !a.contains("b")) throw ConfigError("quaternion algebra needs \"a\" and \"b\"");
        return quaternion_algebra(rat_from_json(a.at("a"), "a"), rat_from_json(a.at("b"), "b"));
    }
    if (type == "matrix" || type == "matrix-units") {
        if (!a.contains("n")) throw ConfigError("matrix algebra needs \"n\"");
        int n = a.at("n").get<int>();
        if (n < 1 || n > 6) throw ConfigError("matrix algebra size out of range");
        return type == "matrix" ? matrix_algebra(n, Rat(1)).alg : matrix_algebra_units(n, Rat(1)).alg;
    }
    if (type == "quotient") {
        if (!a.contains("modulus")) throw ConfigError("quotient algebra needs \"modulus\"");
        return quotient_algebra(cfg_detail::tpoly_from_json(a.at("modulus"), "modulus"));
    }
    if (type == "upper-triangular-2") return upper_triangular2(Rat(1));
    if (type == "table") {
        if (!a.contains("dim") || !a.contains("table")) throw ConfigError("table algebra needs \"dim\" and \"table\"");
        int d = a.at("dim").get<int>();
        const json& t = a.at("table");
        if (!t.is_array() || static_cast<int>(t.size()) != d * d)
            throw ConfigError("structure table must list dim*dim rows (i-major)");
        std::vector<Vec<Rat>> tbl;
        for (const auto& row : t) {
            if (!row.is_array() || static_cast<int>(row.size()) != d)
                throw ConfigError("structure vectors must have length dim");
            Vec<Rat> v;
            for (const auto& x : row) v.push_back(rat_from_json(x, "table"));
            tbl.push_back(std::move(v));
        }
        return StructureAlgebra<Rat>(d, std::move(tbl));
    }
    throw ConfigError("unknown algebra type \"" + type + "\"");
}

inline ExtensionPresentation extension_from_json(const json& e) {
    if (!e.is_object() || !e.contains("min_poly") || !e.contains("automorphisms"))
        throw ConfigError("extension entries need \"min_poly\" and \"automorphisms\"");
    ExtensionPresentation out;
    if (e.contains("name")) out.name = e.at("name").get<std::string>();
    out.min_poly = cfg_detail::ypoly_from_json(e.at("min_poly"), "min_poly");
    for (std::size_t i = 0; i < e.at("automorphisms").size(); ++i)
        out.automorphisms.push_back(
            {cfg_detail::ypoly_from_json(e.at("automorphisms")[i], "automorphisms[" + std::to_string(i) + "]")});
    return out;
}

inline JobConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be an object");
    JobConfig out;
    out.raw = text;
    if (doc.contains("seed")) out.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("order")) out.order = doc.at("order").get<int>();
    if (out.order < 2) throw ConfigError("series order must be >= 2");
    if (doc.contains("algebras")) {
        for (const auto& a : doc.at("algebras")) {
            if (!a.contains("name")) throw ConfigError("algebra entries need a \"name\"");
            out.algebras.emplace(a.at("name").get<std::string>(), algebra_from_json(a));
        }
    }
    if (doc.contains("extensions")) {
        for (const auto& e : doc.at("extensions")) {
            if (!e.contains("name")) throw ConfigError("extension entries need a \"name\"");
            out.extensions.emplace(e.at("name").get<std::string>(), extension_from_json(e));
        }
    }
    if (!doc.contains("tasks") || !doc.at("tasks").is_array() || doc.at("tasks").empty())
        throw ConfigError("config needs a nonempty \"tasks\" array");
    for (const auto& t : doc.at("tasks")) {
        if (!t.is_object() || !t.contains("name") || !t.contains("type"))
            throw ConfigError("task entries need \"name\" and \"type\"");
    }
    // task names must be unique so every configured task appears exactly once
    {
        std::vector<std::string> names;
        for (const auto& t : doc.at("tasks")) names.push_back(t.at("name").get<std::string>());
        std::sort(names.begin(), names.end());
        for (std::size_t i = 1; i < names.size(); ++i)
            if (names[i] == names[i - 1]) throw ConfigError("duplicate task name \"" + names[i] + "\"");
    }
    out.tasks = doc.at("tasks");
    return out;
}

inline const StructureAlgebra<Rat>& resolve_algebra(const JobConfig& cfg, const json& task, const char* key) {
    if (!task.contains(key)) throw ConfigError("task \"" + task.at("name").get<std::string>() + "\" needs \"" + key + "\"");
    std::string name = task.at(key).get<std::string>();
    auto it = cfg.algebras.find(name);
    if (it == cfg.algebras.end()) throw ConfigError("task references unknown algebra \"" + name + "\"");
    return it->second;
}

inline const ExtensionPresentation& resolve_extension(const JobConfig& cfg, const json& task, const char* key) {
    if (!task.contains(key)) throw ConfigError("task \"" + task.at("name").get<std::string>() + "\" needs \"" + key + "\"");
    std::string name = task.at(key).get<std::string>();
    auto it = cfg.extensions.find(name);
    if (it == cfg.extensions.end()) throw ConfigError("task references unknown extension \"" + name + "\"");
    return it->second;
}

inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

} // namespace skewgal
