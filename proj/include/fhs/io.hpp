#pragma once

/**
 * @file io.hpp
 * @brief Canonical JSON files for sequence sets, labelings and plans.
 *
 * Canonical form: UTF-8, keys sorted, no whitespace, integers only, one
 * trailing newline. Serializing a parsed canonical file reproduces it byte
 * for byte.
 *
 *   {"alphabet":{"factors":[13,7],"kind":"product","size":91},
 *    "label":"...","meta":{...},"sequences":[[...],...],
 *    "type":"sequence_set","version":1}
 *   {"capacity":12,"type":"labeling","values":[[...],...],"version":1}
 *   {"steps":[{"a":1,"method":"c1","p":13}],"type":"plan","version":1}
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fhs/error.hpp"
#include "fhs/labeling.hpp"
#include "fhs/plan.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

using json = nlohmann::json;

inline constexpr int format_version = 1;
inline constexpr const char* product_encoding_note = "index = c*|F| + f, left coordinate major";

struct SequenceSetFile {
    FhsSet set;
    json meta = json::object();
};

namespace detail {

inline std::string canonical(const json& j) { return j.dump() + "\n"; }

inline json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw parse_error(e.what(), line);
    }
}

inline void reject_floats(const json& j, const std::string& where) {
    if (j.is_number_float())
        throw parse_error("field '" + where + "': floating-point values are not allowed");
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            reject_floats(j[i], where + "[" + std::to_string(i) + "]");
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            reject_floats(v, where + "." + k);
    }
}

inline const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object())
        throw parse_error("'" + where + "' must be an object");
    auto it = j.find(name);
    if (it == j.end())
        throw parse_error("missing field '" + (where.empty() ? "" : where + ".") + name + "'");
    return *it;
}

inline u64 as_uint(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw parse_error("field '" + where + "': expected a non-negative integer");
    return j.get<u64>();
}

inline std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string())
        throw parse_error("field '" + where + "': expected a string");
    return j.get<std::string>();
}

inline std::vector<std::vector<u64>> as_matrix(const json& j, const std::string& where) {
    if (!j.is_array())
        throw parse_error("field '" + where + "': expected an array of integer arrays");
    std::vector<std::vector<u64>> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array())
            throw parse_error("field '" + w + "': expected an integer array");
        std::vector<u64> row;
        row.reserve(j[i].size());
        for (std::size_t t = 0; t < j[i].size(); ++t)
            row.push_back(as_uint(j[i][t], w + "[" + std::to_string(t) + "]"));
        out.push_back(std::move(row));
    }
    return out;
}

inline void check_header(const json& j, const char* type) {
    if (!j.is_object())
        throw parse_error("top level must be a JSON object");
    const auto t = as_string(field(j, "type", ""), "type");
    if (t != type)
        throw parse_error("expected type '" + std::string(type) + "', found '" + t + "'");
    const auto v = as_uint(field(j, "version", ""), "version");
    if (v != static_cast<u64>(format_version))
        throw parse_error("unsupported format version " + std::to_string(v));
    reject_floats(j, "$");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw invalid_input("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw invalid_input("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw invalid_input("write to '" + path + "' failed");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Sequence sets
// ---------------------------------------------------------------------------

inline json alphabet_to_json(const Alphabet& a) {
    return {{"kind", a.kind == Alphabet::Kind::plain ? "plain" : "product"},
            {"size", a.size},
            {"factors", a.factors}};
}

inline json set_to_json(const FhsSet& s, json meta = json::object()) {
    if (!meta.is_object())
        throw invalid_input("sequence set meta must be a JSON object");
    detail::reject_floats(meta, "meta");
    if (s.alphabet().kind == Alphabet::Kind::product && !meta.contains("symbol_encoding"))
        meta["symbol_encoding"] = product_encoding_note;
    json j = {{"type", "sequence_set"},
              {"version", format_version},
              {"alphabet", alphabet_to_json(s.alphabet())},
              {"sequences", s.sequences()},
              {"meta", std::move(meta)}};
    if (s.label())
        j["label"] = *s.label();
    return j;
}

inline std::string serialize_set(const FhsSet& s, json meta = json::object()) {
    return detail::canonical(set_to_json(s, std::move(meta)));
}

inline SequenceSetFile set_from_json(const json& j) {
    detail::check_header(j, "sequence_set");
    const auto& a = detail::field(j, "alphabet", "");
    const auto kind = detail::as_string(detail::field(a, "kind", "alphabet"), "alphabet.kind");
    Alphabet alphabet;
    if (kind == "plain")
        alphabet.kind = Alphabet::Kind::plain;
    else if (kind == "product")
        alphabet.kind = Alphabet::Kind::product;
    else
        throw parse_error("field 'alphabet.kind': expected 'plain' or 'product', found '" + kind + "'");
    alphabet.size = detail::as_uint(detail::field(a, "size", "alphabet"), "alphabet.size");
    const auto& factors = detail::field(a, "factors", "alphabet");
    if (!factors.is_array())
        throw parse_error("field 'alphabet.factors': expected an integer array");
    for (std::size_t i = 0; i < factors.size(); ++i)
        alphabet.factors.push_back(detail::as_uint(factors[i], "alphabet.factors[" + std::to_string(i) + "]"));

    auto sequences = detail::as_matrix(detail::field(j, "sequences", ""), "sequences");
    std::optional<std::string> label;
    if (auto it = j.find("label"); it != j.end())
        label = detail::as_string(*it, "label");
    json meta = json::object();
    if (auto it = j.find("meta"); it != j.end()) {
        if (!it->is_object())
            throw parse_error("field 'meta': expected an object");
        meta = *it;
    }
    return SequenceSetFile{FhsSet(std::move(alphabet), std::move(sequences), std::move(label)), std::move(meta)};
}

inline SequenceSetFile parse_set(std::string_view text) { return set_from_json(detail::parse_text(text)); }

inline void save_set(const FhsSet& s, const std::string& path, json meta = json::object()) {
    detail::write_file(path, serialize_set(s, std::move(meta)));
}

inline SequenceSetFile load_set_file(const std::string& path) {
    try {
        return parse_set(detail::read_file(path));
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what(), e.line());
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

inline FhsSet load_set(const std::string& path) { return load_set_file(path).set; }

// ---------------------------------------------------------------------------
// Labelings
// ---------------------------------------------------------------------------

inline std::string serialize_labeling(const Labeling& w) {
    return detail::canonical(
        {{"type", "labeling"}, {"version", format_version}, {"capacity", w.capacity}, {"values", w.values}});
}

inline Labeling parse_labeling(std::string_view text) {
    const json j = detail::parse_text(text);
    detail::check_header(j, "labeling");
    Labeling w;
    w.capacity = detail::as_uint(detail::field(j, "capacity", ""), "capacity");
    w.values = detail::as_matrix(detail::field(j, "values", ""), "values");
    return w;
}

inline void save_labeling(const Labeling& w, const std::string& path) {
    detail::write_file(path, serialize_labeling(w));
}

inline Labeling load_labeling(const std::string& path) { return parse_labeling(detail::read_file(path)); }

// ---------------------------------------------------------------------------
// Plans
// ---------------------------------------------------------------------------

inline std::string serialize_plan(const std::vector<StepRequest>& steps) {
    json arr = json::array();
    for (const auto& s : steps)
        arr.push_back({{"method", method_name(s.kind)}, {"p", s.prime_power.p}, {"a", s.prime_power.a}});
    return detail::canonical({{"type", "plan"}, {"version", format_version}, {"steps", std::move(arr)}});
}

inline std::vector<StepRequest> parse_plan(std::string_view text) {
    const json j = detail::parse_text(text);
    detail::check_header(j, "plan");
    const auto& arr = detail::field(j, "steps", "");
    if (!arr.is_array())
        throw parse_error("field 'steps': expected an array");
    std::vector<StepRequest> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = "steps[" + std::to_string(i) + "]";
        const auto method = detail::as_string(detail::field(arr[i], "method", w), w + ".method");
        const u64 p = detail::as_uint(detail::field(arr[i], "p", w), w + ".p");
        const u64 a = detail::as_uint(detail::field(arr[i], "a", w), w + ".a");
        if (a > 64)
            throw parse_error("field '" + w + ".a': exponent too large");
        try {
            out.push_back({parse_method(method), PrimePower::make(p, static_cast<unsigned>(a))});
        } catch (const invalid_input& e) {
            throw parse_error("field '" + w + "': " + e.what());
        }
    }
    return out;
}

inline void save_plan(const std::vector<StepRequest>& steps, const std::string& path) {
    detail::write_file(path, serialize_plan(steps));
}

inline std::vector<StepRequest> load_plan(const std::string& path) { return parse_plan(detail::read_file(path)); }

} // namespace fhs
