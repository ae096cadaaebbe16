#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "chromatic/analysis.hpp"
#include "chromatic/identities.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/stirling.hpp"

namespace chromatic {

// All numbers cross the JSON boundary as decimal strings so arbitrary
// precision survives any consumer.  ordered_json keeps the canonical key
// order {family, r_vec, n_max, rows}, making dumps byte-reproducible.
using json = nlohmann::ordered_json;

inline json poly_to_json(const int_poly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).str());
    return a;
}

inline int_poly poly_from_json(const json& a) {
    if (!a.is_array()) throw parse_error("polynomial json: expected array");
    std::vector<Integer> c;
    for (const auto& v : a) c.emplace_back(v.get<std::string>());
    return int_poly(std::move(c));
}

inline json ff_to_json(const falling_factorial_form& f) {
    json a = json::array();
    for (int k = 0; k <= f.max_index(); ++k) a.push_back(f.coeff(k).str());
    return a;
}

inline json table_to_json(const triangle_table<Integer>& t) {
    json j;
    j["family"] = t.family();
    j["r_vec"] = t.r_vec();
    j["n_max"] = t.n_max();
    json rows = json::array();
    for (int n = 0; n <= t.n_max(); ++n) {
        json row = json::array();
        for (int k = 0; k <= n; ++k) row.push_back(t.at(n, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline triangle_table<Integer> table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("r_vec") || !j.contains("n_max") ||
        !j.contains("rows"))
        throw parse_error("triangle json: missing field");
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j.at("rows")) {
        std::vector<Integer> r;
        for (const auto& v : row) r.emplace_back(v.get<std::string>());
        rows.push_back(std::move(r));
    }
    triangle_table<Integer> t(j.at("family").get<std::string>(),
                              j.at("r_vec").get<std::vector<int>>(), std::move(rows));
    if (t.n_max() != j.at("n_max").get<int>())
        throw parse_error("triangle json: n_max does not match rows");
    return t;
}

inline json verdict_to_json(const sequence_verdict& v) {
    json j;
    std::string prop = to_string(v.property);
    if (v.property == sequence_property::pf_up_to_order)
        prop += "(" + std::to_string(v.order) + ")";
    j["property"] = prop;
    j["holds"] = v.holds;
    j["witness"] = v.witness;
    return j;
}

inline json report_to_json(const verification_report& r) {
    json j;
    j["identity"] = r.identity;
    j["scope"] = r.scope;
    j["instances"] = r.instances;
    j["pass"] = r.pass;
    j["counterexample"] = r.counterexample;
    return j;
}

inline void save_table(const std::filesystem::path& path, const triangle_table<Integer>& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << table_to_json(t).dump() << '\n';
}

inline triangle_table<Integer> load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    json j;
    in >> j;
    return table_from_json(j);
}

inline std::string table_cache_name(const std::string& family, const std::vector<int>& r_vec,
                                    int n_max) {
    std::string name = family;
    if (!r_vec.empty()) {
        name += "_r";
        for (std::size_t i = 0; i < r_vec.size(); ++i)
            name += (i ? "-" : "") + std::to_string(r_vec[i]);
    }
    return name + "_n" + std::to_string(n_max) + ".json";
}

// Disk-backed table lookup keyed by (family, r_vec, n_max): reuse the
// cached file when present and well-formed, otherwise generate and save.
template <typename Generate>
inline triangle_table<Integer> load_or_generate(const std::filesystem::path& cache_dir,
                                                const std::string& family,
                                                const std::vector<int>& r_vec, int n_max,
                                                Generate&& generate) {
    std::filesystem::create_directories(cache_dir);
    std::filesystem::path file = cache_dir / table_cache_name(family, r_vec, n_max);
    if (std::filesystem::exists(file)) {
        triangle_table<Integer> t = load_table(file);
        if (t.family() == family && t.r_vec() == r_vec && t.n_max() == n_max) return t;
    }
    triangle_table<Integer> t = generate();
    save_table(file, t);
    return t;
}

} // namespace chromatic
