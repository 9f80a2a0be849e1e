#pragma once

#include <fstream>

#include <json.hpp>

#include "mumo/builtins.hpp"
#include "mumo/residue.hpp"

namespace mumo {

using Json = nlohmann::json;

namespace detail {

inline std::int64_t small_int(const Int& x, const char* what) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        throw Error(std::string(what) + " too large for the JSON wire format");
    return x.convert_to<std::int64_t>();
}

inline Json int_vec_json(const LatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(small_int(x, "lattice coordinate"));
    return a;
}

inline LatVec lat_vec_from(const Json& a, const char* what) {
    if (!a.is_array()) throw Error(std::string(what) + ": expected an array of integers");
    LatVec v;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw Error(std::string(what) + ": expected integers");
        v.push_back(Int(x.get<std::int64_t>()));
    }
    return v;
}

}  // namespace detail

// Fan <-> {"rank": N, "rays": [[int,...],...], "max_cones": [[ray indices],...]}

inline Json fan_to_json(const Fan& fan) {
    Json j;
    j["rank"] = fan.rank;
    j["rays"] = Json::array();
    for (const auto& r : fan.rays) j["rays"].push_back(detail::int_vec_json(r));
    j["max_cones"] = Json::array();
    for (const auto& c : fan.max_cones) j["max_cones"].push_back(c.ray_indices);
    return j;
}

inline Fan fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("max_cones"))
        throw Error("fan JSON needs fields rank, rays, max_cones");
    int rank = j.at("rank").get<int>();
    std::vector<LatVec> rays;
    for (const auto& r : j.at("rays")) rays.push_back(detail::lat_vec_from(r, "fan ray"));
    std::vector<Cone> cones;
    for (const auto& c : j.at("max_cones")) {
        if (!c.is_array()) throw Error("fan max_cones: expected arrays of ray indices");
        cones.emplace_back(c.get<std::vector<int>>());
    }
    return Fan(rank, std::move(rays), std::move(cones));
}

// Partition <-> {"blocks": [[ray indices],...]}

inline Json partition_to_json(const Partition& p) {
    Json j;
    j["blocks"] = p.blocks;
    return j;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks"))
        throw Error("partition JSON needs field blocks");
    Partition p;
    for (const auto& b : j.at("blocks")) {
        if (!b.is_array()) throw Error("partition blocks: expected arrays of ray indices");
        p.blocks.push_back(b.get<std::vector<int>>());
    }
    return p;
}

// Section <-> {"coeffs": [{"nu": [int,...], "c": "p/q"},...]}

inline Json section_to_json(const Section& s) {
    Json j;
    j["coeffs"] = Json::array();
    for (const auto& [nu, c] : s.coeffs) {
        Json e;
        e["nu"] = detail::int_vec_json(nu);
        e["c"] = to_string(c);
        j["coeffs"].push_back(e);
    }
    return j;
}

inline Section section_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw Error("section JSON needs field coeffs");
    Section s;
    for (const auto& e : j.at("coeffs")) {
        LatVec nu = detail::lat_vec_from(e.at("nu"), "section nu");
        Rat c = e.at("c").is_string() ? rat_from_string(e.at("c").get<std::string>())
                                      : Rat(e.at("c").get<std::int64_t>());
        s.set(nu, c);
    }
    return s;
}

/// Sections file: either a single section object or {"sections": [...]}
/// with one entry per partition block.
inline std::vector<Section> sections_from_json(const Json& j) {
    std::vector<Section> out;
    if (j.is_object() && j.contains("sections")) {
        for (const auto& e : j.at("sections")) out.push_back(section_from_json(e));
    } else {
        out.push_back(section_from_json(j));
    }
    return out;
}

// Laurent polynomial <-> {"vars": N, "terms": [{"exp": [...], "coeff_t": ["p/q",...]}]}

inline Json laurent_to_json(const LaurentPoly& p) {
    Json j;
    j["vars"] = p.nvars;
    j["terms"] = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json t;
        t["exp"] = e;
        t["coeff_t"] = Json::array();
        for (const auto& q : c.c) t["coeff_t"].push_back(to_string(q));
        j["terms"].push_back(t);
    }
    return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p(j.at("vars").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        TPoly c;
        for (const auto& q : t.at("coeff_t")) c.c.push_back(rat_from_string(q.get<std::string>()));
        c.normalize();
        p.add_term(e, c);
    }
    return p;
}

inline Json period_to_json(const PeriodSeries& ps) {
    Json j;
    j["normalization"] = ps.normalization;
    j["coeffs"] = Json::array();
    for (const auto& c : ps.coeffs) j["coeffs"].push_back(to_string(c));
    return j;
}

// Polytope <-> {"vertices": [[.,.],...]}  (facets derived on load)

inline Json polytope_to_json(const Polytope& p) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices) {
        Json row = Json::array();
        for (const auto& q : v) row.push_back(to_string(q));
        j["vertices"].push_back(row);
    }
    return j;
}

inline Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw Error("polytope JSON needs field vertices");
    std::vector<RatVec> pts;
    for (const auto& row : j.at("vertices")) {
        RatVec v;
        for (const auto& q : row)
            v.push_back(q.is_string() ? rat_from_string(q.get<std::string>())
                                      : Rat(q.get<std::int64_t>()));
        pts.push_back(std::move(v));
    }
    if (pts.empty()) throw Error("polytope JSON lists no vertices");
    return polytope_from_points(int(pts[0].size()), pts);
}

// Cell complex -> {"cells": {"0": [...], "1": [...], ...}}

inline Json complex_to_json(const CellComplex& cx) {
    Json cells = Json::object();
    for (int d = 0; d <= cx.top_dim(); ++d) {
        Json layer = Json::array();
        for (const auto& cell : cx.cells[d]) layer.push_back(cell);
        cells[std::to_string(d)] = layer;
    }
    Json j;
    j["cells"] = cells;
    return j;
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["entries"] = Json::array();
    for (const auto& e : m.entries) j["entries"].push_back(detail::small_int(e, "matrix entry"));
    return j;
}

inline IntMatrix matrix_from_json(const Json& j) {
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& es = j.at("entries");
    if (int(es.size()) != m.rows * m.cols)
        throw Error("matrix entries do not match rows x cols");
    for (std::size_t i = 0; i < es.size(); ++i) m.entries[i] = Int(es[i].get<std::int64_t>());
    return m;
}

// ---------------------------------------------------------------------------
// File plumbing.

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

/// FNV-1a 64-bit content hash, hex encoded.  Recorded next to each input.
inline std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace mumo
