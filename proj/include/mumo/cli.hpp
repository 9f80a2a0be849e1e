#pragma once

#include <chrono>

#include "mumo/json_io.hpp"

namespace mumo {

/// Result of one CLI command.  The results object is deterministic: no
/// timestamps or durations live inside it, so identical inputs produce
/// byte-identical JSON.  The measured duration is rendered in the
/// human-readable output only.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (source, content hash)
    Json results = Json::object();
    std::vector<std::string> warnings;
    long long duration_ms = 0;
    int exit_code = 0;  // 0 pass, 1 check failure, 2 input error

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs"] = Json::array();
        for (const auto& [src, hash] : inputs) {
            Json e;
            e["source"] = src;
            e["hash"] = hash;
            j["inputs"].push_back(e);
        }
        j["results"] = results;
        j["warnings"] = warnings;
        return j;
    }
};

namespace cli_detail {

struct LoadedFan {
    Fan fan;
    std::string source;
    std::string hash;
};

inline LoadedFan load_fan(const std::string& fan_path, const std::string& builtin) {
    if (!builtin.empty() && !fan_path.empty())
        throw Error("give either --fan or --builtin, not both");
    if (!builtin.empty()) {
        Fan fan = builtin_fan(builtin);
        std::string canon = fan_to_json(fan).dump();
        return {std::move(fan), "builtin:" + builtin, content_hash(canon)};
    }
    if (fan_path.empty()) throw Error("missing fan: use --fan <path> or --builtin <name>");
    std::string text = read_file(fan_path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(fan_path + ": " + e.what());
    }
    return {fan_from_json(j), fan_path, content_hash(text)};
}

struct LoadedPartition {
    Partition partition;
    std::string source;
    std::string hash;
};

/// --partition accepts a JSON file, the name "single", or an inline spec
/// "blocks:0,1;2,3,4".
inline LoadedPartition load_partition(const std::string& arg, const Fan& fan) {
    if (arg.empty()) throw Error("missing partition: use --partition <path|single|blocks:...>");
    if (arg == "single") {
        Partition p = single_block_partition(fan.num_rays());
        return {p, "builtin:single", content_hash(partition_to_json(p).dump())};
    }
    if (arg.rfind("blocks:", 0) == 0) {
        Partition p;
        std::string body = arg.substr(7);
        std::istringstream bs(body);
        std::string block;
        while (std::getline(bs, block, ';')) {
            std::vector<int> idx;
            std::istringstream is(block);
            std::string tok;
            while (std::getline(is, tok, ',')) idx.push_back(std::stoi(tok));
            p.blocks.push_back(std::move(idx));
        }
        return {p, "inline:" + arg, content_hash(partition_to_json(p).dump())};
    }
    std::string text = read_file(arg);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(arg + ": " + e.what());
    }
    return {partition_from_json(j), arg, content_hash(text)};
}

struct LoadedSections {
    std::vector<Section> sections;
    std::string source;
    std::string hash;
};

/// --sections accepts a JSON file or a named recipe: "ones" (every lattice
/// point of each block polytope, coefficient 1), "fermat" (the vertices of
/// each block polytope), "zero" (the empty section).
inline LoadedSections load_sections(const std::string& arg, const Fan& fan,
                                    const Partition& partition) {
    auto named = [&](const std::string& name) -> std::vector<Section> {
        std::vector<Section> out;
        for (const auto& block : partition.blocks) {
            TorusDivisor d = block_divisor(fan, block);
            if (name == "ones") out.push_back(ones_section(fan, d));
            else if (name == "fermat") out.push_back(fermat_section(fan, d));
            else out.push_back(Section{});
        }
        return out;
    };
    if (arg == "ones" || arg == "fermat" || arg == "zero") {
        auto secs = named(arg);
        Json canon = Json::array();
        for (const auto& s : secs) canon.push_back(section_to_json(s));
        return {std::move(secs), "builtin:" + arg, content_hash(canon.dump())};
    }
    std::string text = read_file(arg);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(arg + ": " + e.what());
    }
    return {sections_from_json(j), arg, content_hash(text)};
}

inline Json verdict_json(Verdict v, const std::string& reason) {
    Json j;
    j["verdict"] = verdict_name(v);
    j["reason"] = reason;
    return j;
}

inline Json verdict_json(bool pass, const std::string& reason) {
    return verdict_json(pass ? Verdict::pass : Verdict::fail, reason);
}

inline bool has_failure(const Json& results) {
    bool fail = false;
    std::function<void(const Json&)> walk = [&](const Json& j) {
        if (j.is_object()) {
            if (j.contains("verdict") && j.at("verdict") == "fail") fail = true;
            for (const auto& [k, v] : j.items()) walk(v);
        } else if (j.is_array()) {
            for (const auto& v : j) walk(v);
        }
    };
    walk(results);
    return fail;
}

}  // namespace cli_detail

/// fan-check: smoothness, completeness, Delta construction, reflexivity,
/// and the lattice-point count of the dual.
inline RunReport cmd_fan_check(const std::string& fan_arg, const std::string& builtin) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "fan-check";
    auto lf = cli_detail::load_fan(fan_arg, builtin);
    rep.inputs.emplace_back(lf.source, lf.hash);
    const Fan& fan = lf.fan;

    bool smooth = is_smooth(fan);
    bool complete = is_complete(fan);
    rep.results["rank"] = fan.rank;
    rep.results["num_rays"] = fan.num_rays();
    ClassGroup cg = class_group(fan);
    Json cgj;
    cgj["free_rank"] = cg.free_rank;
    cgj["torsion"] = Json::array();
    for (const auto& d : cg.torsion) cgj["torsion"].push_back(detail::small_int(d, "torsion"));
    rep.results["class_group"] = cgj;
    rep.results["smooth"] = cli_detail::verdict_json(smooth, smooth ? "all maximal cones unimodular"
                                                                    : "a maximal cone has |det| != 1");
    rep.results["complete"] =
        cli_detail::verdict_json(complete, complete ? "every ridge borders two cones, adjacency connected"
                                                    : "support does not cover the lattice");
    if (complete) {
        Polytope delta = delta_polytope(fan);
        rep.results["delta"] = polytope_to_json(delta);
        bool reflexive = is_reflexive(delta);
        rep.results["reflexive"] = cli_detail::verdict_json(
            reflexive, reflexive ? "Delta integral with integral polar dual and unique interior point"
                                 : "Delta is not reflexive");
        if (reflexive) {
            Polytope nabla = polar_dual(delta);
            rep.results["nabla"] = polytope_to_json(nabla);
            rep.results["nabla_lattice_points"] = lattice_points(nabla).size();
        }
    } else {
        rep.results["reflexive"] =
            cli_detail::verdict_json(Verdict::skipped, "fan is not complete");
        rep.warnings.push_back("fan not complete; Delta and nabla skipped");
    }
    rep.exit_code = cli_detail::has_failure(rep.results) ? 1 : 0;
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// degenerate: components, strata, the nerve, Betti numbers, the maximal
/// Jordan block count, the reduced genus report, and (single block) the
/// sphere verification.
inline RunReport cmd_degenerate(const std::string& fan_arg, const std::string& builtin,
                                const std::string& partition_arg) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "degenerate";
    auto lf = cli_detail::load_fan(fan_arg, builtin);
    rep.inputs.emplace_back(lf.source, lf.hash);
    auto lp = cli_detail::load_partition(partition_arg, lf.fan);
    rep.inputs.emplace_back(lp.source, lp.hash);

    FamilySpec spec = make_family(lf.fan, lp.partition);
    auto comps = components(spec);
    rep.results["num_components"] = comps.size();
    Json comp_list = Json::array();
    for (const auto& c : comps) comp_list.push_back(c.ray_indices);
    rep.results["components"] = comp_list;
    rep.results["n"] = spec.n();
    rep.results["k"] = spec.k();

    if (comps.empty()) {
        rep.results["nonempty"] = cli_detail::verdict_json(
            false, "X_0 empty: every transversal contains a primitive collection");
        rep.warnings.push_back("X_0 empty");
        rep.exit_code = 1;
        rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    rep.results["nonempty"] = cli_detail::verdict_json(true, "components found");

    auto strat = strata(spec);
    Json strata_json = Json::array();
    for (const auto& s : strat) {
        Json e;
        e["components"] = s.component_indices;
        e["rays"] = s.rays.ray_indices;
        e["dim"] = s.dim;
        strata_json.push_back(e);
    }
    rep.results["strata"] = strata_json;

    CellComplex nerve = clemens_complex(spec);
    rep.results["clemens_complex"] = complex_to_json(nerve);
    rep.results["clemens_model"] = "nerve";
    HomologyProfile h = homology(nerve);
    rep.results["betti"] = h.betti;
    long long blocks = h.at(spec.n());
    rep.results["max_jordan_blocks"] = blocks;
    rep.results["max_jordan_block_size"] = spec.n() + 1;

    GenusReport gr = reduced_genus_check(spec);
    Json gj;
    gj["component_term"] = gr.component_term;
    gj["strata_form_term"] = gr.strata_form_term;
    gj["nerve_term"] = gr.nerve_term;
    gj["total"] = gr.total;
    gj["assumption"] = gr.assumption;
    gj["matches_cy_expected"] =
        cli_detail::verdict_json(gr.matches_expected,
                                 gr.matches_expected ? "p_g equals 1" : "p_g differs from 1");
    rep.results["reduced_genus"] = gj;

    if (spec.k() == 1) {
        SphereReport sr = verify_sphere_theorem(spec.fan);
        Json sj;
        sj["cells_per_dim"] = sr.cells_per_dim;
        sj["bijection_with_cone_sets"] = sr.bijection_with_cone_sets;
        sj["cells_are_delta_cells"] = sr.cells_are_delta_cells;
        sj["order_reversing"] = sr.order_reversing;
        sj["betti"] = sr.betti.betti;
        sj["expected_betti"] = sr.expected_betti;
        sj["verdict"] = cli_detail::verdict_json(
                            sr.ok(), sr.ok() ? "nerve is the boundary complex of Delta"
                                             : "sphere correspondence failed")["verdict"];
        sj["reason"] = sr.ok() ? "nerve is the boundary complex of Delta"
                               : "sphere correspondence failed";
        rep.results["sphere_theorem"] = sj;
    } else {
        rep.results["sphere_theorem"] =
            cli_detail::verdict_json(Verdict::skipped, "multi-block partition");
    }

    rep.exit_code = cli_detail::has_failure(rep.results) ? 1 : 0;
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// monodromy: the full criterion report.
inline RunReport cmd_monodromy(const std::string& fan_arg, const std::string& builtin,
                               const std::string& partition_arg,
                               const std::string& sections_arg) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "monodromy";
    auto lf = cli_detail::load_fan(fan_arg, builtin);
    rep.inputs.emplace_back(lf.source, lf.hash);
    auto lp = cli_detail::load_partition(partition_arg, lf.fan);
    rep.inputs.emplace_back(lp.source, lp.hash);
    std::vector<Section> sections;
    if (!sections_arg.empty()) {
        auto ls = cli_detail::load_sections(sections_arg, lf.fan, lp.partition);
        rep.inputs.emplace_back(ls.source, ls.hash);
        sections = std::move(ls.sections);
    }

    FamilySpec spec = make_family(lf.fan, lp.partition, std::move(sections));
    MonodromyReport mr = verify_max_monodromy_criterion(spec);
    Json conds = Json::array();
    for (const auto& c : mr.conditions) {
        Json e;
        e["condition"] = c.name;
        e["verdict"] = verdict_name(c.verdict);
        e["reason"] = c.detail;
        conds.push_back(e);
    }
    rep.results["conditions"] = conds;
    rep.results["verdict"] = mr.verdict_text;
    rep.results["satisfied"] = mr.satisfied;

    Int claimed = 1;
    bool uniform = true;
    for (const auto& b : spec.partition.blocks) claimed *= Int(int(b.size()) - 1);
    for (const auto& b : spec.partition.blocks)
        if (b.size() < 2) uniform = false;
    auto comps = components(spec);
    rep.results["component_count"] = comps.size();
    rep.results["claimed_component_count"] = claimed.str();
    if (uniform && Int(comps.size()) != claimed)
        rep.warnings.push_back(
            "component count " + std::to_string(comps.size()) +
            " differs from the claimed prod(n_i - 1) = " + claimed.str() +
            "; the brute-force count is reported");

    rep.exit_code = mr.satisfied ? 0 : 1;
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// period: coefficients of the torus period of the hypersurface family.
inline RunReport cmd_period(const std::string& fan_arg, const std::string& builtin,
                            const std::string& sections_arg, int order) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "period";
    auto lf = cli_detail::load_fan(fan_arg, builtin);
    rep.inputs.emplace_back(lf.source, lf.hash);
    Partition part = single_block_partition(lf.fan.num_rays());
    std::string sections_spec = sections_arg.empty() ? "fermat" : sections_arg;
    auto ls = cli_detail::load_sections(sections_spec, lf.fan, part);
    rep.inputs.emplace_back(ls.source, ls.hash);

    FamilySpec spec = make_family(lf.fan, part, std::move(ls.sections));
    LaurentPoly f = hypersurface_laurent(spec);
    PeriodSeries ps = period_series(f, order);
    rep.results["order"] = order;
    rep.results["period"] = period_to_json(ps);
    rep.exit_code = 0;
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Human-readable rendering of the report JSON (never a second code path:
/// it walks the same object that --json writes).
inline std::string render_report(const RunReport& rep) {
    std::ostringstream out;
    out << "== " << rep.command << " ==\n";
    for (const auto& [src, hash] : rep.inputs) out << "input: " << src << " [" << hash << "]\n";
    std::function<void(const Json&, int)> walk = [&](const Json& j, int indent) {
        std::string pad(std::size_t(indent) * 2, ' ');
        if (j.is_object()) {
            if (j.contains("verdict") && j.contains("reason") && j.size() == 2) {
                out << j.at("verdict").get<std::string>() << "  ("
                    << j.at("reason").get<std::string>() << ")\n";
                return;
            }
            out << "\n";
            for (const auto& [k, v] : j.items()) {
                out << pad << "  " << k << ": ";
                walk(v, indent + 1);
            }
        } else if (j.is_array() && j.size() > 8) {
            out << j.dump() << "\n";
        } else {
            out << j.dump() << "\n";
        }
    };
    out << "results:";
    walk(rep.results, 0);
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    out << "duration_ms: " << rep.duration_ms << "\n";
    out << "exit: " << rep.exit_code << "\n";
    return out.str();
}

}  // namespace mumo
