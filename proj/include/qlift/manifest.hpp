// Run manifests: a JSON description of a full pipeline run (code source,
// group, search options, output directory) executed end to end with all
// artifacts written to disk.
#pragma once

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "qlift/io.hpp"
#include "qlift/table.hpp"

namespace qlift {

// exit codes shared by the manifest runner and the command line tool
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_invariant = 4;

struct ManifestOutcome {
    int exit_code = exit_ok;
    std::string message;
};

namespace detail {

inline nlohmann::json distance_report_json(const DistanceReport& rep) {
    nlohmann::json j;
    j["side"] = side_name(rep.side);
    j["value"] = rep.value;
    j["exact"] = rep.exact;
    j["witness"] = rep.witness.support();
    j["trials_used"] = rep.trials_used;
    j["seed"] = rep.seed;
    return j;
}

} // namespace detail

/// Execute a manifest: build or load the code, enumerate flat assignments
/// onto the group, lift each one, measure parameters and distance bounds,
/// and write matrices, voltage dumps, reports, and a summary under `out`.
inline ManifestOutcome run_manifest(const nlohmann::json& manifest, std::string out_override = "") {
    namespace fs = std::filesystem;
    ManifestOutcome outcome;
    CssCode base;
    FiniteGroup group;
    HomSearchOptions hopts;
    long long trials = 0;
    uint64_t seed = 0;
    bool with_distance = false;
    fs::path out;
    try {
        const auto& code_spec = manifest.at("code");
        if (code_spec.contains("family")) {
            const auto& f = code_spec["family"];
            base = build_family({f.at("tag").get<std::string>(), f.at("a").get<int>(),
                                 f.at("b").get<int>(), f.value("c", 1), f.value("d", 1)});
        } else if (code_spec.contains("bundle")) {
            base = read_code_bundle(code_spec["bundle"].get<std::string>());
        } else if (code_spec.contains("hx") && code_spec.contains("hz")) {
            base = new_css(read_matrix_market(code_spec["hx"].get<std::string>()),
                           read_matrix_market(code_spec["hz"].get<std::string>()));
        } else {
            throw std::invalid_argument("manifest: code needs family, bundle, or hx/hz");
        }
        group = group_from_json(manifest.at("group"));
        const auto opts = manifest.value("options", nlohmann::json::object());
        hopts.surjective_only = opts.value("surjective_only", true);
        hopts.dedupe = opts.value("dedupe", true);
        hopts.node_budget = opts.value("node_budget", static_cast<long long>(50000000));
        with_distance = opts.contains("trials");
        if (with_distance) {
            trials = opts["trials"].get<long long>();
            if (!opts.contains("seed"))
                throw std::invalid_argument("manifest: distance runs require an explicit seed");
            seed = opts["seed"].get<uint64_t>();
        }
        out = out_override.empty() ? fs::path(manifest.at("out").get<std::string>())
                                   : fs::path(out_override);
    } catch (const std::exception& e) {
        return {exit_usage, std::string("manifest: ") + e.what()};
    }

    try {
        fs::create_directories(out);
        write_code_bundle(out, "base", base);

        ConeComplex k = build_cone_complex(base);
        write_file((out / "complex.json").string(), complex_to_json(k).dump(2) + "\n");

        std::vector<FlatHom> homs;
        try {
            Presentation p = simplify_presentation(presentation(k, spanning_tree(k)));
            homs = enumerate_flat_homs(k, p, group, hopts);
        } catch (const std::runtime_error& e) {
            return {exit_budget, std::string("manifest: ") + e.what()};
        }

        nlohmann::json summary;
        CodeParams bp = params(base);
        summary["base"] = {{"n", bp.n}, {"k", bp.k}, {"wx", bp.wx}, {"wz", bp.wz},
                           {"qx", bp.qx}, {"qz", bp.qz}};
        summary["group"] = group.name();
        summary["num_assignments"] = homs.size();
        summary["lifts"] = nlohmann::json::array();

        bool all_pass = true;
        for (size_t i = 0; i < homs.size(); ++i) {
            RegularLift lift = lift_code(base, k, homs[i].voltage);
            std::string stem = "lift" + std::to_string(i);
            write_file((out / (stem + "_voltage.json")).string(),
                       voltage_to_json(k, homs[i].voltage).dump(2) + "\n");
            write_code_bundle(out, stem, lift.lifted);
            LiftReport rep = verify_lift(lift);
            all_pass = all_pass && rep.all_pass();
            nlohmann::json lj;
            lj["index"] = i;
            lj["n"] = lift.lifted.n();
            lj["k"] = rep.k_lifted;
            lj["verify_pass"] = rep.all_pass();
            if (with_distance && rep.k_lifted > 0) {
                EstimatorOptions eo;
                eo.trials = trials;
                eo.seed = seed;
                DistanceReport dxr = distance_upper(lift.lifted, Side::X, eo);
                DistanceReport dzr = distance_upper(lift.lifted, Side::Z, eo);
                lj["dx_upper"] = dxr.value;
                lj["dz_upper"] = dzr.value;
                write_file((out / (stem + "_distance.json")).string(),
                           nlohmann::json({{"x", detail::distance_report_json(dxr)},
                                           {"z", detail::distance_report_json(dzr)}})
                                   .dump(2) +
                               "\n");
            }
            summary["lifts"].push_back(lj);
        }
        write_file((out / "summary.json").string(), summary.dump(2) + "\n");
        if (!all_pass) return {exit_invariant, "manifest: a lift failed verification"};
    } catch (const std::exception& e) {
        return {exit_invariant, std::string("manifest: ") + e.what()};
    }
    return outcome;
}

inline ManifestOutcome run_manifest_file(const std::string& path, std::string out_override = "") {
    std::ifstream in(path);
    if (!in) return {exit_usage, "manifest: cannot open " + path};
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        return {exit_usage, std::string("manifest: ") + e.what()};
    }
    return run_manifest(j, std::move(out_override));
}

} // namespace qlift
