// Command line front end: family construction, cone complexes, lift
// enumeration and application, parameters, distance estimation, products,
// and the table-reproduction harness.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlift/manifest.hpp"
#include "qlift/product.hpp"

using namespace qlift;
namespace fs = std::filesystem;

namespace {

CssCode load_code(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return read_code_bundle(path);
    throw std::invalid_argument("expected a .json code bundle: " + path);
}

ClassicalCode load_classical(const std::string& path) {
    if (path.size() > 6 && path.substr(path.size() - 6) == ".alist")
        return make_classical(read_alist(path));
    return make_classical(read_matrix_market(path));
}

struct PreparedComplex {
    ConeComplex k;
    Presentation pres;
};

PreparedComplex prepare(const CssCode& code) {
    PreparedComplex p;
    p.k = build_cone_complex(code);
    p.pres = simplify_presentation(presentation(p.k, spanning_tree(p.k)));
    return p;
}

struct ExitWith {
    int code;
    std::string message;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CSS code lifts via coverings of the cone complex"};
    app.require_subcommand(1);

    // family build
    auto* fam = app.add_subcommand("family", "family constructions");
    auto* fam_build = fam->add_subcommand("build", "build a family code and write its bundle");
    std::string tag, out_dir = ".", name = "code";
    int fa = 3, fb = 3, fc = 1, fd = 1;
    fam_build->add_option("--tag", tag, "EL|VL|ER|VR|VJ")->required();
    fam_build->add_option("--a", fa)->required();
    fam_build->add_option("--b", fb)->required();
    fam_build->add_option("--c", fc);
    fam_build->add_option("--d", fd);
    fam_build->add_option("--out", out_dir, "output directory");
    fam_build->add_option("--name", name, "bundle name");
    fam_build->callback([&] {
        CssCode code = build_family({tag, fa, fb, fc, fd});
        write_code_bundle(out_dir, name, code);
        CodeParams p = params(code);
        std::cout << "[[" << p.n << "," << p.k << "]] wx=" << p.wx << " wz=" << p.wz
                  << " qx=" << p.qx << " qz=" << p.qz << "\n";
    });

    // complex build
    auto* cplx = app.add_subcommand("complex", "cone complex inspection");
    auto* cplx_build = cplx->add_subcommand("build", "dump the cone complex of a code bundle");
    std::string code_path, complex_out;
    cplx_build->add_option("code", code_path, "code bundle (.json)")->required();
    cplx_build->add_option("--out", complex_out, "output file (default stdout)");
    cplx_build->callback([&] {
        CssCode code = load_code(code_path);
        ConeComplex k = build_cone_complex(code);
        std::string text = complex_to_json(k).dump(2) + "\n";
        if (complex_out.empty()) std::cout << text;
        else write_file(complex_out, text);
    });

    // lift enumerate / apply
    auto* lift = app.add_subcommand("lift", "voltage enumeration and lifting");
    auto* lift_enum = lift->add_subcommand("enumerate", "enumerate flat assignments");
    std::string group_expr;
    bool surjective = false, dedupe = false;
    int perm_degree = 0;
    std::string volt_out_dir;
    lift_enum->add_option("code", code_path)->required();
    lift_enum->add_option("--group", group_expr, "group expression, e.g. Z3xZ3");
    lift_enum->add_option("--perm-degree", perm_degree, "permutation covers of this degree");
    lift_enum->add_flag("--surjective", surjective, "connected covers only");
    lift_enum->add_flag("--dedupe", dedupe, "one representative per equivalence class");
    lift_enum->add_option("--out", volt_out_dir, "write voltage dumps to this directory");
    lift_enum->callback([&] {
        CssCode code = load_code(code_path);
        PreparedComplex p = prepare(code);
        HomSearchOptions opts;
        opts.surjective_only = surjective;
        opts.dedupe = dedupe;
        std::vector<FlatHom> homs;
        FiniteGroup g;
        if (perm_degree > 0) {
            homs = enumerate_perm_covers(p.k, p.pres, perm_degree, opts);
            g = FiniteGroup::symmetric(perm_degree);
        } else {
            if (group_expr.empty()) throw std::invalid_argument("need --group or --perm-degree");
            g = parse_group(group_expr);
            homs = enumerate_flat_homs(p.k, p.pres, g, opts);
        }
        std::cout << homs.size() << " flat assignments\n";
        if (!volt_out_dir.empty()) {
            fs::create_directories(volt_out_dir);
            for (size_t i = 0; i < homs.size(); ++i)
                write_file((fs::path(volt_out_dir) / ("voltage" + std::to_string(i) + ".json"))
                               .string(),
                           voltage_to_json(p.k, homs[i].voltage).dump(2) + "\n");
        }
    });

    auto* lift_apply = lift->add_subcommand("apply", "materialize a lift from a voltage dump");
    std::string volt_path, lift_out = ".", lift_name = "lifted";
    bool perm_cover = false;
    lift_apply->add_option("code", code_path)->required();
    lift_apply->add_option("voltage", volt_path, "voltage dump (.json)")->required();
    lift_apply->add_option("--group", group_expr)->required();
    lift_apply->add_flag("--perm", perm_cover, "treat the group as permutations acting on the fiber");
    lift_apply->add_option("--out", lift_out);
    lift_apply->add_option("--name", lift_name);
    lift_apply->callback([&] {
        CssCode code = load_code(code_path);
        ConeComplex k = build_cone_complex(code);
        FiniteGroup g = parse_group(group_expr);
        std::ifstream in(volt_path);
        if (!in) throw std::invalid_argument("cannot open " + volt_path);
        nlohmann::json j;
        in >> j;
        VoltageAssignment v = voltage_from_json(k, g, j);
        RegularLift l = lift_code(code, k, v, !perm_cover);
        LiftReport rep = verify_lift(l);
        if (!rep.all_pass()) throw std::runtime_error("lift verification failed");
        write_code_bundle(lift_out, lift_name, l.lifted);
        std::cout << "[[" << l.lifted.n() << "," << rep.k_lifted << "]] degree " << l.degree
                  << "\n";
    });

    // params
    auto* par = app.add_subcommand("params", "n, k and weights of a code bundle");
    par->add_option("code", code_path)->required();
    par->callback([&] {
        CssCode code = load_code(code_path);
        CodeParams p = params(code);
        std::cout << "n=" << p.n << " k=" << p.k << " wx=" << p.wx << " wz=" << p.wz
                  << " qx=" << p.qx << " qz=" << p.qz
                  << " connected=" << (is_connected(tanner_graph(code)) ? "yes" : "no") << "\n";
    });

    // distance
    auto* dist = app.add_subcommand("distance", "distance oracle / estimator");
    long long trials = 10000;
    uint64_t seed = 0;
    bool seed_set = false;
    std::string side_sel = "both";
    bool exact = false;
    dist->add_option("code", code_path)->required();
    dist->add_option("--side", side_sel, "X, Z, or both");
    dist->add_option("--trials", trials);
    auto* seed_opt = dist->add_option("--seed", seed, "estimator seed (required)");
    dist->add_flag("--exact", exact, "exhaustive kernel enumeration");
    dist->callback([&] {
        seed_set = seed_opt->count() > 0;
        if (!exact && !seed_set)
            throw std::invalid_argument("distance: --seed is required for estimator runs");
        CssCode code = load_code(code_path);
        nlohmann::json out;
        auto run = [&](Side side) {
            DistanceReport rep;
            if (exact) {
                rep = distance_exact(code, side);
            } else {
                EstimatorOptions eo;
                eo.trials = trials;
                eo.seed = seed;
                rep = distance_upper(code, side, eo);
            }
            out[side_name(side)] = detail::distance_report_json(rep);
            std::cout << "d" << side_name(side) << (rep.exact ? " = " : " <= ") << rep.value
                      << "\n";
        };
        if (side_sel == "X" || side_sel == "both") run(Side::X);
        if (side_sel == "Z" || side_sel == "both") run(Side::Z);
        std::cout << out.dump(2) << "\n";
    });

    // hpc build
    auto* hp = app.add_subcommand("hpc", "hypergraph product");
    auto* hp_build = hp->add_subcommand("build", "product of two classical codes");
    std::string h1_path, h2_path;
    hp_build->add_option("h1", h1_path, "first parity check (.mtx or .alist)")->required();
    hp_build->add_option("h2", h2_path, "second parity check")->required();
    hp_build->add_option("--out", out_dir);
    hp_build->add_option("--name", name);
    hp_build->callback([&] {
        CssCode prod = hpc(load_classical(h1_path), load_classical(h2_path));
        write_code_bundle(out_dir, name, prod);
        CodeParams p = params(prod);
        std::cout << "[[" << p.n << "," << p.k << "]]\n";
    });

    // product balanced
    auto* prod = app.add_subcommand("product", "balanced products");
    auto* prod_bal = prod->add_subcommand("balanced", "balanced product of two lifted bundles");
    std::string code2_path, volt2_path;
    prod_bal->add_option("code1", code_path)->required();
    prod_bal->add_option("voltage1", volt_path)->required();
    prod_bal->add_option("code2", code2_path)->required();
    prod_bal->add_option("voltage2", volt2_path)->required();
    prod_bal->add_option("--group", group_expr)->required();
    prod_bal->add_option("--out", out_dir);
    prod_bal->add_option("--name", name);
    prod_bal->callback([&] {
        FiniteGroup g = parse_group(group_expr);
        auto load_lift = [&](const std::string& cp, const std::string& vp) {
            CssCode code = load_code(cp);
            ConeComplex k = build_cone_complex(code);
            std::ifstream in(vp);
            if (!in) throw std::invalid_argument("cannot open " + vp);
            nlohmann::json j;
            in >> j;
            return lift_code(code, k, voltage_from_json(k, g, j));
        };
        RegularLift l1 = load_lift(code_path, volt_path);
        RegularLift l2 = load_lift(code2_path, volt2_path);
        CssCode bp = balanced_product(l1, l2);
        write_code_bundle(out_dir, name, bp);
        CodeParams p = params(bp);
        std::cout << "[[" << p.n << "," << p.k << "]]\n";
    });

    // verify lpc-equivalence
    auto* ver = app.add_subcommand("verify", "consistency checks");
    auto* ver_lpc = ver->add_subcommand(
        "lpc-equivalence", "diagonal lift of a product vs balanced product, exhaustively");
    std::vector<int> cycle_lengths = {2, 3, 4};
    std::vector<std::string> ver_groups = {"Z2", "Z3"};
    ver_lpc->add_option("--cycles", cycle_lengths, "repetition cycle lengths");
    ver_lpc->add_option("--groups", ver_groups, "voltage groups");
    ver_lpc->callback([&] {
        long long checked = 0;
        for (int len1 : cycle_lengths)
            for (int len2 : cycle_lengths)
                for (const std::string& gname : ver_groups) {
                    FiniteGroup g = parse_group(gname);
                    ClassicalCode c1 = repetition_cycle(len1);
                    ClassicalCode c2 = repetition_cycle(len2);
                    CssCode cs1 = as_css(c1), cs2 = as_css(c2);
                    ConeComplex k1 = build_cone_complex(cs1), k2 = build_cone_complex(cs2);
                    Presentation p1 = simplify_presentation(presentation(k1, spanning_tree(k1)));
                    Presentation p2 = simplify_presentation(presentation(k2, spanning_tree(k2)));
                    auto homs1 = enumerate_flat_homs(k1, p1, g);
                    auto homs2 = enumerate_flat_homs(k2, p2, g);
                    auto to_classical = [&](const ClassicalCode& c, const ConeComplex& k,
                                            const FlatHom& h) {
                        ClassicalLift l;
                        l.base = c;
                        l.group = g;
                        for (int a = 0; a < c.m(); ++a)
                            for (int b : c.h.row_support(a)) {
                                int w = h.voltage.oriented(k, k.x_vertex(a), k.q_vertex(b));
                                if (w != g.identity()) l.volt[{a, b}] = w;
                            }
                        return l;
                    };
                    for (const auto& h1 : homs1)
                        for (const auto& h2 : homs2) {
                            auto rep = check_lpc_equivalence(to_classical(c1, k1, h1),
                                                             to_classical(c2, k2, h2));
                            ++checked;
                            if (!rep.equal)
                                throw std::runtime_error("lpc equivalence failed at " +
                                                         rep.first_mismatch);
                        }
                }
        std::cout << "equivalence holds on " << checked << " voltage pairs\n";
    });

    // reproduce-table
    auto* repro = app.add_subcommand("reproduce-table", "rebuild published table rows");
    std::string repro_tag = "VJ", csv_out;
    long long repro_trials = 10000;
    uint64_t repro_seed = 0;
    bool include_heavy = false, skip_distance = false;
    repro->add_option("--tag", repro_tag, "EL|VL|VR|VJ")->required();
    auto* repro_seed_opt = repro->add_option("--seed", repro_seed, "estimator seed (required)");
    repro->add_option("--trials", repro_trials);
    int filter_a = 0, filter_b = 0;
    std::string filter_group;
    repro->add_option("--filter-a", filter_a, "only rows with this a");
    repro->add_option("--filter-b", filter_b, "only rows with this b");
    repro->add_option("--filter-group", filter_group, "only rows whose group contains this text");
    repro->add_flag("--all-rows", include_heavy, "include rows that need long searches");
    repro->add_flag("--no-distance", skip_distance, "parameters only");
    repro->add_option("--out", csv_out, "CSV path (default stdout)");
    repro->callback([&] {
        if (!skip_distance && repro_seed_opt->count() == 0)
            throw std::invalid_argument("reproduce-table: --seed is required");
        ReproduceOptions opts;
        opts.trials = repro_trials;
        opts.seed = repro_seed;
        opts.include_heavy = include_heavy;
        opts.filter_a = filter_a;
        opts.filter_b = filter_b;
        opts.filter_group = filter_group;
        opts.with_distance = !skip_distance;
        std::string csv = reproduce_table(repro_tag, opts);
        if (csv_out.empty()) std::cout << csv;
        else write_file(csv_out, csv);
    });

    // run manifest
    auto* run = app.add_subcommand("run", "execute a JSON run manifest");
    std::string manifest_path, run_out;
    run->add_option("manifest", manifest_path)->required();
    run->add_option("--out", run_out, "override the manifest output directory");
    run->callback([&] {
        ManifestOutcome outcome = run_manifest_file(manifest_path, run_out);
        if (outcome.exit_code != exit_ok) throw ExitWith{outcome.exit_code, outcome.message};
        std::cout << "ok\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        return what.find("budget") != std::string::npos ? exit_budget : exit_invariant;
    }
    return exit_ok;
}
