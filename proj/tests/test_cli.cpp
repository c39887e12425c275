#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "qlift/manifest.hpp"

using namespace qlift;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("manifest pipeline writes a full artifact tree") {
    fs::path out = fresh_dir("qlift_manifest_vl33");
    nlohmann::json m = {
        {"code", {{"family", {{"tag", "VL"}, {"a", 3}, {"b", 3}}}}},
        {"group", "Z3"},
        {"options", {{"surjective_only", false}, {"dedupe", false}}},
        {"out", out.string()},
    };
    ManifestOutcome res = run_manifest(m);
    CHECK(res.exit_code == exit_ok);
    CHECK(fs::exists(out / "base.json"));
    CHECK(fs::exists(out / "complex.json"));
    CHECK(fs::exists(out / "summary.json"));

    std::ifstream in(out / "summary.json");
    nlohmann::json summary;
    in >> summary;
    CHECK(summary["num_assignments"] == 9); // hom-count oracle for x^3 = y^3 over Z3
    CHECK(fs::exists(out / "lift0_voltage.json"));
    CHECK(fs::exists(out / "lift8.json"));
    fs::remove_all(out);
}

TEST_CASE("manifest with the trivial group round-trips the base code") {
    fs::path out = fresh_dir("qlift_manifest_trivial");
    nlohmann::json m = {
        {"code", {{"family", {{"tag", "VJ"}, {"a", 3}, {"b", 3}}}}},
        {"group", "e"},
        {"options", {{"surjective_only", false}}},
        {"out", out.string()},
    };
    REQUIRE(run_manifest(m).exit_code == exit_ok);
    // trivial lift: identical matrix files, byte for byte
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(out / "base_hx.mtx") == slurp(out / "lift0_hx.mtx"));
    CHECK(slurp(out / "base_hz.mtx") == slurp(out / "lift0_hz.mtx"));
    fs::remove_all(out);
}

TEST_CASE("manifest schema violations exit with the usage code") {
    CHECK(run_manifest(nlohmann::json{{"group", "Z2"}}).exit_code == exit_usage);
    nlohmann::json bad_group = {
        {"code", {{"family", {{"tag", "VJ"}, {"a", 3}, {"b", 3}}}}},
        {"group", {{"kind", "nonsense"}}},
        {"out", "/tmp/qlift_unused"},
    };
    CHECK(run_manifest(bad_group).exit_code == exit_usage);
    // distance without a seed is a schema violation
    nlohmann::json no_seed = {
        {"code", {{"family", {{"tag", "VJ"}, {"a", 3}, {"b", 3}}}}},
        {"group", "e"},
        {"options", {{"trials", 100}}},
        {"out", "/tmp/qlift_unused"},
    };
    CHECK(run_manifest(no_seed).exit_code == exit_usage);
}

TEST_CASE("identical manifests produce byte-identical output trees") {
    nlohmann::json m = {
        {"code", {{"family", {{"tag", "VJ"}, {"a", 3}, {"b", 3}}}}},
        {"group", "Z3"},
        {"options",
         {{"surjective_only", true}, {"dedupe", true}, {"trials", 200}, {"seed", 5}}},
        {"out", ""},
    };
    fs::path out1 = fresh_dir("qlift_det_a"), out2 = fresh_dir("qlift_det_b");
    REQUIRE(run_manifest(m, out1.string()).exit_code == exit_ok);
    REQUIRE(run_manifest(m, out2.string()).exit_code == exit_ok);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    size_t files = 0;
    for (const auto& entry : fs::directory_iterator(out1)) {
        fs::path other = out2 / entry.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(entry.path()) == slurp(other));
        ++files;
    }
    CHECK(files >= 4);
    fs::remove_all(out1);
    fs::remove_all(out2);
}

TEST_CASE("exhausted search budgets exit with the budget code") {
    nlohmann::json m = {
        {"code", {{"family", {{"tag", "VL"}, {"a", 3}, {"b", 3}}}}},
        {"group", "Z3xZ3"},
        {"options", {{"node_budget", 2}}},
        {"out", (fs::temp_directory_path() / "qlift_budget").string()},
    };
    ManifestOutcome res = run_manifest(m);
    CHECK(res.exit_code == exit_budget);
    // partial artifacts were still written
    CHECK(fs::exists(fs::temp_directory_path() / "qlift_budget" / "base.json"));
    fs::remove_all(fs::temp_directory_path() / "qlift_budget");
}

TEST_CASE("table reproduction is deterministic") {
    ReproduceOptions opts;
    opts.trials = 400;
    opts.seed = 11;
    std::string csv1 = reproduce_table("EL", opts);
    std::string csv2 = reproduce_table("EL", opts);
    CHECK(csv1 == csv2);
    CHECK(csv1.find("MATCH") != std::string::npos);
    CHECK(csv1.find("a,b,") == 0);
}

TEST_CASE("unsupported table groups are reported, never silent") {
    ReproduceOptions opts;
    opts.with_distance = false;
    opts.include_heavy = true;
    std::string csv = reproduce_table("EL", opts);
    CHECK(csv.find("SKIPPED(group-unsupported)") != std::string::npos);
    CHECK(csv.find("Z4.D8") != std::string::npos);
}
