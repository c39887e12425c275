// File formats: MatrixMarket coordinate pattern for parity checks, MacKay
// alist for classical codes, JSON bundles tying a code together, and JSON
// voltage dumps.
#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlift/code.hpp"
#include "qlift/cover.hpp"

namespace qlift {

/// MatrixMarket coordinate pattern with a role comment, e.g.
/// "%% css role=hx n=7". Entries are 1-based.
inline std::string to_matrix_market(const BitMatrix& m, const std::string& role) {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    out << "%% css role=" << role << " n=" << m.cols() << "\n";
    out << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
    for (int r = 0; r < m.rows(); ++r)
        for (int c : m.row_support(r)) out << (r + 1) << " " << (c + 1) << "\n";
    return out.str();
}

inline BitMatrix from_matrix_market(std::istream& in) {
    std::string line;
    bool header_seen = false;
    int rows = -1, cols = -1, nnz = -1;
    BitMatrix m;
    int read = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '%') {
            if (!header_seen && line.rfind("%%MatrixMarket", 0) == 0) {
                if (line.find("coordinate") == std::string::npos ||
                    line.find("pattern") == std::string::npos)
                    throw std::invalid_argument("matrix market: need coordinate pattern format");
                header_seen = true;
            }
            continue;
        }
        std::istringstream ls(line);
        if (rows < 0) {
            if (!(ls >> rows >> cols >> nnz))
                throw std::invalid_argument("matrix market: bad size line");
            m = BitMatrix(rows, cols);
            continue;
        }
        int r, c;
        if (!(ls >> r >> c)) throw std::invalid_argument("matrix market: bad entry line");
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw std::invalid_argument("matrix market: entry out of range");
        m.set(r - 1, c - 1, true);
        ++read;
    }
    if (rows < 0) throw std::invalid_argument("matrix market: missing size line");
    if (read != nnz) throw std::invalid_argument("matrix market: entry count mismatch");
    return m;
}

inline BitMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return from_matrix_market(in);
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

/// MacKay alist text for a classical parity check. Neighbor lists are
/// padded with zeros up to the maximum degree, as usual for the format.
inline std::string to_alist(const BitMatrix& h) {
    int m = h.rows(), n = h.cols();
    std::vector<std::vector<int>> col_nbrs(n), row_nbrs(m);
    for (int r = 0; r < m; ++r)
        for (int c : h.row_support(r)) {
            row_nbrs[r].push_back(c + 1);
            col_nbrs[c].push_back(r + 1);
        }
    int maxc = 0, maxr = 0;
    for (auto& v : col_nbrs) maxc = std::max(maxc, static_cast<int>(v.size()));
    for (auto& v : row_nbrs) maxr = std::max(maxr, static_cast<int>(v.size()));
    std::ostringstream out;
    out << n << " " << m << "\n" << maxc << " " << maxr << "\n";
    for (int c = 0; c < n; ++c) out << col_nbrs[c].size() << (c + 1 < n ? " " : "\n");
    if (n == 0) out << "\n";
    for (int r = 0; r < m; ++r) out << row_nbrs[r].size() << (r + 1 < m ? " " : "\n");
    if (m == 0) out << "\n";
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < maxc; ++i)
            out << (i < static_cast<int>(col_nbrs[c].size()) ? col_nbrs[c][i] : 0)
                << (i + 1 < maxc ? " " : "\n");
        if (maxc == 0) out << "\n";
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i < maxr; ++i)
            out << (i < static_cast<int>(row_nbrs[r].size()) ? row_nbrs[r][i] : 0)
                << (i + 1 < maxr ? " " : "\n");
        if (maxr == 0) out << "\n";
    }
    return out.str();
}

inline BitMatrix from_alist(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("alist: bad header");
    int maxc, maxr;
    if (!(in >> maxc >> maxr)) throw std::invalid_argument("alist: bad max degrees");
    std::vector<int> cdeg(n), rdeg(m);
    for (int i = 0; i < n; ++i) in >> cdeg[i];
    for (int i = 0; i < m; ++i) in >> rdeg[i];
    BitMatrix h(m, n);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < maxc; ++i) {
            int r;
            if (!(in >> r)) throw std::invalid_argument("alist: truncated column lists");
            if (r > 0) h.set(r - 1, c, true);
        }
    // row lists are redundant; read and cross-check when present
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < maxr; ++i) {
            int c;
            if (!(in >> c)) return h; // tolerate files without row lists
            if (c > 0 && !h.get(r, c - 1))
                throw std::invalid_argument("alist: row/column lists disagree");
        }
    return h;
}

inline BitMatrix read_alist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return from_alist(in);
}

/// Bundle {name, hx, hz, labels} with the matrices in sibling .mtx files.
inline void write_code_bundle(const std::filesystem::path& dir, const std::string& name,
                              const CssCode& code) {
    std::filesystem::create_directories(dir);
    write_file((dir / (name + "_hx.mtx")).string(), to_matrix_market(code.hx, "hx"));
    write_file((dir / (name + "_hz.mtx")).string(), to_matrix_market(code.hz, "hz"));
    nlohmann::json j;
    j["name"] = name;
    j["hx"] = name + "_hx.mtx";
    j["hz"] = name + "_hz.mtx";
    j["labels"] = {{"z", code.z_labels}, {"q", code.q_labels}, {"x", code.x_labels}};
    write_file((dir / (name + ".json")).string(), j.dump(2) + "\n");
}

inline CssCode read_code_bundle(const std::filesystem::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw std::invalid_argument("cannot open " + json_path.string());
    nlohmann::json j;
    in >> j;
    auto dir = json_path.parent_path();
    BitMatrix hx = read_matrix_market((dir / j.at("hx").get<std::string>()).string());
    BitMatrix hz = read_matrix_market((dir / j.at("hz").get<std::string>()).string());
    CssCode c = new_css(std::move(hx), std::move(hz));
    if (j.contains("labels")) {
        const auto& l = j["labels"];
        if (l.contains("z")) c.z_labels = l["z"].get<std::vector<std::string>>();
        if (l.contains("q")) c.q_labels = l["q"].get<std::vector<std::string>>();
        if (l.contains("x")) c.x_labels = l["x"].get<std::vector<std::string>>();
    }
    return c;
}

/// JSON group spec: {"kind":"cyclic","n":3}, {"kind":"direct","parts":[..]},
/// {"kind":"semidirect","n":9,"m":3,"act":4},
/// {"kind":"perm","degree":4,"gens":[[1,0,3,2],[1,2,0,3]]},
/// {"kind":"named","name":"A4"}, or a bare string parsed as a name.
inline FiniteGroup group_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_group(j.get<std::string>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return FiniteGroup::cyclic(j.at("n").get<int>());
    if (kind == "semidirect")
        return FiniteGroup::semidirect(j.at("n").get<int>(), j.at("m").get<int>(),
                                       j.at("act").get<int>());
    if (kind == "direct") {
        const auto& parts = j.at("parts");
        if (parts.empty()) return FiniteGroup::cyclic(1);
        FiniteGroup g = group_from_json(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i)
            g = FiniteGroup::direct(g, group_from_json(parts[i]));
        return g;
    }
    if (kind == "perm") {
        auto gens = j.at("gens").get<std::vector<std::vector<int>>>();
        return FiniteGroup::from_permutations(j.at("degree").get<int>(), gens,
                                              j.value("name", std::string{}));
    }
    if (kind == "named") return parse_group(j.at("name").get<std::string>());
    throw std::invalid_argument("group_from_json: unknown kind '" + kind + "'");
}

/// Voltage dump: the group, plus one entry per edge with a nontrivial value.
inline nlohmann::json voltage_to_json(const ConeComplex& k, const VoltageAssignment& v) {
    nlohmann::json j;
    j["group"] = v.group.name();
    j["edges"] = nlohmann::json::array();
    for (size_t e = 0; e < k.edges.size(); ++e) {
        if (v.edge_value[e] == v.group.identity()) continue;
        j["edges"].push_back({{"edge", {k.edges[e].first, k.edges[e].second}},
                              {"value", v.edge_value[e]}});
    }
    return j;
}

inline VoltageAssignment voltage_from_json(const ConeComplex& k, const FiniteGroup& g,
                                           const nlohmann::json& j) {
    VoltageAssignment v;
    v.group = g;
    v.edge_value.assign(k.edges.size(), g.identity());
    for (const auto& entry : j.at("edges")) {
        int u = entry.at("edge")[0].get<int>();
        int w = entry.at("edge")[1].get<int>();
        v.edge_value[k.edge_index(u, w)] = entry.at("value").get<int>();
    }
    return v;
}

inline nlohmann::json complex_to_json(const ConeComplex& k) {
    nlohmann::json j;
    j["mz"] = k.mz;
    j["n"] = k.n;
    j["mx"] = k.mx;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : k.edges) j["edges"].push_back({u, v});
    j["faces"] = k.faces;
    return j;
}

} // namespace qlift
