// Classical and CSS code types, Tanner graphs, validity checks, parameters.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlift/bitmat.hpp"

namespace qlift {

struct ClassicalCode {
    BitMatrix h; // parity check, m x n
    std::vector<std::string> bit_labels;
    std::vector<std::string> check_labels;

    int n() const { return h.cols(); }
    int m() const { return h.rows(); }
};

inline ClassicalCode make_classical(BitMatrix h) {
    if (h.cols() < 1) throw std::invalid_argument("classical code needs n >= 1");
    ClassicalCode c;
    c.h = std::move(h);
    c.bit_labels.resize(c.h.cols());
    c.check_labels.resize(c.h.rows());
    for (int i = 0; i < c.h.cols(); ++i) c.bit_labels[i] = "b" + std::to_string(i);
    for (int i = 0; i < c.h.rows(); ++i) c.check_labels[i] = "c" + std::to_string(i);
    return c;
}

/// Checks and bits interchanged: parity check becomes its transpose.
inline ClassicalCode transpose_code(const ClassicalCode& c) {
    ClassicalCode t;
    t.h = c.h.transpose();
    t.bit_labels = c.check_labels;
    t.check_labels = c.bit_labels;
    return t;
}

/// Repetition / cycle code of length n: check i touches bits i and i+1 mod n.
inline ClassicalCode repetition_cycle(int n) {
    BitMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        h.set(i, i, true);
        h.set(i, (i + 1) % n, true);
    }
    return make_classical(std::move(h));
}

/// Pair (H_X, H_Z) with H_X H_Z^T = 0. Cells carry dense integer ids; labels
/// are "z#", "q#", "x#" unless a construction installs its own.
struct CssCode {
    BitMatrix hx; // m_X x n
    BitMatrix hz; // m_Z x n
    std::vector<std::string> z_labels, q_labels, x_labels;

    int n() const { return hx.cols(); }
    int mx() const { return hx.rows(); }
    int mz() const { return hz.rows(); }

    void make_default_labels() {
        z_labels.resize(mz());
        q_labels.resize(n());
        x_labels.resize(mx());
        for (int i = 0; i < mz(); ++i) z_labels[i] = "z" + std::to_string(i);
        for (int i = 0; i < n(); ++i) q_labels[i] = "q" + std::to_string(i);
        for (int i = 0; i < mx(); ++i) x_labels[i] = "x" + std::to_string(i);
    }
};

/// Unvalidated constructor; used by tests that probe invalid pairs.
inline CssCode css_unchecked(BitMatrix hx, BitMatrix hz) {
    CssCode c;
    c.hx = std::move(hx);
    c.hz = std::move(hz);
    c.make_default_labels();
    return c;
}

/// Validated constructor. On an orthogonality violation the error names the
/// first offending check pair and the overlap size.
inline CssCode new_css(BitMatrix hx, BitMatrix hz) {
    if (hx.cols() != hz.cols())
        throw std::invalid_argument("new_css: hx has " + std::to_string(hx.cols()) +
                                    " columns, hz has " + std::to_string(hz.cols()));
    for (int x = 0; x < hx.rows(); ++x)
        for (int z = 0; z < hz.rows(); ++z) {
            int overlap = 0;
            const uint64_t* px = hx.row_ptr(x);
            const uint64_t* pz = hz.row_ptr(z);
            for (int w = 0; w < hx.words_per_row(); ++w)
                overlap += std::popcount(px[w] & pz[w]);
            if (overlap & 1)
                throw std::invalid_argument("new_css: x" + std::to_string(x) + " and z" +
                                            std::to_string(z) + " overlap on " +
                                            std::to_string(overlap) + " qubits (odd)");
        }
    return css_unchecked(std::move(hx), std::move(hz));
}

/// Classical code viewed as a CSS code with no Z checks.
inline CssCode as_css(const ClassicalCode& c) {
    return css_unchecked(c.h, BitMatrix(0, c.h.cols()));
}

struct DistanceValue {
    int value = 0;
    bool exact = false;
};

struct CodeParams {
    int n = 0;
    int k = 0;
    int wx = 0, wz = 0; // max row weights of H_X, H_Z
    int qx = 0, qz = 0; // max column weights of H_X, H_Z
    std::optional<DistanceValue> dx, dz;
};

inline CodeParams params(const CssCode& c) {
    CodeParams p;
    p.n = c.n();
    p.k = c.n() - rank(c.hx) - rank(c.hz);
    p.wx = c.hx.max_row_weight();
    p.wz = c.hz.max_row_weight();
    p.qx = c.hx.max_col_weight();
    p.qz = c.hz.max_col_weight();
    return p;
}

/// Bipartite graph of checks vs qubits. Vertices are numbered globally in
/// block order [Z | Q | X]; edges are index pairs into that numbering.
struct TannerGraph {
    int mz = 0, n = 0, mx = 0;
    std::vector<std::pair<int, int>> edges_qz; // (z, q) as global ids
    std::vector<std::pair<int, int>> edges_qx; // (q, x) as global ids

    int num_vertices() const { return mz + n + mx; }
    int z_vertex(int z) const { return z; }
    int q_vertex(int q) const { return mz + q; }
    int x_vertex(int x) const { return mz + n + x; }
    bool is_z(int v) const { return v < mz; }
    bool is_q(int v) const { return v >= mz && v < mz + n; }
    bool is_x(int v) const { return v >= mz + n; }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(num_vertices());
        for (auto [z, q] : edges_qz) {
            adj[z].push_back(q);
            adj[q].push_back(z);
        }
        for (auto [q, x] : edges_qx) {
            adj[q].push_back(x);
            adj[x].push_back(q);
        }
        return adj;
    }
};

inline TannerGraph tanner_graph(const CssCode& c) {
    TannerGraph t;
    t.mz = c.mz();
    t.n = c.n();
    t.mx = c.mx();
    for (int z = 0; z < c.mz(); ++z)
        for (int q : c.hz.row_support(z)) t.edges_qz.emplace_back(t.z_vertex(z), t.q_vertex(q));
    for (int x = 0; x < c.mx(); ++x)
        for (int q : c.hx.row_support(x)) t.edges_qx.emplace_back(t.q_vertex(q), t.x_vertex(x));
    return t;
}

/// Rebuild the parity checks from a Tanner graph; inverse of tanner_graph.
inline CssCode code_from_tanner(const TannerGraph& t) {
    BitMatrix hz(t.mz, t.n), hx(t.mx, t.n);
    for (auto [z, q] : t.edges_qz) hz.set(z, q - t.mz, true);
    for (auto [q, x] : t.edges_qx) hx.set(x - t.mz - t.n, q - t.mz, true);
    return css_unchecked(std::move(hx), std::move(hz));
}

inline bool is_connected(const TannerGraph& t) {
    int nv = t.num_vertices();
    if (nv == 0) return true;
    auto adj = t.adjacency();
    std::vector<bool> seen(nv, false);
    std::vector<int> queue = {0};
    seen[0] = true;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

enum class CheckSide { Z, X };

/// Subgraph induced by one check: its supported qubits, the opposite-type
/// checks with overlapping support, and the edges between them. The report
/// states whether every opposite-type check vertex has even degree, which is
/// what CSS orthogonality requires.
struct InducedSubgraph {
    CheckSide side;
    int check = 0;
    std::vector<int> qubits;          // qubit indices in supp(check)
    std::vector<int> opposite_checks; // opposite-side check indices
    std::vector<std::pair<int, int>> edges; // (qubit, opposite check) index pairs
    bool all_even = true;
    std::vector<int> odd_checks;      // opposite checks of odd degree

    std::vector<std::vector<int>> components() const {
        // connected components over qubits + opposite checks
        std::vector<int> verts;
        for (int q : qubits) verts.push_back(q * 2);          // even = qubit
        for (int c : opposite_checks) verts.push_back(c * 2 + 1);
        std::map<int, std::vector<int>> adj;
        for (int v : verts) adj[v];
        for (auto [q, c] : edges) {
            adj[q * 2].push_back(c * 2 + 1);
            adj[c * 2 + 1].push_back(q * 2);
        }
        std::vector<std::vector<int>> comps;
        std::set<int> seen;
        for (int v : verts) {
            if (seen.count(v)) continue;
            std::vector<int> queue = {v};
            seen.insert(v);
            for (size_t head = 0; head < queue.size(); ++head)
                for (int w : adj[queue[head]])
                    if (seen.insert(w).second) queue.push_back(w);
            std::sort(queue.begin(), queue.end());
            comps.push_back(queue);
        }
        return comps;
    }
};

inline InducedSubgraph induced_subgraph(const CssCode& c, CheckSide side, int check) {
    const BitMatrix& own = side == CheckSide::Z ? c.hz : c.hx;
    const BitMatrix& other = side == CheckSide::Z ? c.hx : c.hz;
    if (check < 0 || check >= own.rows())
        throw std::invalid_argument("induced_subgraph: unknown check id " + std::to_string(check));
    InducedSubgraph s;
    s.side = side;
    s.check = check;
    s.qubits = own.row_support(check);
    for (int o = 0; o < other.rows(); ++o) {
        int overlap = 0;
        const uint64_t* pa = own.row_ptr(check);
        const uint64_t* pb = other.row_ptr(o);
        for (int w = 0; w < own.words_per_row(); ++w) overlap += std::popcount(pa[w] & pb[w]);
        if (overlap == 0) continue;
        s.opposite_checks.push_back(o);
        for (int q : s.qubits)
            if (other.get(o, q)) s.edges.emplace_back(q, o);
        if (overlap & 1) {
            s.all_even = false;
            s.odd_checks.push_back(o);
        }
    }
    return s;
}

/// Validity test phrased through induced subgraphs: every check's induced
/// subgraph must have even degree at the opposite-type check vertices.
inline bool valid_by_induced_subgraphs(const CssCode& c) {
    for (int z = 0; z < c.mz(); ++z)
        if (!induced_subgraph(c, CheckSide::Z, z).all_even) return false;
    for (int x = 0; x < c.mx(); ++x)
        if (!induced_subgraph(c, CheckSide::X, x).all_even) return false;
    return true;
}

} // namespace qlift
