// The cone complex of a CSS code: typed vertices, edges and triangular
// faces, plus spanning trees, fundamental-group presentations, Tietze
// simplification, and the face-filling step for disconnected cones.
#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlift/code.hpp"

namespace qlift {

enum class EdgeType { QZ, QX, XZ };

/// 2-complex on the vertex set Z u Q u X (global ids in block order
/// [Z | Q | X]). There is one XZ edge per check pair with overlapping
/// support and one triangle per qubit in the overlap. Faces added later by
/// filling are longer cycles; all faces are stored as explicit vertex
/// cycles (v0, v1, ..., v_{L-1}) meaning edges [v_i, v_{i+1 mod L}].
struct ConeComplex {
    int mz = 0, n = 0, mx = 0;
    std::vector<std::pair<int, int>> edges; // (u, v) with u < v, sorted
    std::vector<std::vector<int>> faces;    // vertex cycles

    int num_vertices() const { return mz + n + mx; }
    int z_vertex(int z) const { return z; }
    int q_vertex(int q) const { return mz + q; }
    int x_vertex(int x) const { return mz + n + x; }
    bool is_z(int v) const { return v < mz; }
    bool is_q(int v) const { return v >= mz && v < mz + n; }
    bool is_x(int v) const { return v >= mz + n; }

    EdgeType edge_type(int e) const {
        auto [u, v] = edges[e];
        if (is_z(u)) return is_q(v) ? EdgeType::QZ : EdgeType::XZ;
        return EdgeType::QX;
    }

    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v))
            throw std::invalid_argument("edge_index: no edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        return static_cast<int>(it - edges.begin());
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(num_vertices());
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    long long euler_characteristic() const {
        return static_cast<long long>(num_vertices()) - static_cast<long long>(edges.size()) +
               static_cast<long long>(faces.size());
    }
};

/// Faces are listed by (z, x) pair in check order, qubits ascending inside;
/// each triangle is the cycle (z, q, x).
inline ConeComplex build_cone_complex(const CssCode& c) {
    ConeComplex k;
    k.mz = c.mz();
    k.n = c.n();
    k.mx = c.mx();
    std::vector<std::pair<int, int>> edges;
    for (int z = 0; z < c.mz(); ++z)
        for (int q : c.hz.row_support(z)) edges.emplace_back(k.z_vertex(z), k.q_vertex(q));
    for (int x = 0; x < c.mx(); ++x)
        for (int q : c.hx.row_support(x)) edges.emplace_back(k.q_vertex(q), k.x_vertex(x));
    for (int z = 0; z < c.mz(); ++z) {
        for (int x = 0; x < c.mx(); ++x) {
            const uint64_t* pz = c.hz.row_ptr(z);
            const uint64_t* px = c.hx.row_ptr(x);
            bool overlap = false;
            for (int w = 0; w < c.hz.words_per_row(); ++w)
                if (pz[w] & px[w]) { overlap = true; break; }
            if (!overlap) continue;
            edges.emplace_back(k.z_vertex(z), k.x_vertex(x));
            for (int q = 0; q < c.n(); ++q)
                if (c.hz.get(z, q) && c.hx.get(x, q))
                    k.faces.push_back({k.z_vertex(z), k.q_vertex(q), k.x_vertex(x)});
        }
    }
    std::sort(edges.begin(), edges.end());
    k.edges = std::move(edges);
    return k;
}

struct SpanningTree {
    int root = -1;
    std::vector<int> parent;      // parent vertex, -1 at root
    std::vector<int> parent_edge; // edge id to parent, -1 at root
    std::vector<bool> in_tree;    // per edge id
    std::vector<int> bfs_order;
};

/// BFS tree; default root is the lowest-index qubit vertex. Throws on a
/// disconnected 1-skeleton, listing the components.
inline SpanningTree spanning_tree(const ConeComplex& k, int root = -1) {
    int nv = k.num_vertices();
    if (root < 0) root = k.q_vertex(0);
    if (nv == 0) throw std::invalid_argument("spanning_tree: empty complex");
    SpanningTree t;
    t.root = root;
    t.parent.assign(nv, -1);
    t.parent_edge.assign(nv, -1);
    t.in_tree.assign(k.edges.size(), false);
    auto adj = k.adjacency();
    std::vector<bool> seen(nv, false);
    seen[root] = true;
    t.bfs_order.push_back(root);
    for (size_t head = 0; head < t.bfs_order.size(); ++head) {
        int u = t.bfs_order[head];
        for (int v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            int e = k.edge_index(u, v);
            t.parent[v] = u;
            t.parent_edge[v] = e;
            t.in_tree[e] = true;
            t.bfs_order.push_back(v);
        }
    }
    if (static_cast<int>(t.bfs_order.size()) != nv) {
        // collect components for the error message
        std::vector<int> comp(nv, -1);
        int nc = 0;
        for (int s = 0; s < nv; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> queue = {s};
            comp[s] = nc;
            for (size_t head = 0; head < queue.size(); ++head)
                for (int w : adj[queue[head]])
                    if (comp[w] < 0) { comp[w] = nc; queue.push_back(w); }
            ++nc;
        }
        throw std::invalid_argument("spanning_tree: 1-skeleton has " + std::to_string(nc) +
                                    " components");
    }
    return t;
}

/// A word over signed generators: +-(g+1) means generator g or its inverse.
using Word = std::vector<int>;

inline void free_reduce(Word& w) {
    Word out;
    for (int s : w) {
        if (!out.empty() && out.back() == -s) out.pop_back();
        else out.push_back(s);
    }
    w = std::move(out);
}

inline void cyclic_reduce(Word& w) {
    free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        free_reduce(w);
    }
}

inline Word invert_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& s : out) s = -s;
    return out;
}

/// Presentation of the fundamental group in the gauge where tree edges are
/// trivial: one generator per non-tree edge, one relator per face. The
/// substitution map keeps, for every original generator, a word in the
/// current generators; it starts as the identity map and is updated by
/// simplification so that voltages found on a simplified presentation can
/// be pushed back to every edge of the complex.
struct Presentation {
    int num_original = 0;            // original generators = non-tree edges
    std::vector<int> gen_edge;       // original generator -> edge id
    std::vector<int> edge_gen;       // edge id -> original generator or -1
    std::vector<Word> relators;      // words over current generators
    std::vector<bool> alive;         // current generator flags (indexed like originals)
    std::vector<Word> substitution;  // original generator -> word over current generators
    bool budget_exhausted = false;

    std::vector<int> alive_generators() const {
        std::vector<int> g;
        for (int i = 0; i < num_original; ++i)
            if (alive[i]) g.push_back(i);
        return g;
    }
    int num_alive() const { return static_cast<int>(alive_generators().size()); }
};

inline Presentation presentation(const ConeComplex& k, const SpanningTree& t) {
    Presentation p;
    p.edge_gen.assign(k.edges.size(), -1);
    for (size_t e = 0; e < k.edges.size(); ++e) {
        if (!t.in_tree[e]) {
            p.edge_gen[e] = p.num_original;
            p.gen_edge.push_back(static_cast<int>(e));
            ++p.num_original;
        }
    }
    p.alive.assign(p.num_original, true);
    p.substitution.resize(p.num_original);
    for (int g = 0; g < p.num_original; ++g) p.substitution[g] = {g + 1};
    for (const auto& face : k.faces) {
        Word w;
        int L = static_cast<int>(face.size());
        for (int i = 0; i < L; ++i) {
            int u = face[i], v = face[(i + 1) % L];
            int lo = std::min(u, v), hi = std::max(u, v);
            int e = k.edge_index(lo, hi);
            int g = p.edge_gen[e];
            if (g < 0) continue; // tree edge carries the identity
            w.push_back(u < v ? g + 1 : -(g + 1));
        }
        free_reduce(w);
        p.relators.push_back(std::move(w));
    }
    return p;
}

namespace detail {

inline void substitute(Word& w, int gen, const Word& replacement) {
    // replace every occurrence of generator `gen` (1-based magnitude) in w
    Word out;
    for (int s : w) {
        if (s == gen + 1) out.insert(out.end(), replacement.begin(), replacement.end());
        else if (s == -(gen + 1)) {
            Word inv = invert_word(replacement);
            out.insert(out.end(), inv.begin(), inv.end());
        } else out.push_back(s);
    }
    free_reduce(out);
    w = std::move(out);
}

} // namespace detail

/// Tietze-style reduction: drop trivial relators, eliminate generators that
/// occur exactly once in some relator, free/cyclically reduce. The budget
/// bounds the total rewriting work; when it runs out the partially
/// simplified presentation is returned with a flag.
inline Presentation simplify_presentation(Presentation p, long long budget = 2000000) {
    long long work = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& r : p.relators) cyclic_reduce(r);
        p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                        [](const Word& w) { return w.empty(); }),
                         p.relators.end());
        // shortest relators first makes the next substitution cheap
        std::stable_sort(p.relators.begin(), p.relators.end(),
                         [](const Word& a, const Word& b) { return a.size() < b.size(); });

        int pick_rel = -1, pick_pos = -1, pick_gen = -1;
        for (size_t ri = 0; ri < p.relators.size() && pick_rel < 0; ++ri) {
            const Word& r = p.relators[ri];
            std::map<int, int> count;
            for (int s : r) ++count[std::abs(s) - 1];
            for (size_t pos = 0; pos < r.size(); ++pos) {
                int g = std::abs(r[pos]) - 1;
                if (count[g] == 1) {
                    pick_rel = static_cast<int>(ri);
                    pick_pos = static_cast<int>(pos);
                    pick_gen = g;
                    break;
                }
            }
        }
        if (pick_rel < 0) break;

        // rotate the relator so the picked occurrence is last: r = w . g^s,
        // hence g^s = w^{-1}.
        Word r = p.relators[pick_rel];
        std::rotate(r.begin(), r.begin() + pick_pos + 1, r.end());
        int s = r.back() > 0 ? 1 : -1;
        r.pop_back();
        Word value = invert_word(r);
        if (s < 0) value = invert_word(value);

        p.relators.erase(p.relators.begin() + pick_rel);
        for (auto& rel : p.relators) {
            work += static_cast<long long>(rel.size());
            detail::substitute(rel, pick_gen, value);
        }
        for (auto& sub : p.substitution) {
            work += static_cast<long long>(sub.size());
            detail::substitute(sub, pick_gen, value);
        }
        p.alive[pick_gen] = false;
        changed = true;
        if (work > budget) {
            p.budget_exhausted = true;
            break;
        }
    }
    return p;
}

/// One added face per consecutive basepoint pair of a disconnected induced
/// subgraph. Basepoints are the lowest-index vertices of the components;
/// connecting paths are BFS-shortest, searched first in the one-sided
/// Tanner graph, then in the full Tanner graph without the apex, then with
/// it. The output complex shares the input's vertex and edge sets.
inline ConeComplex fill_disconnected_cones(const ConeComplex& k, const CssCode& c) {
    ConeComplex out = k;

    // adjacency restricted to Tanner edges (no XZ edges)
    int nv = k.num_vertices();
    std::vector<std::vector<int>> adj_qz(nv), adj_qx(nv), adj_t(nv);
    for (size_t e = 0; e < k.edges.size(); ++e) {
        auto [u, v] = k.edges[e];
        EdgeType ty = k.edge_type(static_cast<int>(e));
        if (ty == EdgeType::XZ) continue;
        adj_t[u].push_back(v);
        adj_t[v].push_back(u);
        if (ty == EdgeType::QZ) {
            adj_qz[u].push_back(v);
            adj_qz[v].push_back(u);
        } else {
            adj_qx[u].push_back(v);
            adj_qx[v].push_back(u);
        }
    }
    for (auto* a : {&adj_qz, &adj_qx, &adj_t})
        for (auto& row : *a) std::sort(row.begin(), row.end());

    auto bfs_path = [&](const std::vector<std::vector<int>>& adj, int from, int to,
                        int banned) -> std::vector<int> {
        std::vector<int> prev(nv, -2);
        std::vector<int> queue = {from};
        prev[from] = -1;
        if (banned >= 0) prev[banned] = -3;
        for (size_t head = 0; head < queue.size() && prev[to] == -2; ++head)
            for (int w : adj[queue[head]])
                if (prev[w] == -2) {
                    prev[w] = queue[head];
                    queue.push_back(w);
                }
        if (prev[to] == -2 || prev[to] == -3) return {};
        std::vector<int> path;
        for (int v = to; v != -1; v = prev[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    };

    auto fill_side = [&](CheckSide side) {
        int count = side == CheckSide::Z ? c.mz() : c.mx();
        for (int chk = 0; chk < count; ++chk) {
            InducedSubgraph sub = induced_subgraph(c, side, chk);
            auto comps = sub.components();
            if (comps.size() <= 1) continue;
            int apex = side == CheckSide::Z ? k.z_vertex(chk) : k.x_vertex(chk);
            // basepoint of a component: its lowest global vertex id
            std::vector<int> basepoints;
            for (const auto& comp : comps) {
                int best = -1;
                for (int enc : comp) {
                    int v;
                    if (enc % 2 == 0) v = k.q_vertex(enc / 2);
                    else v = side == CheckSide::Z ? k.x_vertex(enc / 2) : k.z_vertex(enc / 2);
                    if (best < 0 || v < best) best = v;
                }
                basepoints.push_back(best);
            }
            std::sort(basepoints.begin(), basepoints.end());
            const auto& side_adj = side == CheckSide::Z ? adj_qx : adj_qz;
            for (size_t i = 0; i + 1 < basepoints.size(); ++i) {
                int a = basepoints[i], b = basepoints[i + 1];
                std::vector<int> path = bfs_path(side_adj, a, b, apex);
                if (path.empty()) path = bfs_path(adj_t, a, b, apex);
                if (path.empty()) path = bfs_path(adj_t, a, b, -1);
                if (path.empty())
                    throw std::runtime_error("fill_disconnected_cones: basepoints unreachable");
                // face cycle: apex, a, ...path..., b, back to apex
                std::vector<int> cycle;
                cycle.push_back(apex);
                for (int v : path) cycle.push_back(v);
                out.faces.push_back(std::move(cycle));
            }
        }
    };
    fill_side(CheckSide::Z);
    fill_side(CheckSide::X);
    return out;
}

} // namespace qlift
