// Flat voltage assignments on a cone complex, enumeration of the
// homomorphisms they encode, materialization of lifted codes, and the
// per-lift invariant report.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlift/complex.hpp"
#include "qlift/group.hpp"

namespace qlift {

/// Group elements on the edges of a cone complex, stored on the canonical
/// orientation (lower vertex id -> higher); the reverse orientation carries
/// the inverse. Flat means the product around every face boundary is the
/// identity.
struct VoltageAssignment {
    FiniteGroup group;
    std::vector<int> edge_value; // per edge id of the complex

    /// Voltage of the oriented edge u -> v.
    int oriented(const ConeComplex& k, int u, int v) const {
        int e = k.edge_index(u, v);
        return u < v ? edge_value[e] : group.inv(edge_value[e]);
    }
};

/// Index of the first non-flat face, or -1 if all faces close up.
inline int first_nonflat_face(const ConeComplex& k, const VoltageAssignment& v) {
    for (size_t f = 0; f < k.faces.size(); ++f) {
        const auto& cyc = k.faces[f];
        int acc = v.group.identity();
        int L = static_cast<int>(cyc.size());
        for (int i = 0; i < L; ++i)
            acc = v.group.mul(acc, v.oriented(k, cyc[i], cyc[(i + 1) % L]));
        if (acc != v.group.identity()) return static_cast<int>(f);
    }
    return -1;
}

inline bool is_flat(const ConeComplex& k, const VoltageAssignment& v) {
    return first_nonflat_face(k, v) < 0;
}

struct HomSearchOptions {
    bool surjective_only = false;
    bool dedupe = false;
    long long node_budget = 50000000;
};

/// One solution of the relator equations: images of the surviving
/// generators of a (possibly simplified) presentation.
using GeneratorImages = std::vector<int>;

namespace detail {

struct HomSearch {
    const Presentation& pres;
    const FiniteGroup& g;
    std::vector<int> alive;            // alive generator ids
    std::vector<int> alive_index;      // original gen -> position in alive, or -1
    std::vector<Word> relators;        // over alive positions (signed, 1-based)
    std::vector<std::vector<int>> occ; // var -> relator ids
    long long nodes = 0;
    long long budget;
    bool budget_hit = false;
    std::vector<GeneratorImages> solutions;
    bool count_only = false;
    long long count = 0;

    HomSearch(const Presentation& p, const FiniteGroup& grp, long long node_budget)
        : pres(p), g(grp), budget(node_budget) {
        alive = p.alive_generators();
        alive_index.assign(p.num_original, -1);
        for (size_t i = 0; i < alive.size(); ++i) alive_index[alive[i]] = static_cast<int>(i);
        for (const Word& r : p.relators) {
            Word w;
            for (int s : r) {
                int orig = std::abs(s) - 1;
                int pos = alive_index[orig];
                if (pos < 0) throw std::logic_error("relator references dead generator");
                w.push_back(s > 0 ? pos + 1 : -(pos + 1));
            }
            relators.push_back(std::move(w));
        }
        occ.assign(alive.size(), {});
        for (size_t ri = 0; ri < relators.size(); ++ri) {
            std::set<int> vars;
            for (int s : relators[ri]) vars.insert(std::abs(s) - 1);
            for (int v : vars) occ[v].push_back(static_cast<int>(ri));
        }
    }

    // Evaluate a relator under a partial assignment. Returns:
    //  0 = satisfied, 1 = violated, 2 = undetermined,
    //  3 = forces `force_var` to `force_val` (single unknown occurrence).
    int eval_relator(const Word& r, const std::vector<int>& assign, int& force_var,
                     int& force_val) const {
        int unknown_occurrences = 0;
        int uvar = -1;
        for (int s : r) {
            int v = std::abs(s) - 1;
            if (assign[v] < 0) {
                ++unknown_occurrences;
                uvar = v;
            }
        }
        if (unknown_occurrences == 0) {
            int acc = g.identity();
            for (int s : r) {
                int val = assign[std::abs(s) - 1];
                acc = g.mul(acc, s > 0 ? val : g.inv(val));
            }
            return acc == g.identity() ? 0 : 1;
        }
        if (unknown_occurrences == 1) {
            // r = prefix . u^sgn . suffix = e  =>  u^sgn = prefix^{-1} suffix^{-1}
            int prefix = g.identity(), suffix = g.identity();
            bool before = true;
            int sgn = 1;
            for (int s : r) {
                int v = std::abs(s) - 1;
                if (assign[v] < 0) {
                    before = false;
                    sgn = s > 0 ? 1 : -1;
                    continue;
                }
                int val = s > 0 ? assign[v] : g.inv(assign[v]);
                if (before) prefix = g.mul(prefix, val);
                else suffix = g.mul(suffix, val);
            }
            int target = g.mul(g.inv(prefix), g.inv(suffix));
            force_var = uvar;
            force_val = sgn > 0 ? target : g.inv(target);
            return 3;
        }
        return 2;
    }

    bool propagate(std::vector<int>& assign, std::vector<int>& trail) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (const Word& r : relators) {
                int fv, fx;
                int st = eval_relator(r, assign, fv, fx);
                if (st == 1) return false;
                if (st == 3) {
                    assign[fv] = fx;
                    trail.push_back(fv);
                    progress = true;
                }
            }
        }
        return true;
    }

    int pick_variable(const std::vector<int>& assign) const {
        // most relator occurrences first; ties to the lowest index
        int best = -1, best_score = -1;
        for (size_t v = 0; v < alive.size(); ++v) {
            if (assign[v] >= 0) continue;
            int score = static_cast<int>(occ[v].size());
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(v);
            }
        }
        return best;
    }

    void emit(const std::vector<int>& assign) {
        if (count_only) {
            ++count;
            return;
        }
        solutions.emplace_back(assign);
    }

    void dfs(std::vector<int>& assign) {
        if (budget_hit) return;
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }
        std::vector<int> trail;
        if (!propagate(assign, trail)) {
            for (int v : trail) assign[v] = -1;
            return;
        }
        int var = pick_variable(assign);
        if (var < 0) {
            emit(assign);
            for (int v : trail) assign[v] = -1;
            return;
        }
        for (int val = 0; val < g.order(); ++val) {
            assign[var] = val;
            dfs(assign);
            if (budget_hit) break;
        }
        assign[var] = -1;
        for (int v : trail) assign[v] = -1;
    }

    void run() {
        std::vector<int> assign(alive.size(), -1);
        dfs(assign);
        std::sort(solutions.begin(), solutions.end());
    }
};

inline int eval_word(const Word& w, const std::vector<int>& alive_index,
                     const GeneratorImages& images, const FiniteGroup& g) {
    int acc = g.identity();
    for (int s : w) {
        int pos = alive_index[std::abs(s) - 1];
        int val = images[pos];
        acc = g.mul(acc, s > 0 ? val : g.inv(val));
    }
    return acc;
}

} // namespace detail

/// All homomorphisms as generator-image tuples on the surviving generators.
/// Throws when the node budget is exhausted.
inline std::vector<GeneratorImages> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                                   long long node_budget = 50000000) {
    detail::HomSearch search(p, g, node_budget);
    search.run();
    if (search.budget_hit)
        throw std::runtime_error("hom search: node budget exhausted with " +
                                 std::to_string(search.solutions.size()) + " partial results");
    return search.solutions;
}

/// |Hom(pi_1(K), G)|: no surjectivity filter, no dedupe.
inline long long hom_count(const Presentation& p, const FiniteGroup& g,
                           long long node_budget = 50000000) {
    detail::HomSearch search(p, g, node_budget);
    search.count_only = true;
    search.run();
    if (search.budget_hit) throw std::runtime_error("hom_count: node budget exhausted");
    return search.count;
}

namespace detail {

/// All x in [0, m)^vars with a x = 0 (mod m), m a prime power. Unit-pivot
/// echelon expresses some variables in the rest; leftover rows are divisible
/// by the prime and descend one p-adic digit.
inline std::vector<std::vector<long long>> kernel_mod_prime_power(
    std::vector<std::vector<long long>> a, int vars, long long m, long long prime) {
    for (auto& row : a)
        for (auto& x : row) x = ((x % m) + m) % m;

    auto inv_mod = [&](long long u) {
        long long t = 0, newt = 1, r = m, newr = u % m;
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        return ((t % m) + m) % m;
    };

    // dependent var -> linear expression over the other vars (mod m)
    std::vector<std::pair<int, std::vector<long long>>> dependents;
    std::vector<bool> is_dep(vars, false);
    bool found = true;
    while (found) {
        found = false;
        for (size_t i = 0; i < a.size() && !found; ++i) {
            for (int j = 0; j < vars && !found; ++j) {
                if (a[i][j] % prime == 0) continue;
                long long c = inv_mod(a[i][j]);
                std::vector<long long> expr(vars, 0);
                for (int t = 0; t < vars; ++t)
                    if (t != j) expr[t] = (m - (a[i][t] * c) % m) % m;
                dependents.emplace_back(j, expr);
                is_dep[j] = true;
                std::vector<std::vector<long long>> rest;
                for (size_t r2 = 0; r2 < a.size(); ++r2) {
                    if (r2 == i) continue;
                    auto row = a[r2];
                    long long coef = row[j];
                    if (coef) {
                        for (int t = 0; t < vars; ++t) row[t] = (row[t] + coef * expr[t]) % m;
                        row[j] = 0;
                    }
                    rest.push_back(std::move(row));
                }
                a = std::move(rest);
                found = true;
            }
        }
    }
    std::vector<int> free_vars;
    for (int j = 0; j < vars; ++j)
        if (!is_dep[j]) free_vars.push_back(j);

    std::vector<std::vector<long long>> free_sols; // values per free var
    int nfree = static_cast<int>(free_vars.size());
    if (m == prime) {
        // leftover rows vanish mod p; free vars range over the field
        std::vector<long long> cur(nfree, 0);
        size_t total = 1;
        for (int i = 0; i < nfree; ++i) total *= static_cast<size_t>(m);
        for (size_t it = 0; it < total; ++it) {
            free_sols.push_back(cur);
            for (int i = 0; i < nfree; ++i) {
                if (++cur[i] < m) break;
                cur[i] = 0;
            }
        }
    } else {
        std::vector<std::vector<long long>> reduced;
        for (const auto& row : a) {
            std::vector<long long> rr(nfree);
            for (int j = 0; j < nfree; ++j) rr[j] = row[free_vars[j]] / prime;
            reduced.push_back(std::move(rr));
        }
        auto sub = kernel_mod_prime_power(reduced, nfree, m / prime, prime);
        // x = base + (m/prime) t, the top digit t free per variable
        std::vector<long long> t(nfree, 0);
        size_t total = 1;
        for (int i = 0; i < nfree; ++i) total *= static_cast<size_t>(prime);
        for (const auto& base : sub) {
            std::fill(t.begin(), t.end(), 0);
            for (size_t it = 0; it < total; ++it) {
                std::vector<long long> x(nfree);
                for (int i = 0; i < nfree; ++i) x[i] = base[i] + (m / prime) * t[i];
                free_sols.push_back(std::move(x));
                for (int i = 0; i < nfree; ++i) {
                    if (++t[i] < prime) break;
                    t[i] = 0;
                }
            }
        }
    }

    std::vector<std::vector<long long>> out;
    for (const auto& fs : free_sols) {
        std::vector<long long> x(vars, -1);
        for (int i = 0; i < nfree; ++i) x[free_vars[i]] = fs[i];
        for (auto it = dependents.rbegin(); it != dependents.rend(); ++it) {
            long long acc = 0;
            for (int tvar = 0; tvar < vars; ++tvar)
                if (it->second[tvar]) acc += it->second[tvar] * x[tvar];
            x[it->first] = ((acc % m) + m) % m;
        }
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace detail

/// Independent solver for abelian groups: relators become integer linear
/// systems over the cyclic factors of the group, solved per prime-power
/// modulus by echelon reduction and digit lifting. Returns the same
/// generator-image tuples the search would.
inline std::vector<GeneratorImages> enumerate_homs_abelian(const Presentation& p,
                                                           const FiniteGroup& g) {
    AbelianDecomposition dec = abelian_decomposition(g);
    auto alive = p.alive_generators();
    int nv = static_cast<int>(alive.size());
    std::vector<int> alive_index(p.num_original, -1);
    for (int i = 0; i < nv; ++i) alive_index[alive[i]] = i;

    // exponent-sum matrix of the relators
    std::vector<std::vector<long long>> expo;
    for (const Word& r : p.relators) {
        std::vector<long long> row(nv, 0);
        for (int s : r) row[alive_index[std::abs(s) - 1]] += s > 0 ? 1 : -1;
        expo.push_back(std::move(row));
    }

    std::vector<std::vector<std::vector<long long>>> per_factor;
    for (int f : dec.factor_orders) {
        long long prime = 2;
        for (long long q = 2; q <= f; ++q)
            if (f % q == 0) { prime = q; break; }
        per_factor.push_back(detail::kernel_mod_prime_power(expo, nv, f, prime));
    }
    if (dec.factor_orders.empty()) {
        // trivial group: the empty assignment
        return {GeneratorImages(nv, 0)};
    }

    // cartesian product across factors -> group elements per generator
    std::vector<GeneratorImages> result;
    std::vector<size_t> idx(per_factor.size(), 0);
    while (true) {
        GeneratorImages img(nv);
        for (int v = 0; v < nv; ++v) {
            std::vector<int> exps(dec.factor_orders.size());
            for (size_t f = 0; f < per_factor.size(); ++f)
                exps[f] = static_cast<int>(per_factor[f][idx[f]][v]);
            img[v] = dec.element_of(g, exps);
        }
        result.push_back(std::move(img));
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == per_factor[pos].size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }

    // safety: verify every relator in the group table
    std::vector<int> aidx(p.num_original, -1);
    for (int i = 0; i < nv; ++i) aidx[alive[i]] = i;
    for (const auto& img : result)
        for (const Word& r : p.relators)
            if (detail::eval_word(r, aidx, img, g) != g.identity())
                throw std::logic_error("abelian solver produced a non-solution");
    std::sort(result.begin(), result.end());
    return result;
}

/// Expand generator images into a full voltage assignment: tree edges carry
/// the identity, non-tree edges the image of their substitution word.
inline VoltageAssignment voltages_from_images(const ConeComplex& k, const Presentation& p,
                                              const FiniteGroup& g, const GeneratorImages& images) {
    auto alive = p.alive_generators();
    std::vector<int> alive_index(p.num_original, -1);
    for (size_t i = 0; i < alive.size(); ++i) alive_index[alive[i]] = static_cast<int>(i);
    VoltageAssignment v;
    v.group = g;
    v.edge_value.assign(k.edges.size(), g.identity());
    for (int gen = 0; gen < p.num_original; ++gen)
        v.edge_value[p.gen_edge[gen]] = detail::eval_word(p.substitution[gen], alive_index, images, g);
    return v;
}

struct FlatHom {
    GeneratorImages images; // on surviving generators
    VoltageAssignment voltage;
};

/// Enumerate flat assignments. With dedupe, one representative per orbit of
/// generator-image tuples under Aut(G) is kept (lexicographically least).
inline std::vector<FlatHom> enumerate_flat_homs(const ConeComplex& k, const Presentation& p,
                                                const FiniteGroup& g,
                                                const HomSearchOptions& opts = {}) {
    std::vector<GeneratorImages> sols = enumerate_homs(p, g, opts.node_budget);
    auto alive = p.alive_generators();

    if (opts.surjective_only) {
        std::vector<GeneratorImages> kept;
        for (auto& s : sols)
            if (g.generates(s)) kept.push_back(std::move(s));
        sols = std::move(kept);
    }
    if (opts.dedupe && !sols.empty()) {
        auto auts = automorphisms(g);
        std::set<GeneratorImages> seen;
        std::vector<GeneratorImages> kept;
        for (auto& s : sols) {
            GeneratorImages canon = s;
            for (const auto& phi : auts) {
                GeneratorImages mapped(s.size());
                for (size_t i = 0; i < s.size(); ++i) mapped[i] = phi[s[i]];
                if (mapped < canon) canon = mapped;
            }
            if (seen.insert(canon).second) kept.push_back(std::move(s));
        }
        sols = std::move(kept);
    }

    std::vector<FlatHom> out;
    for (const auto& s : sols) {
        FlatHom h;
        h.images = s;
        h.voltage = voltages_from_images(k, p, g, s);
        out.push_back(std::move(h));
    }
    // canonical output order regardless of search schedule
    std::sort(out.begin(), out.end(),
              [](const FlatHom& a, const FlatHom& b) { return a.voltage.edge_value < b.voltage.edge_value; });
    return out;
}

/// A materialized lift: base code, voltage, degree, and the lifted code.
/// Cell (c, i) of the lift sits at index c*degree + i on both sides.
struct RegularLift {
    CssCode base;
    ConeComplex complex;
    VoltageAssignment voltage;
    CssCode lifted;
    int degree = 1;
    bool regular = true; // false for permutation-voltage covers

    int lifted_index(int base_index, int fiber) const { return base_index * degree + fiber; }
};

namespace detail {

inline int fiber_step(const FiniteGroup& g, bool regular, int fiber, int w) {
    // regular cover: right multiplication on the group; permutation cover:
    // the natural action on points
    return regular ? g.mul(fiber, w) : g.act(w, fiber);
}

} // namespace detail

/// Lift a code along a flat voltage assignment on its cone complex. The
/// lifted X row (x, i) touches (q, step(i, w[x->q])) for q in supp(x), and
/// Z rows likewise.
inline RegularLift lift_code(const CssCode& base, const ConeComplex& k,
                             const VoltageAssignment& v, bool regular = true) {
    int bad = first_nonflat_face(k, v);
    if (bad >= 0)
        throw std::invalid_argument("lift_code: voltage is not flat on face " + std::to_string(bad));
    const FiniteGroup& g = v.group;
    int d = regular ? g.order() : g.degree();
    if (!regular && !g.has_permutation_action())
        throw std::invalid_argument("lift_code: permutation cover needs a permutation group");

    RegularLift lift;
    lift.base = base;
    lift.complex = k;
    lift.voltage = v;
    lift.degree = d;
    lift.regular = regular;

    BitMatrix hx(base.mx() * d, base.n() * d);
    BitMatrix hz(base.mz() * d, base.n() * d);
    for (int x = 0; x < base.mx(); ++x)
        for (int q : base.hx.row_support(x)) {
            int w = v.oriented(k, k.x_vertex(x), k.q_vertex(q));
            for (int i = 0; i < d; ++i)
                hx.set(x * d + i, q * d + detail::fiber_step(g, regular, i, w), true);
        }
    for (int z = 0; z < base.mz(); ++z)
        for (int q : base.hz.row_support(z)) {
            int w = v.oriented(k, k.z_vertex(z), k.q_vertex(q));
            for (int i = 0; i < d; ++i)
                hz.set(z * d + i, q * d + detail::fiber_step(g, regular, i, w), true);
        }
    lift.lifted = new_css(std::move(hx), std::move(hz));
    for (int z = 0; z < base.mz(); ++z)
        for (int i = 0; i < d; ++i)
            lift.lifted.z_labels[z * d + i] = base.z_labels[z] + "@" + std::to_string(i);
    for (int q = 0; q < base.n(); ++q)
        for (int i = 0; i < d; ++i)
            lift.lifted.q_labels[q * d + i] = base.q_labels[q] + "@" + std::to_string(i);
    for (int x = 0; x < base.mx(); ++x)
        for (int i = 0; i < d; ++i)
            lift.lifted.x_labels[x * d + i] = base.x_labels[x] + "@" + std::to_string(i);
    return lift;
}

struct LiftReport {
    bool css_valid = false;
    bool length_ok = false;
    bool weights_ok = false;
    bool k_bound_ok = false;
    bool connectivity_expected = false;
    bool connectivity_actual = false;
    bool connectivity_ok = false;
    int k_lifted = 0;

    bool all_pass() const {
        return css_valid && length_ok && weights_ok && k_bound_ok && connectivity_ok;
    }
};

/// Check the properties every lift must satisfy: CSS validity, n' = d n,
/// weight multisets equal to d copies of the base multisets, the dimension
/// lower bound, and (for regular lifts) connectivity iff the voltage image
/// generates the group.
inline LiftReport verify_lift(const RegularLift& lift) {
    LiftReport r;
    const CssCode& b = lift.base;
    const CssCode& l = lift.lifted;
    int d = lift.degree;

    r.css_valid = mul(l.hx, l.hz.transpose()).is_zero();
    r.length_ok = l.n() == d * b.n() && l.mx() == d * b.mx() && l.mz() == d * b.mz();

    auto repeated = [&](std::vector<int> w) {
        std::vector<int> out;
        for (int x : w)
            for (int i = 0; i < d; ++i) out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto sorted = [](std::vector<int> w) {
        std::sort(w.begin(), w.end());
        return w;
    };
    r.weights_ok = sorted(l.hx.row_weights()) == repeated(b.hx.row_weights()) &&
                   sorted(l.hz.row_weights()) == repeated(b.hz.row_weights()) &&
                   sorted(l.hx.col_weights()) == repeated(b.hx.col_weights()) &&
                   sorted(l.hz.col_weights()) == repeated(b.hz.col_weights());

    r.k_lifted = l.n() - rank(l.hx) - rank(l.hz);
    r.k_bound_ok = r.k_lifted >= d * (b.n() - b.mx() - b.mz());

    if (lift.regular) {
        std::vector<int> image(lift.voltage.edge_value.begin(), lift.voltage.edge_value.end());
        r.connectivity_expected = lift.voltage.group.generates(image);
    } else {
        // transitive image on the fiber
        const FiniteGroup& g = lift.voltage.group;
        std::vector<bool> orbit(d, false);
        orbit[0] = true;
        std::vector<int> queue = {0};
        for (size_t head = 0; head < queue.size(); ++head)
            for (int w : lift.voltage.edge_value) {
                for (int val : {w, g.inv(w)}) {
                    int to = g.act(val, queue[head]);
                    if (!orbit[to]) {
                        orbit[to] = true;
                        queue.push_back(to);
                    }
                }
            }
        r.connectivity_expected = static_cast<int>(queue.size()) == d;
    }
    r.connectivity_actual = is_connected(tanner_graph(l));
    r.connectivity_ok = r.connectivity_expected == r.connectivity_actual;
    return r;
}

/// Flat assignments into S_d whose image acts transitively on the fiber,
/// deduplicated by simultaneous conjugation (fiber relabeling).
inline std::vector<FlatHom> enumerate_perm_covers(const ConeComplex& k, const Presentation& p,
                                                  int d, const HomSearchOptions& opts = {}) {
    if (d < 1 || d > 5)
        throw std::invalid_argument("enumerate_perm_covers: degree must be in 1..5");
    FiniteGroup sd = FiniteGroup::symmetric(d);
    std::vector<GeneratorImages> sols = enumerate_homs(p, sd, opts.node_budget);

    // transitivity of the generated subgroup on {0..d-1}
    std::vector<GeneratorImages> transitive;
    for (auto& s : sols) {
        std::vector<bool> orbit(d, false);
        orbit[0] = true;
        std::vector<int> queue = {0};
        for (size_t head = 0; head < queue.size(); ++head)
            for (int w : s)
                for (int val : {w, sd.inv(w)}) {
                    int to = sd.act(val, queue[head]);
                    if (!orbit[to]) {
                        orbit[to] = true;
                        queue.push_back(to);
                    }
                }
        if (static_cast<int>(queue.size()) == d) transitive.push_back(std::move(s));
    }

    if (opts.dedupe) {
        std::set<GeneratorImages> seen;
        std::vector<GeneratorImages> kept;
        for (auto& s : transitive) {
            GeneratorImages canon = s;
            for (int sigma = 0; sigma < sd.order(); ++sigma) {
                GeneratorImages mapped(s.size());
                for (size_t i = 0; i < s.size(); ++i)
                    mapped[i] = sd.mul(sd.mul(sd.inv(sigma), s[i]), sigma);
                if (mapped < canon) canon = mapped;
            }
            if (seen.insert(canon).second) kept.push_back(std::move(s));
        }
        transitive = std::move(kept);
    }

    std::vector<FlatHom> out;
    for (const auto& s : transitive) {
        FlatHom h;
        h.images = s;
        h.voltage = voltages_from_images(k, p, sd, s);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(),
              [](const FlatHom& a, const FlatHom& b) { return a.voltage.edge_value < b.voltage.edge_value; });
    return out;
}

} // namespace qlift
