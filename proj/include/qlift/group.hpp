// Finite groups as multiplication tables, with the constructors needed for
// the lift search: cyclic, direct and semidirect products, permutation
// closures, and a small named catalogue.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlift {

/// Multiplication-table group. Element 0 is the identity. Composition is
/// read left to right: mul(g, h) is "g then h"; for permutation groups this
/// means (g*h)(i) = h(g(i)).
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name) {
        FiniteGroup g;
        g.order_ = static_cast<int>(table.size());
        g.name_ = std::move(name);
        g.mul_.assign(static_cast<size_t>(g.order_) * g.order_, 0);
        for (int a = 0; a < g.order_; ++a) {
            if (static_cast<int>(table[a].size()) != g.order_)
                throw std::invalid_argument("group table is not square");
            for (int b = 0; b < g.order_; ++b) {
                int v = table[a][b];
                if (v < 0 || v >= g.order_)
                    throw std::invalid_argument("group table entry out of range");
                g.mul_[static_cast<size_t>(a) * g.order_ + b] = static_cast<uint16_t>(v);
            }
        }
        g.finish_validation();
        return g;
    }

    static FiniteGroup cyclic(int n) {
        if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        return from_table(std::move(t), n == 1 ? "e" : "Z" + std::to_string(n));
    }

    static FiniteGroup direct(const FiniteGroup& g, const FiniteGroup& h) {
        int n = g.order_ * h.order_;
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        auto enc = [&](int a, int b) { return a * h.order_ + b; };
        for (int a1 = 0; a1 < g.order_; ++a1)
            for (int b1 = 0; b1 < h.order_; ++b1)
                for (int a2 = 0; a2 < g.order_; ++a2)
                    for (int b2 = 0; b2 < h.order_; ++b2)
                        t[enc(a1, b1)][enc(a2, b2)] = enc(g.mul(a1, a2), h.mul(b1, b2));
        return from_table(std::move(t), g.name_ + "x" + h.name_);
    }

    /// Z_n x| Z_m with the Z_m generator acting as multiplication by k on Z_n.
    /// Requires k^m = 1 (mod n) and gcd(k, n) = 1.
    static FiniteGroup semidirect(int n, int m, int k) {
        if (n < 1 || m < 1) throw std::invalid_argument("semidirect: bad orders");
        k = ((k % n) + n) % n;
        if (std::gcd(k, n) != 1)
            throw std::invalid_argument("semidirect: action is not invertible mod n");
        long long kk = 1;
        for (int i = 0; i < m; ++i) kk = (kk * k) % n;
        if (kk % n != 1 % n)
            throw std::invalid_argument("semidirect: k^m != 1 mod n");
        // element (a, x) with a in Z_n, x in Z_m; (a,x)(b,y) = (a + k^x b, x + y)
        std::vector<int> kpow(m);
        kpow[0] = 1 % n;
        for (int i = 1; i < m; ++i) kpow[i] = static_cast<int>((static_cast<long long>(kpow[i - 1]) * k) % n);
        int order = n * m;
        std::vector<std::vector<int>> t(order, std::vector<int>(order));
        auto enc = [&](int a, int x) { return a * m + x; };
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < m; ++x)
                for (int b = 0; b < n; ++b)
                    for (int y = 0; y < m; ++y)
                        t[enc(a, x)][enc(b, y)] = enc((a + kpow[x] * b) % n, (x + y) % m);
        return from_table(std::move(t), "Z" + std::to_string(n) + ":Z" + std::to_string(m) +
                                             "@" + std::to_string(k));
    }

    /// Closure of permutation generators on {0..degree-1} under composition.
    /// Throws if the closure exceeds `cap` elements.
    static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                         std::string name = "", int cap = 20160) {
        for (const auto& p : gens) {
            if (static_cast<int>(p.size()) != degree)
                throw std::invalid_argument("from_permutations: generator has wrong degree");
            std::vector<bool> seen(degree, false);
            for (int v : p) {
                if (v < 0 || v >= degree || seen[v])
                    throw std::invalid_argument("from_permutations: not a permutation");
                seen[v] = true;
            }
        }
        std::vector<int> id(degree);
        std::iota(id.begin(), id.end(), 0);
        std::vector<std::vector<int>> elems = {id};
        std::map<std::vector<int>, int> index = {{id, 0}};
        for (size_t head = 0; head < elems.size(); ++head) {
            for (const auto& gen : gens) {
                std::vector<int> prod(degree);
                for (int i = 0; i < degree; ++i) prod[i] = gen[elems[head][i]];
                if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                    elems.push_back(prod);
                    if (static_cast<int>(elems.size()) > cap)
                        throw std::invalid_argument("from_permutations: closure exceeds cap");
                }
            }
        }
        int order = static_cast<int>(elems.size());
        std::vector<std::vector<int>> t(order, std::vector<int>(order));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                std::vector<int> prod(degree);
                for (int i = 0; i < degree; ++i) prod[i] = elems[b][elems[a][i]];
                t[a][b] = index.at(prod);
            }
        FiniteGroup g = from_table(std::move(t), name.empty() ? "perm" + std::to_string(order) : name);
        g.perm_elems_ = std::move(elems);
        return g;
    }

    static FiniteGroup symmetric(int d) {
        std::vector<std::vector<int>> gens;
        if (d >= 2) {
            std::vector<int> swap01(d);
            std::iota(swap01.begin(), swap01.end(), 0);
            std::swap(swap01[0], swap01[1]);
            std::vector<int> cyc(d);
            for (int i = 0; i < d; ++i) cyc[i] = (i + 1) % d;
            gens = {swap01, cyc};
        }
        return from_permutations(d, gens, "S" + std::to_string(d));
    }

    int order() const { return order_; }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != 0) { x = mul(x, a); ++k; }
        return k;
    }

    bool is_abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = a + 1; b < order_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    int pow(int a, long long e) const {
        if (e < 0) { a = inv(a); e = -e; }
        int acc = 0;
        while (e-- > 0) acc = mul(acc, a);
        return acc;
    }

    /// Natural permutation action when the group was built from permutations;
    /// for perm groups act(g, i) applies element g to point i.
    bool has_permutation_action() const { return !perm_elems_.empty(); }
    int degree() const { return perm_elems_.empty() ? 0 : static_cast<int>(perm_elems_[0].size()); }
    int act(int g, int i) const { return perm_elems_[g][i]; }
    const std::vector<int>& perm(int g) const { return perm_elems_[g]; }

    /// Closure of a set of elements under multiplication, ascending order.
    std::vector<int> generated_subgroup(const std::vector<int>& s) const {
        std::vector<bool> in(order_, false);
        in[0] = true;
        std::vector<int> queue = {0};
        for (int g : s)
            if (g >= 0 && g < order_ && !in[g]) { in[g] = true; queue.push_back(g); }
        for (size_t head = 0; head < queue.size(); ++head)
            for (int g : s) {
                int p = mul(queue[head], g);
                if (!in[p]) { in[p] = true; queue.push_back(p); }
            }
        std::vector<int> out;
        for (int i = 0; i < order_; ++i)
            if (in[i]) out.push_back(i);
        return out;
    }

    bool generates(const std::vector<int>& s) const {
        return static_cast<int>(generated_subgroup(s).size()) == order_;
    }

    /// Canonical generator set: greedily add the smallest element outside the
    /// closure so far. Deterministic; used to drive automorphism search.
    std::vector<int> canonical_generators() const {
        std::vector<int> gens;
        std::vector<int> closure = {0};
        while (static_cast<int>(closure.size()) < order_) {
            int next = -1;
            std::vector<bool> in(order_, false);
            for (int g : closure) in[g] = true;
            for (int i = 1; i < order_; ++i)
                if (!in[i]) { next = i; break; }
            gens.push_back(next);
            closure = generated_subgroup(gens);
        }
        return gens;
    }

    std::string describe() const {
        return name_ + " (order " + std::to_string(order_) + ")";
    }

private:
    int order_ = 0;
    std::string name_;
    std::vector<uint16_t> mul_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> perm_elems_;

    void finish_validation() {
        // identity
        for (int a = 0; a < order_; ++a)
            if (mul(0, a) != a || mul(a, 0) != a)
                throw std::invalid_argument("group table: element 0 is not the identity");
        // inverses via table scan
        inv_.assign(order_, -1);
        for (int a = 0; a < order_; ++a) {
            for (int b = 0; b < order_; ++b)
                if (mul(a, b) == 0 && mul(b, a) == 0) { inv_[a] = b; break; }
            if (inv_[a] < 0) throw std::invalid_argument("group table: missing inverse");
        }
        // latin square rows (cancellation)
        std::vector<bool> seen(order_);
        for (int a = 0; a < order_; ++a) {
            std::fill(seen.begin(), seen.end(), false);
            for (int b = 0; b < order_; ++b) {
                int v = mul(a, b);
                if (seen[v]) throw std::invalid_argument("group table: row is not a permutation");
                seen[v] = true;
            }
        }
        // associativity: full check for small orders, sampled above
        if (order_ <= 64) {
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    for (int c = 0; c < order_; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw std::invalid_argument("group table: not associative");
        } else {
            uint64_t s = 0x12345;
            for (int trial = 0; trial < 20000; ++trial) {
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                int a = static_cast<int>((s >> 33) % order_);
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                int b = static_cast<int>((s >> 33) % order_);
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                int c = static_cast<int>((s >> 33) % order_);
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("group table: not associative");
            }
        }
    }
};

/// All automorphisms as permutations of elements. Search assigns images to
/// the canonical generators, pruning on element order, then extends by
/// closure. Guarded by an order cap since the search is exponential.
inline std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int cap = 48) {
    if (g.order() > cap)
        throw std::invalid_argument("automorphisms: group order " + std::to_string(g.order()) +
                                    " exceeds cap " + std::to_string(cap) +
                                    "; rerun without dedupe");
    std::vector<int> gens = g.canonical_generators();
    int m = static_cast<int>(gens.size());
    std::vector<std::vector<int>> result;
    std::vector<int> images(m, -1);

    // Extend a generator-image choice to a full map by closure; empty on clash.
    auto extend = [&]() -> std::vector<int> {
        std::vector<int> phi(g.order(), -1);
        phi[0] = 0;
        std::vector<int> reached = {0};
        for (int i = 0; i < m; ++i) {
            if (phi[gens[i]] == -1) {
                phi[gens[i]] = images[i];
                reached.push_back(gens[i]);
            } else if (phi[gens[i]] != images[i]) {
                return {};
            }
        }
        for (size_t head = 0; head < reached.size(); ++head) {
            int x = reached[head];
            for (int i = 0; i < m; ++i) {
                int y = g.mul(x, gens[i]);
                int img = g.mul(phi[x], images[i]);
                if (phi[y] == -1) {
                    phi[y] = img;
                    reached.push_back(y);
                } else if (phi[y] != img) {
                    return {};
                }
            }
        }
        if (static_cast<int>(reached.size()) != g.order()) return {};
        std::vector<bool> hit(g.order(), false);
        for (int v : phi) {
            if (v < 0 || hit[v]) return {};
            hit[v] = true;
        }
        return phi;
    };

    std::vector<std::vector<int>> candidates(m);
    for (int i = 0; i < m; ++i) {
        int ord = g.element_order(gens[i]);
        for (int x = 0; x < g.order(); ++x)
            if (g.element_order(x) == ord) candidates[i].push_back(x);
    }

    std::vector<int> stack;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            auto phi = extend();
            if (!phi.empty()) result.push_back(std::move(phi));
            return;
        }
        for (int x : candidates[depth]) {
            images[depth] = x;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

/// Decomposition of an abelian group into cyclic factors of prime power
/// order, with the exponent-vector coordinates of every element.
struct AbelianDecomposition {
    std::vector<int> factor_orders;          // cyclic factor sizes, each a prime power
    std::vector<int> basis;                  // one group element per factor
    std::vector<std::vector<int>> coords;    // element -> exponent vector
    int element_of(const FiniteGroup& g, const std::vector<int>& exps) const {
        int acc = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            acc = g.mul(acc, g.pow(basis[i], exps[i]));
        return acc;
    }
};

namespace detail {

inline void abelian_basis_p_group(const FiniteGroup& g, const std::vector<int>& elems,
                                  std::vector<int>& basis_out) {
    // elems: the p-primary subgroup, ascending. Recursive peel: take a
    // maximal-order element, then recurse on the quotient and lift.
    if (elems.size() <= 1) return;
    int best = elems[1];
    for (int e : elems)
        if (e != 0 && g.element_order(e) > g.element_order(best)) best = e;
    basis_out.push_back(best);

    std::vector<int> cyc = g.generated_subgroup({best});
    std::set<int> cyc_set(cyc.begin(), cyc.end());
    if (cyc.size() == elems.size()) return;

    // cosets of <best> inside the subgroup
    std::map<int, int> coset_of; // element -> coset rep (min element)
    std::vector<int> reps;
    for (int e : elems) {
        if (coset_of.count(e)) continue;
        std::vector<int> members;
        for (int c : cyc) members.push_back(g.mul(e, c));
        int rep = *std::min_element(members.begin(), members.end());
        for (int mmb : members) coset_of[mmb] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());

    // quotient group on coset reps
    std::map<int, int> rep_index;
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
    int qn = static_cast<int>(reps.size());
    std::vector<std::vector<int>> qt(qn, std::vector<int>(qn));
    for (int i = 0; i < qn; ++i)
        for (int j = 0; j < qn; ++j)
            qt[i][j] = rep_index.at(coset_of.at(g.mul(reps[i], reps[j])));
    // identity coset must sit at index 0: reps sorted ascending and the
    // identity coset contains 0, whose rep is 0.
    FiniteGroup q = FiniteGroup::from_table(qt, "quot");

    std::vector<int> qelems(qn);
    std::iota(qelems.begin(), qelems.end(), 0);
    std::vector<int> qbasis;
    abelian_basis_p_group(q, qelems, qbasis);

    for (int qb : qbasis) {
        // lift the coset rep to an element of the same order with trivial
        // intersection against <best>; one always exists in a p-group when
        // peeling a maximal cyclic factor.
        int target_ord = q.element_order(qb);
        int lift = -1;
        for (int c : cyc) {
            int cand = g.mul(reps[qb], c);
            if (g.element_order(cand) != target_ord) continue;
            std::vector<int> inter = g.generated_subgroup({cand});
            bool trivial = true;
            for (int x : inter)
                if (x != 0 && cyc_set.count(x)) { trivial = false; break; }
            if (trivial) { lift = cand; break; }
        }
        if (lift < 0)
            throw std::runtime_error("abelian decomposition: no order-preserving lift");
        basis_out.push_back(lift);
    }
}

} // namespace detail

inline AbelianDecomposition abelian_decomposition(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw std::invalid_argument("abelian_decomposition: group is not abelian");
    AbelianDecomposition d;
    if (g.order() == 1) return d;

    // primary components
    int n = g.order();
    std::vector<int> primes;
    int tmp = n;
    for (int p = 2; p * p <= tmp; ++p)
        if (tmp % p == 0) {
            primes.push_back(p);
            while (tmp % p == 0) tmp /= p;
        }
    if (tmp > 1) primes.push_back(tmp);

    for (int p : primes) {
        std::vector<int> part;
        for (int e = 0; e < n; ++e) {
            int ord = g.element_order(e);
            bool ppower = true;
            while (ord > 1) {
                if (ord % p != 0) { ppower = false; break; }
                ord /= p;
            }
            if (ppower) part.push_back(e);
        }
        std::vector<int> basis;
        detail::abelian_basis_p_group(g, part, basis);
        for (int b : basis) {
            d.basis.push_back(b);
            d.factor_orders.push_back(g.element_order(b));
        }
    }

    // coordinates by full enumeration of the basis span
    size_t total = 1;
    for (int f : d.factor_orders) total *= static_cast<size_t>(f);
    if (total != static_cast<size_t>(n))
        throw std::runtime_error("abelian decomposition: basis does not span");
    d.coords.assign(n, {});
    std::vector<int> exps(d.basis.size(), 0);
    for (size_t it = 0; it < total; ++it) {
        int e = d.element_of(g, exps);
        if (!d.coords[e].empty() && !(e == 0 && it == 0))
            throw std::runtime_error("abelian decomposition: basis not independent");
        d.coords[e] = exps;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (++exps[i] < d.factor_orders[i]) break;
            exps[i] = 0;
        }
    }
    if (n > 0 && d.coords[0].empty()) d.coords[0].assign(d.basis.size(), 0);
    return d;
}

// ---- named catalogue -------------------------------------------------------

namespace detail {

inline FiniteGroup quaternion8() {
    // {1, i, j, k, -1, -i, -j, -k} indexed 0..7
    auto neg = [](int x) { return x < 4 ? x + 4 : x - 4; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // base table on {1,i,j,k} with signs
    // encode products p = s * u where u in {1,i,j,k}, s = +-1
    auto base = [&](int a, int b, int& sign) -> int {
        // a,b in 0..3 meaning 1,i,j,k
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return prod[a][b];
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
            int sign;
            int u = base(a % 4, b % 4, sign);
            int s = sa * sb * sign;
            t[a][b] = s > 0 ? u : neg(u);
        }
    return FiniteGroup::from_table(t, "Q8");
}

inline FiniteGroup sl23() {
    // 2x2 matrices over F3 with determinant 1, generated by closure.
    std::vector<std::array<int, 4>> elems;
    std::map<std::array<int, 4>, int> index;
    auto matmul = [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
        return std::array<int, 4>{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
                                  (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
    };
    std::array<int, 4> id{1, 0, 0, 1};
    std::vector<std::array<int, 4>> gens = {{1, 1, 0, 1}, {1, 0, 1, 1}};
    elems.push_back(id);
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head)
        for (const auto& gen : gens) {
            auto p = matmul(elems[head], gen);
            if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
        }
    // move identity to slot 0 (already there); build table
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = index.at(matmul(elems[a], elems[b]));
    return FiniteGroup::from_table(t, "SL23");
}

inline std::optional<FiniteGroup> named_atom(const std::string& s) {
    if (s == "e" || s == "1" || s == "trivial") return FiniteGroup::cyclic(1);
    if (s == "A4")
        return FiniteGroup::from_permutations(4, {{1, 0, 3, 2}, {1, 2, 0, 3}}, "A4");
    if (s == "S3") return FiniteGroup::symmetric(3);
    if (s == "S4") return FiniteGroup::symmetric(4);
    if (s == "S5") return FiniteGroup::symmetric(5);
    if (s == "Q8") return quaternion8();
    if (s == "SL23" || s == "SL(2,3)") return sl23();
    if (s == "D8") return FiniteGroup::semidirect(4, 2, 3); // dihedral of order 8
    return std::nullopt;
}

} // namespace detail

/// Parse a group expression: atoms Zn, Zn:Zm@k (semidirect, @k optional:
/// smallest valid twist > 1), named groups (A4, S4, S5, Q8, SL23, D8, e),
/// combined with 'x' for direct products. Example: "Z2xZ7:Z3@2".
inline FiniteGroup parse_group(const std::string& expr) {
    auto parse_atom = [](const std::string& s) -> FiniteGroup {
        if (auto g = detail::named_atom(s)) return *g;
        if (s.size() >= 2 && s[0] == 'Z') {
            auto colon = s.find(":Z");
            if (colon == std::string::npos) {
                int n = std::stoi(s.substr(1));
                return FiniteGroup::cyclic(n);
            }
            int n = std::stoi(s.substr(1, colon - 1));
            std::string rest = s.substr(colon + 2);
            auto at = rest.find('@');
            int m, k = -1;
            if (at == std::string::npos) {
                m = std::stoi(rest);
            } else {
                m = std::stoi(rest.substr(0, at));
                k = std::stoi(rest.substr(at + 1));
            }
            if (k < 0) {
                for (int cand = 2; cand < n; ++cand) {
                    long long kk = 1;
                    bool unit = std::gcd(cand, n) == 1;
                    for (int i = 0; unit && i < m; ++i) kk = (kk * cand) % n;
                    if (unit && kk == 1 % n) { k = cand; break; }
                }
                if (k < 0)
                    throw std::invalid_argument("parse_group: no nontrivial action for " + s);
            }
            return FiniteGroup::semidirect(n, m, k);
        }
        throw std::invalid_argument("parse_group: unknown atom '" + s + "'");
    };

    std::vector<std::string> parts;
    std::string cur;
    for (char c : expr) {
        if (c == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    FiniteGroup g = parse_atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::direct(g, parse_atom(parts[i]));
    return g;
}

} // namespace qlift
