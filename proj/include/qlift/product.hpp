// Product constructions: hypergraph product of two classical codes,
// balanced product of lifted codes over a common group, the diagonal-action
// lift of a hypergraph product from two classical voltage assignments, and
// the equivalence check between the two routes.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlift/code.hpp"
#include "qlift/cover.hpp"

namespace qlift {

/// Hypergraph product. Cells are pairs: Z-checks (bit1, bit2), X-checks
/// (check1, check2), qubits (bit1, check2) then (check1, bit2); the second
/// index runs fastest inside each block.
inline CssCode hpc(const ClassicalCode& c1, const ClassicalCode& c2) {
    int n1 = c1.n(), m1 = c1.m(), n2 = c2.n(), m2 = c2.m();
    int nq = n1 * m2 + m1 * n2;
    auto qa = [&](int b1, int a2) { return b1 * m2 + a2; };            // block (bit1, check2)
    auto qb = [&](int a1, int b2) { return n1 * m2 + a1 * n2 + b2; };  // block (check1, bit2)
    BitMatrix hz(n1 * n2, nq), hx(m1 * m2, nq);
    for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
            int row = b1 * n2 + b2;
            for (int a2 = 0; a2 < m2; ++a2)
                if (c2.h.get(a2, b2)) hz.set(row, qa(b1, a2), true);
            for (int a1 = 0; a1 < m1; ++a1)
                if (c1.h.get(a1, b1)) hz.set(row, qb(a1, b2), true);
        }
    for (int a1 = 0; a1 < m1; ++a1)
        for (int a2 = 0; a2 < m2; ++a2) {
            int row = a1 * m2 + a2;
            for (int b1 = 0; b1 < n1; ++b1)
                if (c1.h.get(a1, b1)) hx.set(row, qa(b1, a2), true);
            for (int b2 = 0; b2 < n2; ++b2)
                if (c2.h.get(a2, b2)) hx.set(row, qb(a1, b2), true);
        }
    return new_css(std::move(hx), std::move(hz));
}

/// Expected dimension of hpc(c1, c2) from the homology of the factors.
inline int hpc_expected_k(const ClassicalCode& c1, const ClassicalCode& c2) {
    int r1 = rank(c1.h), r2 = rank(c2.h);
    return (c1.n() - r1) * (c2.m() - r2) + (c1.m() - r1) * (c2.n() - r2);
}

/// A classical code lifted along a voltage assignment on its Tanner graph.
struct ClassicalLift {
    ClassicalCode base;
    FiniteGroup group;
    // voltage on the oriented edge check a -> bit b, identity elsewhere
    std::map<std::pair<int, int>, int> volt; // (check, bit) -> element
    int voltage(int check, int bit, bool check_to_bit) const {
        auto it = volt.find({check, bit});
        int v = it == volt.end() ? 0 : it->second;
        return check_to_bit ? v : group.inv(v);
    }

    ClassicalCode lifted() const {
        int d = group.order();
        BitMatrix h(base.m() * d, base.n() * d);
        for (int a = 0; a < base.m(); ++a)
            for (int b : base.h.row_support(a)) {
                int w = voltage(a, b, true);
                for (int g = 0; g < d; ++g) h.set(a * d + g, b * d + group.mul(g, w), true);
            }
        return make_classical(std::move(h));
    }
};

/// Chain complex of column maps over GF(2); degree i map sends degree i
/// chains to degree i-1. Used to assemble balanced products.
struct ChainComplex3 {
    // spaces listed top degree first; boundaries[i]: spaces[i] -> spaces[i+1]
    std::vector<int> dims;
    std::vector<BitMatrix> boundaries;
};

/// Balanced product over the lift group: the two factors are read as chain
/// complexes of free modules (cells x group), tensored with the diagonal
/// action divided out, and the three middle degrees are extracted as a CSS
/// code. Both factors must carry the same group.
///
/// Factor cells with their boundary voltages come straight from the lifts:
/// factor 1 is used through its right action, factor 2 through the left
/// one, so a basis of C_i (x)_G D_j is (cell1, cell2, g) with
/// g = g1^{-1} g2.
class BalancedProductBuilder {
public:
    struct Factor {
        std::vector<int> dims;                      // base-cell counts, top degree first
        // boundary supports per degree: (from_cell, to_cell, voltage of the
        // oriented edge from -> to)
        std::vector<std::vector<std::tuple<int, int, int>>> bnd;
    };

    static Factor css_factor(const RegularLift& l) {
        // degrees: Z (2) -> Q (1) -> X (0)
        Factor f;
        const CssCode& b = l.base;
        f.dims = {b.mz(), b.n(), b.mx()};
        f.bnd.resize(2);
        for (int z = 0; z < b.mz(); ++z)
            for (int q : b.hz.row_support(z))
                f.bnd[0].emplace_back(z, q, l.voltage.oriented(l.complex, l.complex.z_vertex(z),
                                                               l.complex.q_vertex(q)));
        for (int q = 0; q < b.n(); ++q)
            for (int x = 0; x < b.mx(); ++x)
                if (b.hx.get(x, q))
                    f.bnd[1].emplace_back(q, x, l.voltage.oriented(l.complex, l.complex.q_vertex(q),
                                                                   l.complex.x_vertex(x)));
        return f;
    }

    static Factor classical_factor(const ClassicalLift& l) {
        // degrees: bits (1) -> checks (0)
        Factor f;
        f.dims = {l.base.n(), l.base.m()};
        f.bnd.resize(1);
        for (int a = 0; a < l.base.m(); ++a)
            for (int b : l.base.h.row_support(a)) f.bnd[0].emplace_back(b, a, l.voltage(a, b, false));
        return f;
    }

    BalancedProductBuilder(Factor f1, Factor f2, FiniteGroup g)
        : f1_(std::move(f1)), f2_(std::move(f2)), g_(std::move(g)) {}

    /// Total-complex boundary from degree `deg` to `deg - 1`, in the basis
    /// (cell1, cell2, g) ordered by (degree pair, cell1, cell2, g).
    BitMatrix boundary(int deg) const {
        auto rows = blocks(deg);
        auto cols = blocks(deg - 1);
        int nrows = total(rows), ncols = total(cols);
        BitMatrix m(ncols, nrows); // column map: build transposed then flip
        // We fill as (to, from) entries directly in a (ncols x nrows)
        // matrix whose rows are target cells: that is the matrix of the
        // boundary as used for H_Z^T / H_X once oriented per extraction.
        int d = g_.order();
        int row_off = 0;
        for (auto [i, j] : rows) {
            // differential on C_i (x) D_j: d1 (x) id + id (x) d2
            int c2dim = f2_.dims[degree_index(f2_, j)];
            if (i > 0 && has_pair(cols, i - 1, j)) {
                int col_off = offset(cols, i - 1, j);
                for (auto [from, to, w] : f1_.bnd[degree_index(f1_, i)]) {
                    // right-module side: (c1, c2, g) -> (c1', c2, w^{-1} g)
                    int winv = g_.inv(w);
                    for (int c2 = 0; c2 < c2dim; ++c2)
                        for (int gg = 0; gg < d; ++gg) {
                            int r = row_off + (from * c2dim + c2) * d + gg;
                            int c = col_off + (to * c2dim + c2) * d + g_.mul(winv, gg);
                            m.set(c, r, true);
                        }
                }
            }
            if (j > 0 && has_pair(cols, i, j - 1)) {
                int col_off = offset(cols, i, j - 1);
                int c1dim = f1_.dims[degree_index(f1_, i)];
                for (auto [from, to, w] : f2_.bnd[degree_index(f2_, j)]) {
                    for (int c1 = 0; c1 < c1dim; ++c1)
                        for (int gg = 0; gg < d; ++gg) {
                            int r = row_off + (c1 * c2dim + from) * d + gg;
                            int c = col_off + (c1 * f2_.dims[degree_index(f2_, j - 1)] + to) * d +
                                    g_.mul(gg, w);
                            m.set(c, r, true);
                        }
                }
            }
            row_off += f1_.dims[degree_index(f1_, i)] * c2dim * d;
        }
        return m.transpose();
    }

    int dim(int deg) const { return total(blocks(deg)); }
    int top_degree() const {
        return static_cast<int>(f1_.dims.size()) - 1 + static_cast<int>(f2_.dims.size()) - 1;
    }

    /// CSS code with qubits at `qubit_degree`: H_Z rows are the boundaries
    /// of the cells one degree up, H_X rows the coboundaries from one
    /// degree down.
    CssCode extract(int qubit_degree) const {
        BitMatrix d_in = boundary(qubit_degree + 1);  // (qubit_degree+1) -> qubit_degree
        BitMatrix d_out = boundary(qubit_degree);     // qubit_degree -> (qubit_degree-1)
        BitMatrix hz = d_in;               // rows = upper cells, cols = qubits
        BitMatrix hx = d_out.transpose();  // rows = lower cells, cols = qubits
        if (!mul(hx, hz.transpose()).is_zero())
            throw std::logic_error("balanced product: boundary composition is nonzero");
        return new_css(std::move(hx), std::move(hz));
    }

private:
    Factor f1_, f2_;
    FiniteGroup g_;

    static int degree_index(const Factor& f, int deg) {
        // dims are listed top degree first
        return static_cast<int>(f.dims.size()) - 1 - deg;
    }

    std::vector<std::pair<int, int>> blocks(int deg) const {
        std::vector<std::pair<int, int>> out;
        int top1 = static_cast<int>(f1_.dims.size()) - 1;
        int top2 = static_cast<int>(f2_.dims.size()) - 1;
        for (int i = top1; i >= 0; --i) {
            int j = deg - i;
            if (j >= 0 && j <= top2) out.emplace_back(i, j);
        }
        return out;
    }

    bool has_pair(const std::vector<std::pair<int, int>>& bs, int i, int j) const {
        for (auto [a, b] : bs)
            if (a == i && b == j) return true;
        return false;
    }

    int offset(const std::vector<std::pair<int, int>>& bs, int i, int j) const {
        int off = 0;
        for (auto [a, b] : bs) {
            if (a == i && b == j) return off;
            off += f1_.dims[degree_index(f1_, a)] * f2_.dims[degree_index(f2_, b)] * g_.order();
        }
        throw std::logic_error("balanced product: missing block");
    }

    int total(const std::vector<std::pair<int, int>>& bs) const {
        int s = 0;
        for (auto [a, b] : bs)
            s += f1_.dims[degree_index(f1_, a)] * f2_.dims[degree_index(f2_, b)] * g_.order();
        return s;
    }
};

/// Balanced product of two CSS lifts over the same group: the middle three
/// degrees of the tensor double complex.
inline CssCode balanced_product(const RegularLift& l1, const RegularLift& l2) {
    if (l1.voltage.group.order() != l2.voltage.group.order() ||
        l1.voltage.group.name() != l2.voltage.group.name())
        throw std::invalid_argument("balanced_product: lift groups differ");
    BalancedProductBuilder bp(BalancedProductBuilder::css_factor(l1),
                              BalancedProductBuilder::css_factor(l2), l1.voltage.group);
    return bp.extract(2);
}

/// Balanced product of two classical lifts (2-term factors); qubits at
/// total degree 1. This reproduces the lifted hypergraph product.
inline CssCode balanced_product_classical(const ClassicalLift& l1, const ClassicalLift& l2) {
    if (l1.group.order() != l2.group.order() || l1.group.name() != l2.group.name())
        throw std::invalid_argument("balanced_product_classical: lift groups differ");
    BalancedProductBuilder bp(BalancedProductBuilder::classical_factor(l1),
                              BalancedProductBuilder::classical_factor(l2), l1.group);
    return bp.extract(1);
}

/// Lift of hpc(c1, c2) built as the diagonal quotient of the product of the
/// two lifted Tanner graphs. The quotient is materialized: cells of the
/// product of lifts are grouped into diagonal orbits and adjacency is read
/// off orbit representatives. Cell order matches hpc followed by the group
/// coordinate g = g1^{-1} g2.
inline CssCode goursat_lift_hpc(const ClassicalLift& l1, const ClassicalLift& l2) {
    if (l1.group.order() != l2.group.order() || l1.group.name() != l2.group.name())
        throw std::invalid_argument("goursat_lift_hpc: lift groups differ");
    const FiniteGroup& g = l1.group;
    int d = g.order();
    int n1 = l1.base.n(), m1 = l1.base.m(), n2 = l2.base.n(), m2 = l2.base.m();

    // Vertices of the lifted factor graphs are (cell, gamma). The product
    // carries the diagonal action gamma . ((c1,g1),(c2,g2)) =
    // ((c1, gamma g1), (c2, gamma g2)); orbits are labeled (c1, c2,
    // g1^{-1} g2) and adjacency is read off the representative with the
    // first group coordinate at the identity. Blocks follow hpc():
    //   Z = (b1, b2, g), Q = (b1, a2, g) u (a1, b2, g), X = (a1, a2, g).
    int nq = (n1 * m2 + m1 * n2) * d;
    auto q_block_a = [&](int b1, int a2, int gg) { return (b1 * m2 + a2) * d + gg; };
    auto q_block_b = [&](int a1, int b2, int gg) { return (n1 * m2 + a1 * n2 + b2) * d + gg; };
    BitMatrix hz(n1 * n2 * d, nq), hx(m1 * m2 * d, nq);

    // factor moves from an orbit representative ((c1, e), (c2, g)):
    //  factor 1 bit b1 -> check a1: ((a1, w1), (c2, g)) with w1 the voltage
    //  of b1 -> a1, orbit (a1, c2, w1^{-1} g);
    //  factor 2 bit b2 -> check a2: ((c1, e), (a2, g w2)).
    for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
            for (int gg = 0; gg < d; ++gg) {
                int row = (b1 * n2 + b2) * d + gg;
                for (int a2 = 0; a2 < m2; ++a2)
                    if (l2.base.h.get(a2, b2)) {
                        int w2 = l2.voltage(a2, b2, false); // bit2 -> check2
                        hz.set(row, q_block_a(b1, a2, g.mul(gg, w2)), true);
                    }
                for (int a1 = 0; a1 < m1; ++a1)
                    if (l1.base.h.get(a1, b1)) {
                        int w1 = l1.voltage(a1, b1, false); // bit1 -> check1
                        hz.set(row, q_block_b(a1, b2, g.mul(g.inv(w1), gg)), true);
                    }
            }
    for (int a1 = 0; a1 < m1; ++a1)
        for (int a2 = 0; a2 < m2; ++a2)
            for (int gg = 0; gg < d; ++gg) {
                int row = (a1 * m2 + a2) * d + gg;
                for (int b1 = 0; b1 < n1; ++b1)
                    if (l1.base.h.get(a1, b1)) {
                        int w1 = l1.voltage(a1, b1, true); // check1 -> bit1
                        hx.set(row, q_block_a(b1, a2, g.mul(g.inv(w1), gg)), true);
                    }
                for (int b2 = 0; b2 < n2; ++b2)
                    if (l2.base.h.get(a2, b2)) {
                        int w2 = l2.voltage(a2, b2, true); // check2 -> bit2
                        hx.set(row, q_block_b(a1, b2, g.mul(gg, w2)), true);
                    }
            }
    return new_css(std::move(hx), std::move(hz));
}

struct LpcEquivalenceReport {
    bool equal = false;
    std::string first_mismatch; // empty when equal
};

/// Compare the diagonal-quotient lift of the hypergraph product against the
/// balanced product of the two classical lifts under the canonical cell
/// identification (cell1, cell2, g). Returns the first mismatching entry
/// when they differ.
inline LpcEquivalenceReport check_lpc_equivalence(const ClassicalLift& l1, const ClassicalLift& l2) {
    CssCode lifted = goursat_lift_hpc(l1, l2);
    CssCode balanced = balanced_product_classical(l1, l2);
    LpcEquivalenceReport rep;
    if (lifted.n() != balanced.n() || lifted.mx() != balanced.mx() ||
        lifted.mz() != balanced.mz()) {
        rep.first_mismatch = "shape mismatch";
        return rep;
    }
    if (lifted.hx != balanced.hx) {
        for (int r = 0; r < lifted.mx(); ++r)
            for (int c = 0; c < lifted.n(); ++c)
                if (lifted.hx.get(r, c) != balanced.hx.get(r, c)) {
                    rep.first_mismatch =
                        "hx[" + std::to_string(r) + "," + std::to_string(c) + "]";
                    return rep;
                }
    }
    if (lifted.hz != balanced.hz) {
        for (int r = 0; r < lifted.mz(); ++r)
            for (int c = 0; c < lifted.n(); ++c)
                if (lifted.hz.get(r, c) != balanced.hz.get(r, c)) {
                    rep.first_mismatch =
                        "hz[" + std::to_string(r) + "," + std::to_string(c) + "]";
                    return rep;
                }
    }
    rep.equal = true;
    return rep;
}

} // namespace qlift
