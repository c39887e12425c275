// Generators for the cellulation-based code families: E-type codes read off
// square cellulations (qubits on edges), V-type codes with qubits and checks
// alternating on vertices, plus their self-duality witnesses.
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlift/code.hpp"

namespace qlift {

struct FamilySpec {
    std::string tag; // EL | VL | ER | VR | VJ
    int a = 0, b = 0, c = 1, d = 1;
};

/// E-type code on the square cellulation of the one-relator presentation
/// x^a = y^b: a cylinder of r rows of square cells whose end circles are
/// wrapped a and b times. When gcd(a,b) = a the cellulation is doubled to
/// keep all circles at least 2 edges long.
inline CssCode build_el(int a, int b, int r = 1) {
    if (a < 2 || b < 2) throw std::invalid_argument("build_el: need a, b >= 2");
    if (r < 1) throw std::invalid_argument("build_el: need r >= 1");
    int g = std::gcd(a, b);
    int tau = (a / g < 2 || b / g < 2) ? 2 : 1;
    int band = tau * a * b / g;
    // circle sizes from the x end to the y end; middles carry full bands
    std::vector<int> size(r + 1);
    size[0] = tau * b / g; // wrapped a times
    for (int i = 1; i < r; ++i) size[i] = band;
    size[r] = tau * a / g; // wrapped b times

    std::vector<int> voff(r + 2), eoff(r + 2);
    voff[0] = eoff[0] = 0;
    for (int i = 0; i <= r; ++i) {
        voff[i + 1] = voff[i] + size[i];
        eoff[i + 1] = eoff[i] + size[i];
    }
    int mx = voff[r + 1];
    int arcs = eoff[r + 1];
    int n = arcs + r * band;
    int mz = r * band;
    auto vert = [&](int circle, int pos) {
        int s = size[circle];
        return voff[circle] + ((pos % s) + s) % s;
    };
    auto arc = [&](int circle, int pos) {
        int s = size[circle];
        return eoff[circle] + ((pos % s) + s) % s;
    };

    BitMatrix hx(mx, n), hz(mz, n);
    for (int circle = 0; circle <= r; ++circle)
        for (int pos = 0; pos < size[circle]; ++pos) {
            hx.set(vert(circle, pos), arc(circle, pos), true);
            hx.set(vert(circle, pos + 1), arc(circle, pos), true);
        }
    for (int row = 0; row < r; ++row) {
        int radial = arcs + row * band;
        int face = row * band;
        for (int t = 0; t < band; ++t) {
            hx.set(vert(row, t), radial + t, true);
            hx.set(vert(row + 1, t), radial + t, true);
            hz.set(face + t, radial + t, true);
            hz.set(face + t, radial + (t + 1) % band, true);
            hz.set(face + t, arc(row, t), true);
            hz.set(face + t, arc(row + 1, t), true);
        }
    }
    return new_css(std::move(hx), std::move(hz));
}

/// E-type code for the presentation x_1^a = ... = x_c^a = y_1^b = ... =
/// y_d^b: a star of bands around a central circle, one band per generator.
/// ER(a,b,1,1) is exactly EL(a,b).
inline CssCode build_er(int a, int b, int c, int d) {
    if (a < 2 || b < 2) throw std::invalid_argument("build_er: need a, b >= 2");
    if (c < 1 || d < 1) throw std::invalid_argument("build_er: need c, d >= 1");
    if (c == 1 && d == 1) return build_el(a, b);
    int g = std::gcd(a, b);
    int tau = (a / g < 2 || b / g < 2) ? 2 : 1;
    int sw = tau * a * b / g;  // central circle, wrapped once by every band
    int sx = tau * b / g;      // x-petal circles, wrapped a times
    int sy = tau * a / g;      // y-petal circles, wrapped b times

    int petals = c + d;
    auto petal_size = [&](int p) { return p < c ? sx : sy; };
    // vertex ids: W then petal circles
    std::vector<int> voff(petals + 1);
    voff[0] = sw;
    for (int p = 0; p < petals; ++p) voff[p + 1] = voff[p] + petal_size(p);
    int mx = voff[petals];
    // qubit ids: W arcs, petal arcs, then radials band by band
    std::vector<int> eoff(petals + 1);
    eoff[0] = sw;
    for (int p = 0; p < petals; ++p) eoff[p + 1] = eoff[p] + petal_size(p);
    int arcs = eoff[petals];
    int n = arcs + petals * sw;
    int mz = petals * sw;

    BitMatrix hx(mx, n), hz(mz, n);
    for (int t = 0; t < sw; ++t) { // W arcs
        hx.set(t, t, true);
        hx.set((t + 1) % sw, t, true);
    }
    for (int p = 0; p < petals; ++p) {
        int s = petal_size(p);
        for (int j = 0; j < s; ++j) {
            hx.set(voff[p] + j, eoff[p] + j, true);
            hx.set(voff[p] + (j + 1) % s, eoff[p] + j, true);
        }
    }
    for (int p = 0; p < petals; ++p) {
        int s = petal_size(p);
        int radial = arcs + p * sw;
        for (int t = 0; t < sw; ++t) {
            hx.set(t, radial + t, true);
            hx.set(voff[p] + t % s, radial + t, true);
        }
        int face = p * sw;
        for (int t = 0; t < sw; ++t) {
            hz.set(face + t, radial + t, true);
            hz.set(face + t, radial + (t + 1) % sw, true);
            hz.set(face + t, t, true);                    // W arc t
            hz.set(face + t, eoff[p] + t % s, true);      // petal arc
        }
    }
    return new_css(std::move(hx), std::move(hz));
}

namespace detail {

// V-type lattice shared by VL and VR: circles X_0..X_{c-1}, 2r middle
// circles, Y_0..Y_{d-1}; every lattice edge joins a qubit vertex and a
// check vertex. Patterns per circle (by position parity):
//   X_i : qubit / X-check          odd middles  : Z-check / qubit
//   Y_j : Z-check / qubit          even middles : qubit / X-check
// (middles counted from 1; the first one, attached to the X side, carries
// Z-checks and the last one, attached to the Y side, carries X-checks).
struct VLattice {
    int a, b, c, d, r;
    int sx, sy, sw;
    int circles; // c + 2r + d
    std::vector<int> size;   // per circle
    std::vector<int> offset; // vertex id offset per circle

    VLattice(int a_, int b_, int c_, int d_, int r_ = 1)
        : a(a_), b(b_), c(c_), d(d_), r(r_) {
        int g = std::gcd(a, b);
        int sigma = (a / g < 2 || b / g < 2) ? 4 : 2;
        sx = sigma * b / g;
        sy = sigma * a / g;
        sw = sigma * a * b / g;
        circles = c + 2 * r + d;
        size.resize(circles);
        for (int i = 0; i < c; ++i) size[i] = sx;
        for (int m = 0; m < 2 * r; ++m) size[c + m] = sw;
        for (int j = 0; j < d; ++j) size[c + 2 * r + j] = sy;
        offset.resize(circles + 1);
        offset[0] = 0;
        for (int i = 0; i < circles; ++i) offset[i + 1] = offset[i] + size[i];
    }

    int vertex(int circle, int pos) const {
        int s = size[circle];
        return offset[circle] + ((pos % s) + s) % s;
    }

    // 0 = qubit, 1 = X-check, 2 = Z-check
    int role(int v) const {
        int circle = 0;
        while (offset[circle + 1] <= v) ++circle;
        int pos = v - offset[circle];
        bool even = pos % 2 == 0;
        if (circle < c) return even ? 0 : 1;
        if (circle < c + 2 * r) {
            bool zq = (circle - c) % 2 == 0; // Z-check / qubit pattern
            return zq ? (even ? 2 : 0) : (even ? 0 : 1);
        }
        return even ? 2 : 0;
    }

    std::vector<std::pair<int, int>> lattice_edges() const {
        std::vector<std::pair<int, int>> es;
        for (int circle = 0; circle < circles; ++circle)
            for (int pos = 0; pos < size[circle]; ++pos)
                es.emplace_back(vertex(circle, pos), vertex(circle, pos + 1));
        for (int i = 0; i < c; ++i)
            for (int t = 0; t < sw; ++t) es.emplace_back(vertex(c, t), vertex(i, t));
        for (int m = 0; m + 1 < 2 * r; ++m)
            for (int t = 0; t < sw; ++t)
                es.emplace_back(vertex(c + m, t), vertex(c + m + 1, t));
        for (int j = 0; j < d; ++j)
            for (int t = 0; t < sw; ++t)
                es.emplace_back(vertex(c + 2 * r - 1, t), vertex(c + 2 * r + j, t));
        return es;
    }

    CssCode to_code() const {
        int nv = offset[circles];
        std::vector<int> cell_index(nv, -1);
        int nq = 0, nx = 0, nz = 0;
        for (int v = 0; v < nv; ++v) {
            int r = role(v);
            cell_index[v] = r == 0 ? nq++ : (r == 1 ? nx++ : nz++);
        }
        BitMatrix hx(nx, nq), hz(nz, nq);
        for (auto [u, v] : lattice_edges()) {
            int ru = role(u), rv = role(v);
            if (ru != 0) std::swap(u, v), std::swap(ru, rv);
            if (ru != 0 || rv == 0)
                throw std::logic_error("V-lattice edge does not join qubit and check");
            if (rv == 1) hx.set(cell_index[v], cell_index[u], true);
            else hz.set(cell_index[v], cell_index[u], true);
        }
        return new_css(std::move(hx), std::move(hz));
    }
};

} // namespace detail

/// V-type code with qubits and checks alternating on the vertices of the
/// x^a = y^b square cellulation (2r + 1 rows of square cells).
inline CssCode build_vl(int a, int b, int r = 1) {
    if (a < 2 || b < 2) throw std::invalid_argument("build_vl: need a, b >= 2");
    if (r < 1) throw std::invalid_argument("build_vl: need r >= 1");
    return detail::VLattice(a, b, 1, 1, r).to_code();
}

/// Symmetric V-type code for x_1^a = ... = x_c^a = y_1^b = ... = y_d^b.
inline CssCode build_vr(int a, int b, int c, int d) {
    if (a < 2 || b < 2) throw std::invalid_argument("build_vr: need a, b >= 2");
    if (c < 1 || d < 1) throw std::invalid_argument("build_vr: need c, d >= 1");
    return detail::VLattice(a, b, c, d).to_code();
}

/// Asymmetric V-type code for x_1^b = ... = x_a^b: Z-checks alternate with
/// qubits on a central circle of 4b vertices; each generator contributes a
/// 4-vertex petal wrapped b times.
inline CssCode build_vj(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("build_vj: need a, b >= 2");
    int sw = 4 * b;
    int sp = 4;
    // vertex ids: petals first, then the central circle
    int nv = a * sp + sw;
    auto petal_vertex = [&](int i, int pos) { return i * sp + ((pos % sp) + sp) % sp; };
    auto center_vertex = [&](int t) { return a * sp + ((t % sw) + sw) % sw; };
    // roles: petal even = qubit, petal odd = X-check; center even = Z-check,
    // center odd = qubit
    auto role = [&](int v) {
        if (v < a * sp) return (v % sp) % 2 == 0 ? 0 : 1;
        return (v - a * sp) % 2 == 0 ? 2 : 0;
    };
    std::vector<int> cell_index(nv, -1);
    int nq = 0, nx = 0, nz = 0;
    for (int v = 0; v < nv; ++v) {
        int r = role(v);
        cell_index[v] = r == 0 ? nq++ : (r == 1 ? nx++ : nz++);
    }
    BitMatrix hx(nx, nq), hz(nz, nq);
    auto add_edge = [&](int u, int v) {
        int ru = role(u), rv = role(v);
        if (ru != 0) std::swap(u, v), std::swap(ru, rv);
        if (ru != 0 || rv == 0) throw std::logic_error("VJ edge does not join qubit and check");
        if (rv == 1) hx.set(cell_index[v], cell_index[u], true);
        else hz.set(cell_index[v], cell_index[u], true);
    };
    for (int i = 0; i < a; ++i)
        for (int pos = 0; pos < sp; ++pos) add_edge(petal_vertex(i, pos), petal_vertex(i, pos + 1));
    for (int t = 0; t < sw; ++t) add_edge(center_vertex(t), center_vertex(t + 1));
    for (int i = 0; i < a; ++i)
        for (int t = 0; t < sw; ++t) add_edge(center_vertex(t), petal_vertex(i, t));
    return new_css(std::move(hx), std::move(hz));
}

inline CssCode build_family(const FamilySpec& spec) {
    if (spec.tag == "EL") return build_el(spec.a, spec.b);
    if (spec.tag == "VL") return build_vl(spec.a, spec.b);
    if (spec.tag == "ER") return build_er(spec.a, spec.b, spec.c, spec.d);
    if (spec.tag == "VR") return build_vr(spec.a, spec.b, spec.c, spec.d);
    if (spec.tag == "VJ") return build_vj(spec.a, spec.b);
    throw std::invalid_argument("build_family: unknown tag '" + spec.tag + "'");
}

/// Witness that a code equals its own dual: a qubit permutation plus check
/// bijections carrying H_X onto H_Z and back.
struct DualityWitness {
    std::vector<int> qubit_perm; // qubit -> qubit
    std::vector<int> x_to_z;     // X-check -> Z-check
    std::vector<int> z_to_x;     // Z-check -> X-check
};

inline bool verify_duality(const CssCode& c, const DualityWitness& w) {
    if (c.mx() != c.mz()) return false;
    for (int x = 0; x < c.mx(); ++x)
        for (int q = 0; q < c.n(); ++q)
            if (c.hx.get(x, q) != c.hz.get(w.x_to_z[x], w.qubit_perm[q])) return false;
    for (int z = 0; z < c.mz(); ++z)
        for (int q = 0; q < c.n(); ++q)
            if (c.hz.get(z, q) != c.hx.get(w.z_to_x[z], w.qubit_perm[q])) return false;
    return true;
}

/// Self-duality of VR(a,a,c,c) (and VL(a,a) as the c = 1 case): shift every
/// circle position by one and swap the X side with the Y side.
inline DualityWitness vr_duality_witness(int a, int c) {
    detail::VLattice lat(a, a, c, c);
    int nv = lat.offset[lat.circles];
    std::vector<int> vmap(nv);
    for (int circle = 0; circle < lat.circles; ++circle) {
        int mirror;
        if (circle < c) mirror = lat.circles - 1 - circle;           // X_i -> Y_{c-1-i}
        else if (circle == c) mirror = c + 1;                        // W_X -> W_Y
        else if (circle == c + 1) mirror = c;                        // W_Y -> W_X
        else mirror = lat.circles - 1 - circle;                      // Y_j -> X_{c-1-j}
        for (int pos = 0; pos < lat.size[circle]; ++pos)
            vmap[lat.vertex(circle, pos)] = lat.vertex(mirror, pos + 1);
    }
    std::vector<int> cell_index(nv, -1);
    int nq = 0, nx = 0, nz = 0;
    for (int v = 0; v < nv; ++v) {
        int r = lat.role(v);
        cell_index[v] = r == 0 ? nq++ : (r == 1 ? nx++ : nz++);
    }
    DualityWitness w;
    w.qubit_perm.assign(nq, -1);
    w.x_to_z.assign(nx, -1);
    w.z_to_x.assign(nz, -1);
    for (int v = 0; v < nv; ++v) {
        int r = lat.role(v);
        int img = vmap[v];
        int ri = lat.role(img);
        if (r == 0) {
            if (ri != 0) throw std::logic_error("duality witness: qubit image is a check");
            w.qubit_perm[cell_index[v]] = cell_index[img];
        } else if (r == 1) {
            if (ri != 2) throw std::logic_error("duality witness: X image is not Z");
            w.x_to_z[cell_index[v]] = cell_index[img];
        } else {
            if (ri != 1) throw std::logic_error("duality witness: Z image is not X");
            w.z_to_x[cell_index[v]] = cell_index[img];
        }
    }
    return w;
}

inline DualityWitness vl_duality_witness(int a) { return vr_duality_witness(a, 1); }

} // namespace qlift
