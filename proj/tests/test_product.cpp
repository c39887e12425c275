#include <catch2/catch_amalgamated.hpp>

#include "qlift/distance.hpp"
#include "qlift/product.hpp"

using namespace qlift;

namespace {

uint64_t rng_state = 0x853C49E6748FEA9Bull;
uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

ClassicalCode random_classical(int max_bits) {
    int n = 1 + static_cast<int>(rnd() % max_bits);
    int m = 1 + static_cast<int>(rnd() % max_bits);
    BitMatrix h(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (rnd() & 1) h.set(r, c, true);
    return make_classical(std::move(h));
}

/// All flat voltage assignments on the Tanner graph of a classical code,
/// converted into the (check, bit) -> element form used by the products.
std::vector<ClassicalLift> enumerate_classical_lifts(const ClassicalCode& c,
                                                     const FiniteGroup& g) {
    CssCode cs = as_css(c);
    ConeComplex k = build_cone_complex(cs);
    Presentation p = simplify_presentation(presentation(k, spanning_tree(k)));
    std::vector<ClassicalLift> lifts;
    for (const auto& h : enumerate_flat_homs(k, p, g)) {
        ClassicalLift l;
        l.base = c;
        l.group = g;
        for (int a = 0; a < c.m(); ++a)
            for (int b : c.h.row_support(a)) {
                int w = h.voltage.oriented(k, k.x_vertex(a), k.q_vertex(b));
                if (w != g.identity()) l.volt[{a, b}] = w;
            }
        lifts.push_back(std::move(l));
    }
    return lifts;
}

// Product voltage on the cone complex of hpc(c1, c2): factor moves carry
// the factor voltages, diagonal edges are forced by flatness. Only valid
// for abelian groups, where the two factor directions commute.
VoltageAssignment product_voltage(const ConeComplex& k,
                                  const ClassicalLift& l1, const ClassicalLift& l2) {
    const FiniteGroup& g = l1.group;
    int n2 = l2.base.n(), m2 = l2.base.m();
    VoltageAssignment v;
    v.group = g;
    v.edge_value.assign(k.edges.size(), g.identity());
    // qubit blocks: (b1, a2) then (a1, b2); Z = (b1, b2); X = (a1, a2)
    auto qa = [&](int b1, int a2) { return b1 * m2 + a2; };
    auto qb = [&](int a1, int b2) { return l1.base.n() * m2 + a1 * n2 + b2; };
    for (size_t e = 0; e < k.edges.size(); ++e) {
        auto [u, w] = k.edges[e];
        if (k.edge_type(static_cast<int>(e)) == EdgeType::XZ) continue;
        // orient check -> qubit and work out which factor moved
        int zu = -1, qu = -1, xu = -1;
        if (k.is_z(u)) zu = u;
        else if (k.is_q(u)) qu = u - k.mz;
        else xu = u - k.mz - k.n;
        if (k.is_z(w)) zu = w;
        else if (k.is_q(w)) qu = w - k.mz;
        else xu = w - k.mz - k.n;
        int val;
        if (zu >= 0) {
            int b1 = zu / n2, b2 = zu % n2;
            // qubit is (b1, a2) or (a1, b2)
            if (qu < l1.base.n() * m2) {
                int a2 = qu % m2;
                REQUIRE(qu == qa(b1, a2));
                val = l2.voltage(a2, b2, false); // bit2 -> check2 move
            } else {
                int rest = qu - l1.base.n() * m2;
                int a1 = rest / n2;
                REQUIRE(qu == qb(a1, b2));
                val = g.inv(l1.voltage(a1, b1, false)); // right form of the factor-1 move
            }
            // canonical orientation is z -> q since z vertices come first
            v.edge_value[e] = val;
        } else {
            int a1 = xu / m2, a2 = xu % m2;
            if (qu < l1.base.n() * m2) {
                int b1 = qu / m2;
                REQUIRE(qu == qa(b1, a2));
                val = g.inv(l1.voltage(a1, b1, true));
            } else {
                int rest = qu - l1.base.n() * m2;
                int b2 = rest % n2;
                REQUIRE(qu == qb(a1, b2));
                val = l2.voltage(a2, b2, true);
            }
            // canonical orientation is q -> x; the move above is x -> q
            v.edge_value[e] = g.inv(val);
        }
    }
    // diagonal edges forced by any shared face
    for (const auto& f : k.faces) {
        int z = f[0], q = f[1], x = f[2];
        int e = k.edge_index(z, x);
        int forced = g.mul(v.oriented(k, z, q), v.oriented(k, q, x)); // z -> x
        v.edge_value[e] = forced; // canonical z -> x since z < x
    }
    return v;
}

} // namespace

TEST_CASE("hpc of two 3-cycles is the 18-qubit toric-type code") {
    ClassicalCode c = repetition_cycle(3);
    CssCode t = hpc(c, c);
    CHECK(t.n() == 18);
    CodeParams p = params(t);
    CHECK(p.k == 2);
    CHECK(p.k == hpc_expected_k(c, c));
    for (Side side : {Side::X, Side::Z}) {
        DistanceReport rep = distance_exact(t, side);
        CHECK(rep.value == 3);
    }
}

TEST_CASE("hpc with a trivial factor reduces to the input code") {
    BitMatrix h = repetition_cycle(3).h;
    ClassicalCode c = make_classical(h);
    // a single check on zero bits: the transposed role of one free bit
    ClassicalCode point = transpose_code(make_classical(BitMatrix(0, 1)));
    CssCode prod = hpc(c, point);
    CHECK(prod.n() == c.n());
    CHECK(prod.mz() == 0);
    CHECK(prod.hx == c.h);
}

TEST_CASE("hpc dimension matches the homology formula on random factors") {
    for (int trial = 0; trial < 100; ++trial) {
        ClassicalCode c1 = random_classical(6);
        ClassicalCode c2 = random_classical(6);
        CssCode prod = hpc(c1, c2);
        CHECK(mul(prod.hx, prod.hz.transpose()).is_zero());
        CHECK(params(prod).k == hpc_expected_k(c1, c2));
    }
}

TEST_CASE("balanced product with the trivial group is the plain product") {
    ClassicalCode c = repetition_cycle(3);
    FiniteGroup e = FiniteGroup::cyclic(1);
    auto lifts = enumerate_classical_lifts(c, e);
    REQUIRE(lifts.size() == 1);
    CssCode bp = balanced_product_classical(lifts[0], lifts[0]);
    CssCode direct = hpc(c, c);
    CHECK(bp.hx == direct.hx);
    CHECK(bp.hz == direct.hz);
    CssCode gl = goursat_lift_hpc(lifts[0], lifts[0]);
    CHECK(gl.hx == direct.hx);
    CHECK(gl.hz == direct.hz);
}

TEST_CASE("balanced product of CSS lifts composes to zero") {
    // lift a small CSS code two ways over Z2 and Z3 and take products
    CssCode tiny = new_css(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1, 1}}));
    ConeComplex k = build_cone_complex(tiny);
    Presentation p = simplify_presentation(presentation(k, spanning_tree(k)));
    for (const char* name : {"Z2", "Z3"}) {
        FiniteGroup g = parse_group(name);
        auto homs = enumerate_flat_homs(k, p, g);
        REQUIRE_FALSE(homs.empty());
        for (const auto& h1 : homs)
            for (const auto& h2 : homs) {
                RegularLift l1 = lift_code(tiny, k, h1.voltage);
                RegularLift l2 = lift_code(tiny, k, h2.voltage);
                CssCode bp = balanced_product(l1, l2); // throws if d^2 != 0
                int block = g.order();
                CHECK(bp.n() == (l1.base.mz() * l2.base.mx() + l1.base.n() * l2.base.n() +
                                 l1.base.mx() * l2.base.mz()) *
                                    block);
            }
    }
}

TEST_CASE("balanced product of a lift with a trivial one-bit factor") {
    CssCode tiny = new_css(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1, 1}}));
    ConeComplex k = build_cone_complex(tiny);
    Presentation p = simplify_presentation(presentation(k, spanning_tree(k)));
    FiniteGroup g = parse_group("Z2");
    auto homs = enumerate_flat_homs(k, p, g);
    RegularLift l1 = lift_code(tiny, k, homs.back().voltage);

    // one free qubit, no checks, trivial voltage
    CssCode bit = css_unchecked(BitMatrix(0, 1), BitMatrix(0, 1));
    ConeComplex kb = build_cone_complex(bit);
    VoltageAssignment trivial;
    trivial.group = g;
    trivial.edge_value.assign(kb.edges.size(), 0);
    RegularLift l2 = lift_code(bit, kb, trivial);

    CssCode bp = balanced_product(l1, l2);
    // recovers the first factor up to reindexing: same shape and dimension
    CHECK(bp.n() == l1.lifted.n());
    CHECK(bp.mx() == l1.lifted.mx());
    CHECK(bp.mz() == l1.lifted.mz());
    CHECK(params(bp).k == params(l1.lifted).k);
}

TEST_CASE("lifted product equivalence on repetition cycles") {
    // exhaustive: cycle lengths {2,3,4}, groups Z2 and Z3, all flat pairs
    for (int len1 : {2, 3, 4})
        for (int len2 : {2, 3, 4})
            for (const char* name : {"Z2", "Z3"}) {
                FiniteGroup g = parse_group(name);
                auto lifts1 = enumerate_classical_lifts(repetition_cycle(len1), g);
                auto lifts2 = enumerate_classical_lifts(repetition_cycle(len2), g);
                CHECK(lifts1.size() == static_cast<size_t>(g.order()));
                for (const auto& l1 : lifts1)
                    for (const auto& l2 : lifts2) {
                        LpcEquivalenceReport rep = check_lpc_equivalence(l1, l2);
                        INFO("cycles " << len1 << "," << len2 << " group " << name << " mismatch "
                                       << rep.first_mismatch);
                        CHECK(rep.equal);
                    }
            }
}

TEST_CASE("goursat lift equals the cone-complex lift for abelian groups") {
    for (int len1 : {2, 3})
        for (int len2 : {3, 4})
            for (const char* name : {"Z2", "Z3"}) {
                FiniteGroup g = parse_group(name);
                ClassicalCode c1 = repetition_cycle(len1);
                ClassicalCode c2 = repetition_cycle(len2);
                auto lifts1 = enumerate_classical_lifts(c1, g);
                auto lifts2 = enumerate_classical_lifts(c2, g);
                CssCode base = hpc(c1, c2);
                ConeComplex k = build_cone_complex(base);
                for (const auto& l1 : lifts1)
                    for (const auto& l2 : lifts2) {
                        VoltageAssignment pv = product_voltage(k, l1, l2);
                        REQUIRE(is_flat(k, pv));
                        RegularLift lifted = lift_code(base, k, pv);
                        CssCode direct = goursat_lift_hpc(l1, l2);
                        CHECK(lifted.lifted.hx == direct.hx);
                        CHECK(lifted.lifted.hz == direct.hz);
                        CHECK(verify_lift(lifted).all_pass());
                        // degree assertion: the cover degree is the group order
                        CHECK(direct.n() == g.order() * base.n());
                    }
            }
}

TEST_CASE("goursat lift accepts nonabelian groups") {
    FiniteGroup s3 = parse_group("S3");
    ClassicalCode c = repetition_cycle(3);
    auto lifts = enumerate_classical_lifts(c, s3);
    CHECK(lifts.size() == 6);
    int checked = 0;
    for (const auto& l1 : lifts)
        for (const auto& l2 : lifts) {
            if (++checked > 8) break;
            CssCode gl = goursat_lift_hpc(l1, l2);
            CHECK(mul(gl.hx, gl.hz.transpose()).is_zero());
            CHECK(check_lpc_equivalence(l1, l2).equal);
        }
}

TEST_CASE("chained pre-cover before the group lift") {
    // permutation pre-cover of the 3-cycle, then a Z2 product lift on top;
    // the degree multiplies through
    ClassicalCode c = repetition_cycle(3);
    CssCode cs = as_css(c);
    ConeComplex k = build_cone_complex(cs);
    Presentation p = simplify_presentation(presentation(k, spanning_tree(k)));
    auto covers = enumerate_perm_covers(k, p, 3);
    REQUIRE_FALSE(covers.empty());
    RegularLift pre = lift_code(cs, k, covers[0].voltage, /*regular=*/false);
    ClassicalCode pre_code = make_classical(pre.lifted.hx);

    FiniteGroup z2 = parse_group("Z2");
    auto lifts1 = enumerate_classical_lifts(pre_code, z2);
    auto lifts2 = enumerate_classical_lifts(repetition_cycle(2), z2);
    CssCode out = goursat_lift_hpc(lifts1[1], lifts2[0]);
    int d1 = 3, gamma = 2, d2 = 1;
    CssCode base = hpc(repetition_cycle(3), repetition_cycle(2));
    CHECK(out.n() == d1 * gamma * d2 * base.n());
    CHECK(check_lpc_equivalence(lifts1[1], lifts2[0]).equal);
}
