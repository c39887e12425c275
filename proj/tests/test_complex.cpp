#include <catch2/catch_amalgamated.hpp>

#include "qlift/complex.hpp"

using namespace qlift;

namespace {

BitMatrix hamming_h() {
    BitMatrix h(3, 7);
    for (int c = 0; c < 7; ++c) {
        int v = c + 1;
        for (int r = 0; r < 3; ++r)
            if (v & (1 << r)) h.set(r, c, true);
    }
    return h;
}

CssCode steane() { return new_css(hamming_h(), hamming_h()); }

CssCode shor() {
    BitMatrix hx = BitMatrix::from_rows({{1, 1, 1, 1, 1, 1, 0, 0, 0},
                                         {0, 0, 0, 1, 1, 1, 1, 1, 1}});
    BitMatrix hz(6, 9);
    int pairs[6][2] = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}};
    for (int r = 0; r < 6; ++r) {
        hz.set(r, pairs[r][0], true);
        hz.set(r, pairs[r][1], true);
    }
    return new_css(std::move(hx), std::move(hz));
}

} // namespace

TEST_CASE("cone complex of tiny codes") {
    CssCode tiny = new_css(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1, 1}}));
    ConeComplex k = build_cone_complex(tiny);
    int xz = 0;
    for (size_t e = 0; e < k.edges.size(); ++e)
        if (k.edge_type(static_cast<int>(e)) == EdgeType::XZ) ++xz;
    CHECK(xz == 1);
    CHECK(k.faces.size() == 2);
}

TEST_CASE("cone complex of the Steane code") {
    CssCode s = steane();
    ConeComplex k = build_cone_complex(s);
    // oracle: count overlaps of Hamming rows directly
    int expected_faces = 0, expected_xz = 0;
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 3; ++z) {
            int overlap = 0;
            for (int q = 0; q < 7; ++q)
                if (s.hx.get(x, q) && s.hz.get(z, q)) ++overlap;
            expected_faces += overlap;
            if (overlap > 0) ++expected_xz;
        }
    CHECK(expected_xz == 9);
    int xz = 0;
    for (size_t e = 0; e < k.edges.size(); ++e)
        if (k.edge_type(static_cast<int>(e)) == EdgeType::XZ) ++xz;
    CHECK(xz == expected_xz);
    CHECK(static_cast<int>(k.faces.size()) == expected_faces);

    // the link of a qubit is complete bipartite on its adjacent checks
    for (int q = 0; q < s.n(); ++q) {
        int deg_z = s.hz.col_weight(q), deg_x = s.hx.col_weight(q);
        int triangles = 0;
        for (const auto& f : k.faces)
            if (f[1] == k.q_vertex(q)) ++triangles;
        CHECK(triangles == deg_z * deg_x);
    }
}

TEST_CASE("cone complex of a classical code is its Tanner graph") {
    CssCode cl = css_unchecked(hamming_h(), BitMatrix(0, 7));
    ConeComplex k = build_cone_complex(cl);
    CHECK(k.faces.empty());
    CHECK(k.edges.size() == 12);
    CHECK(k.num_vertices() == 10);
}

TEST_CASE("spanning tree") {
    // a single triangle
    ConeComplex tri = build_cone_complex(
        css_unchecked(BitMatrix::from_rows({{1}}), BitMatrix::from_rows({{1}})));
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.edges.size() == 3);
    SpanningTree t = spanning_tree(tri);
    int in_tree = 0;
    for (bool b : t.in_tree)
        if (b) ++in_tree;
    CHECK(in_tree == 2);

    ConeComplex ks = build_cone_complex(steane());
    SpanningTree ts = spanning_tree(ks);
    int count = 0;
    for (bool b : ts.in_tree)
        if (b) ++count;
    CHECK(count == ks.num_vertices() - 1);
    CHECK(ts.root == ks.q_vertex(0));

    // disconnected double code
    BitMatrix hx2 = BitMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    ConeComplex kd = build_cone_complex(new_css(hx2, hx2));
    CHECK_THROWS_WITH(spanning_tree(kd), Catch::Matchers::ContainsSubstring("components"));
}

TEST_CASE("presentation generators and relators") {
    // no faces: free group of rank E - V + 1
    CssCode cl = css_unchecked(hamming_h(), BitMatrix(0, 7));
    ConeComplex k = build_cone_complex(cl);
    Presentation p = presentation(k, spanning_tree(k));
    CHECK(p.num_original == static_cast<int>(k.edges.size()) - k.num_vertices() + 1);
    CHECK(p.num_original == 3);
    CHECK(p.relators.empty());

    // single triangle: one generator, relator of length one
    ConeComplex tri = build_cone_complex(
        css_unchecked(BitMatrix::from_rows({{1}}), BitMatrix::from_rows({{1}})));
    Presentation pt = presentation(tri, spanning_tree(tri));
    CHECK(pt.num_original == 1);
    REQUIRE(pt.relators.size() == 1);
    CHECK(pt.relators[0].size() == 1);
    Presentation st = simplify_presentation(pt);
    CHECK(st.num_alive() == 0);

    // generator count always matches the cycle rank
    ConeComplex ks = build_cone_complex(steane());
    Presentation ps = presentation(ks, spanning_tree(ks));
    CHECK(ps.num_original == static_cast<int>(ks.edges.size()) - ks.num_vertices() + 1);
    CHECK(ps.relators.size() == ks.faces.size());
}

TEST_CASE("simplification eliminates free-standing products") {
    // <a, b, c | abc> becomes free of rank 2
    Presentation p;
    p.num_original = 3;
    p.gen_edge = {0, 1, 2};
    p.edge_gen = {0, 1, 2};
    p.alive = {true, true, true};
    p.substitution = {{1}, {2}, {3}};
    p.relators = {{1, 2, 3}};
    Presentation s = simplify_presentation(p);
    CHECK(s.num_alive() == 2);
    CHECK(s.relators.empty());
    // the eliminated generator re-expands to the inverse of the others
    int dead = -1;
    for (int gidx = 0; gidx < 3; ++gidx)
        if (!s.alive[gidx]) dead = gidx;
    REQUIRE(dead >= 0);
    CHECK(s.substitution[dead].size() == 2);
}

TEST_CASE("simplification of the Steane complex trivializes the group") {
    ConeComplex k = build_cone_complex(steane());
    Presentation p = simplify_presentation(presentation(k, spanning_tree(k)));
    CHECK_FALSE(p.budget_exhausted);
    CHECK(p.num_alive() == 0); // simply connected
}

TEST_CASE("filling disconnected cones") {
    // all cones connected: no change
    CssCode s = steane();
    ConeComplex k = build_cone_complex(s);
    ConeComplex filled = fill_disconnected_cones(k, s);
    CHECK(filled.faces.size() == k.faces.size());

    // two-component induced subgraph joined by a path through an outside
    // qubit: one face of length path + 2
    CssCode toy = new_css(BitMatrix::from_rows({{1, 1, 0, 0, 1}, {0, 0, 1, 1, 1}}),
                          BitMatrix::from_rows({{1, 1, 1, 1, 0}}));
    ConeComplex kt = build_cone_complex(toy);
    InducedSubgraph sub = induced_subgraph(toy, CheckSide::Z, 0);
    CHECK(sub.components().size() == 2);
    ConeComplex ft = fill_disconnected_cones(kt, toy);
    CHECK(ft.faces.size() > kt.faces.size());
    // the z-cone face: apex + path q0 -x0- q4 -x1- q2 has 6 edges
    bool found6 = false;
    for (size_t f = kt.faces.size(); f < ft.faces.size(); ++f)
        if (ft.faces[f].size() == 6 && ft.faces[f][0] == kt.z_vertex(0)) found6 = true;
    CHECK(found6);

    // the free rank drops strictly
    Presentation before = simplify_presentation(presentation(kt, spanning_tree(kt)));
    Presentation after = simplify_presentation(presentation(ft, spanning_tree(ft)));
    CHECK(after.num_alive() < before.num_alive());

    // Shor's code has disconnected cones; filling adds faces
    CssCode sh = shor();
    ConeComplex ksh = build_cone_complex(sh);
    ConeComplex fsh = fill_disconnected_cones(ksh, sh);
    CHECK(fsh.faces.size() > ksh.faces.size());
}

TEST_CASE("euler characteristic is untouched by presentation work") {
    CssCode s = steane();
    ConeComplex k = build_cone_complex(s);
    long long chi = k.euler_characteristic();
    Presentation p = presentation(k, spanning_tree(k));
    simplify_presentation(p);
    CHECK(k.euler_characteristic() == chi);
}
