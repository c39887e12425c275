#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "qlift/code.hpp"
#include "qlift/io.hpp"

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

uint64_t rng_state = 0x9E3779B97F4A7C15ull;
uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

} // namespace

TEST_CASE("new_css validation") {
    CssCode s = steane();
    CHECK(s.n() == 7);
    CHECK(mul(s.hx, s.hz.transpose()).is_zero());

    CHECK_NOTHROW(new_css(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1, 1}})));
    CHECK_THROWS_WITH(new_css(BitMatrix::from_rows({{1, 0}}), BitMatrix::from_rows({{1, 0}})),
                      Catch::Matchers::ContainsSubstring("x0") &&
                          Catch::Matchers::ContainsSubstring("z0"));
    CHECK_THROWS_AS(new_css(BitMatrix(1, 2), BitMatrix(1, 3)), std::invalid_argument);
}

TEST_CASE("params") {
    CodeParams p = params(steane());
    CHECK(p.n == 7);
    CHECK(p.k == 1);
    CHECK(p.wx == 4);
    CHECK(p.qx == 3);

    // k agrees with dim ker(hx) - rank(hz)
    CssCode s = steane();
    CHECK(p.k == kernel_basis(s.hx).rows() - rank(s.hz));
}

TEST_CASE("tanner graph") {
    CssCode s = steane();
    TannerGraph t = tanner_graph(s);
    CHECK(t.num_vertices() == 13);
    CHECK(t.edges_qz.size() + t.edges_qx.size() == 24);
    CHECK(is_connected(t));

    CssCode tiny = new_css(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1, 1}}));
    TannerGraph tt = tanner_graph(tiny);
    CHECK(tt.num_vertices() == 4);
    CHECK(tt.edges_qz.size() + tt.edges_qx.size() == 4);

    // classical reduction: no Z rows
    CssCode cl = css_unchecked(hamming_h(), BitMatrix(0, 7));
    TannerGraph ct = tanner_graph(cl);
    CHECK(ct.num_vertices() == 10);
    CHECK(ct.edges_qz.empty());

    // round trip reproduces the matrices bit-exactly
    CssCode back = code_from_tanner(t);
    CHECK(back.hx == s.hx);
    CHECK(back.hz == s.hz);
}

TEST_CASE("disconnected tanner graph detected") {
    // two disjoint copies of the 2-qubit code
    BitMatrix hx = BitMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    BitMatrix hz = BitMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    CssCode c = new_css(hx, hz);
    CHECK_FALSE(is_connected(tanner_graph(c)));

    CssCode lone = css_unchecked(BitMatrix(0, 1), BitMatrix(0, 1));
    CHECK(is_connected(tanner_graph(lone)));
}

TEST_CASE("induced subgraphs and the even-degree criterion") {
    CssCode s = steane();
    for (int z = 0; z < s.mz(); ++z) {
        InducedSubgraph sub = induced_subgraph(s, CheckSide::Z, z);
        CHECK(sub.all_even);
        CHECK(sub.qubits.size() == 4);
        CHECK(sub.opposite_checks.size() == 3);
    }
    CHECK_THROWS_AS(induced_subgraph(s, CheckSide::Z, 99), std::invalid_argument);

    // invalid pair: the odd overlap shows up as an odd degree
    CssCode bad = css_unchecked(BitMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}),
                                BitMatrix::from_rows({{1, 0, 1}}));
    CHECK_FALSE(induced_subgraph(bad, CheckSide::Z, 0).all_even);
    CHECK(induced_subgraph(bad, CheckSide::Z, 0).odd_checks ==
          std::vector<int>{0, 1});

    // disjoint support: isolated qubits only
    CssCode disjoint = css_unchecked(BitMatrix::from_rows({{0, 0, 1, 1}}),
                                     BitMatrix::from_rows({{1, 1, 0, 0}}));
    InducedSubgraph sub = induced_subgraph(disjoint, CheckSide::Z, 0);
    CHECK(sub.opposite_checks.empty());
    CHECK(sub.all_even);
}

TEST_CASE("validity by induced subgraphs equals the orthogonality check") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rnd() % 11;
        int mx = 1 + rnd() % 4, mz = 1 + rnd() % 4;
        BitMatrix hx(mx, n), hz(mz, n);
        for (int r = 0; r < mx; ++r)
            for (int c = 0; c < n; ++c)
                if (rnd() % 3 == 0) hx.set(r, c, true);
        for (int r = 0; r < mz; ++r)
            for (int c = 0; c < n; ++c)
                if (rnd() % 3 == 0) hz.set(r, c, true);
        bool orth = mul(hx, hz.transpose()).is_zero();
        CssCode c = css_unchecked(hx, hz);
        CHECK(valid_by_induced_subgraphs(c) == orth);
        if (orth) CHECK_NOTHROW(new_css(hx, hz));
        else CHECK_THROWS_AS(new_css(hx, hz), std::invalid_argument);
    }
}

TEST_CASE("transpose code is an involution") {
    ClassicalCode c = make_classical(hamming_h());
    ClassicalCode t = transpose_code(c);
    CHECK(t.h.rows() == 7);
    CHECK(t.h.cols() == 3);
    CHECK(transpose_code(t).h == c.h);

    ClassicalCode rep = make_classical(BitMatrix::from_rows({{1, 1}}));
    CHECK(transpose_code(rep).h == BitMatrix::from_rows({{1}, {1}}));
}

TEST_CASE("matrix market round trip") {
    BitMatrix h = hamming_h();
    std::string text = to_matrix_market(h, "hx");
    CHECK(text.find("role=hx n=7") != std::string::npos);
    std::istringstream in(text);
    CHECK(from_matrix_market(in) == h);

    BitMatrix empty(0, 5);
    std::istringstream in2(to_matrix_market(empty, "hz"));
    CHECK(from_matrix_market(in2) == empty);
}

TEST_CASE("alist round trip") {
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + rnd() % 6, n = 1 + rnd() % 9;
        BitMatrix h(m, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c)
                if (rnd() & 1) h.set(r, c, true);
        std::istringstream in(to_alist(h));
        CHECK(from_alist(in) == h);
    }
}

TEST_CASE("code bundle round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qlift_bundle_test";
    fs::remove_all(dir);
    CssCode s = steane();
    write_code_bundle(dir, "steane", s);
    CssCode back = read_code_bundle(dir / "steane.json");
    CHECK(back.hx == s.hx);
    CHECK(back.hz == s.hz);
    CHECK(back.q_labels == s.q_labels);
    fs::remove_all(dir);
}
