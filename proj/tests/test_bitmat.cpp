#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qlift/bitmat.hpp"

using namespace qlift;

namespace {

// Hamming(7,4) parity check: columns are 1..7 in binary.
BitMatrix hamming_h() {
    BitMatrix h(3, 7);
    for (int c = 0; c < 7; ++c) {
        int v = c + 1;
        for (int r = 0; r < 3; ++r)
            if (v & (1 << r)) h.set(r, c, true);
    }
    return h;
}

// Independent rank oracle: enumerate the row space by brute force.
int rank_by_rowspace_enumeration(const BitMatrix& m) {
    std::set<std::vector<bool>> space;
    int rows = m.rows();
    REQUIRE(rows <= 20);
    for (int mask = 0; mask < (1 << rows); ++mask) {
        std::vector<bool> v(m.cols(), false);
        for (int r = 0; r < rows; ++r)
            if (mask & (1 << r))
                for (int c = 0; c < m.cols(); ++c)
                    if (m.get(r, c)) v[c] = !v[c];
        space.insert(v);
    }
    int k = 0;
    while ((1u << k) < space.size()) ++k;
    REQUIRE((1u << k) == space.size());
    return k;
}

uint64_t rng_state = 0x243F6A8885A308D3ull;
uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

BitMatrix random_matrix(int rows, int cols) {
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rnd() & 1) m.set(r, c, true);
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 6)) == 0);
    CHECK(rank(BitMatrix(0, 5)) == 0);
    CHECK(rank(BitMatrix(5, 0)) == 0);

    BitMatrix h = hamming_h();
    CHECK(rank_by_rowspace_enumeration(h) == 3); // oracle
    CHECK(rank(h) == 3);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + static_cast<int>(rnd() % 64);
        int c = 1 + static_cast<int>(rnd() % 64);
        BitMatrix m = random_matrix(r, c);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(BitMatrix::identity(3)).rows() == 0);

    BitMatrix rep = BitMatrix::from_rows({{1, 1}});
    BitMatrix kb = kernel_basis(rep);
    REQUIRE(kb.rows() == 1);
    CHECK(kb.get(0, 0));
    CHECK(kb.get(0, 1));

    BitMatrix h = hamming_h();
    BitMatrix hk = kernel_basis(h);
    REQUIRE(hk.rows() == 4);
    CHECK(mul(h, hk.transpose()).is_zero());

    for (int trial = 0; trial < 30; ++trial) {
        BitMatrix m = random_matrix(1 + rnd() % 30, 1 + rnd() % 40);
        BitMatrix k = kernel_basis(m);
        CHECK(k.rows() + rank(m) == m.cols());
        CHECK(mul(m, k.transpose()).is_zero());
        CHECK(rank(k) == k.rows()); // basis rows independent
    }
}

TEST_CASE("rowspace membership") {
    BitMatrix m = BitMatrix::from_rows({{1, 1, 0}});
    CHECK(rowspace_contains(m, BitVec(3)));
    CHECK_FALSE(rowspace_contains(m, BitVec::from_ints({0, 1, 1})));

    BitMatrix m2 = BitMatrix::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}});
    CHECK(rowspace_contains(m2, BitVec::from_ints({1, 0, 1, 0})));

    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m3 = random_matrix(1 + rnd() % 10, 1 + rnd() % 16);
        for (int r = 0; r < m3.rows(); ++r)
            CHECK(rowspace_contains(m3, BitVec::row_of(m3, r)));
    }

    CHECK_THROWS_AS(rowspace_contains(m, BitVec(4)), std::invalid_argument);
}

TEST_CASE("multiplication") {
    BitMatrix h = hamming_h();
    CHECK(mul(BitMatrix::identity(3), h) == h);

    BitMatrix ones = BitMatrix::from_rows({{1, 1}});
    BitMatrix prod = mul(ones, ones.transpose());
    CHECK(prod.rows() == 1);
    CHECK(prod.cols() == 1);
    CHECK_FALSE(prod.get(0, 0)); // 1+1 = 0 in GF(2)

    CHECK_THROWS_AS(mul(h, h), std::invalid_argument);

    for (int trial = 0; trial < 20; ++trial) {
        int a = 1 + rnd() % 12, b = 1 + rnd() % 12, c = 1 + rnd() % 12, d = 1 + rnd() % 12;
        BitMatrix x = random_matrix(a, b), y = random_matrix(b, c), z = random_matrix(c, d);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
}

TEST_CASE("rref is canonical and idempotent") {
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m = random_matrix(1 + rnd() % 20, 1 + rnd() % 20);
        RrefResult a = rref(m);
        RrefResult b = rref(a.m);
        CHECK(a.m == b.m);
        CHECK(a.pivots == b.pivots);
        // pivot columns are elementary
        for (size_t p = 0; p < a.pivots.size(); ++p)
            CHECK(a.m.col_weight(a.pivots[p]) == 1);
    }
}

TEST_CASE("RowSpace agrees with the rank-based membership test") {
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m = random_matrix(1 + rnd() % 12, 1 + rnd() % 20);
        RowSpace rs(m);
        for (int probe = 0; probe < 10; ++probe) {
            BitVec v(m.cols());
            for (int c = 0; c < m.cols(); ++c)
                if (rnd() & 1) v.set(c, true);
            CHECK(rs.contains(v) == rowspace_contains(m, v));
        }
    }
}
