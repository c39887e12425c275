// Code distance: exact small-instance oracle by Gray-code kernel
// enumeration, and a randomized information-set upper-bound estimator with
// counter-based per-trial randomness.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlift/code.hpp"

namespace qlift {

enum class Side { X, Z };

inline const char* side_name(Side s) { return s == Side::X ? "X" : "Z"; }

/// An X-side logical lies in ker H_Z but outside the row space of H_X; a
/// Z-side logical the other way round.
inline bool is_nontrivial_logical(const CssCode& c, const BitVec& v, Side side) {
    if (v.size() != c.n())
        throw std::invalid_argument("is_nontrivial_logical: length mismatch");
    if (v.is_zero()) return false;
    const BitMatrix& ker_of = side == Side::X ? c.hz : c.hx;
    const BitMatrix& row_of = side == Side::X ? c.hx : c.hz;
    if (!mul(ker_of, v).is_zero()) return false;
    return !rowspace_contains(row_of, v);
}

struct DistanceReport {
    Side side = Side::X;
    int value = 0;
    bool exact = false;
    BitVec witness;           // empty when k = 0
    long long trials_used = 0;
    uint64_t seed = 0;
};

namespace detail {

// A kernel basis of the "cycle" matrix split so that the first rows span
// the opposite row space (stabilizers) and the rest complete it (logical
// representatives). A kernel vector is a nontrivial logical iff it uses at
// least one completing row.
struct LogicalBasis {
    BitMatrix stab;     // rref of the row-space side, restricted rows
    BitMatrix logical;  // completion rows, one per logical dimension
};

inline LogicalBasis split_kernel(const CssCode& c, Side side) {
    const BitMatrix& ker_of = side == Side::X ? c.hz : c.hx;
    const BitMatrix& row_of = side == Side::X ? c.hx : c.hz;
    BitMatrix kb = kernel_basis(ker_of);
    RrefResult stab = rref(row_of);
    // complete stab rows to a basis of the kernel
    std::vector<BitVec> completion;
    BitMatrix accum_rows = stab.m;
    for (int r = 0; r < kb.rows(); ++r) {
        BitVec v = BitVec::row_of(kb, r);
        BitVec reduced = v;
        RowSpace cur(accum_rows);
        cur.reduce(reduced);
        if (!reduced.is_zero()) {
            completion.push_back(v);
            BitMatrix next(accum_rows.rows() + 1, accum_rows.cols());
            for (int i = 0; i < accum_rows.rows(); ++i)
                for (int w = 0; w < accum_rows.words_per_row(); ++w)
                    next.row_ptr(i)[w] = accum_rows.row_ptr(i)[w];
            for (size_t w = 0; w < v.words().size(); ++w)
                next.row_ptr(accum_rows.rows())[w] = v.words()[w];
            accum_rows = std::move(next);
        }
    }
    LogicalBasis lb;
    lb.stab = stab.m;
    lb.logical = BitMatrix(static_cast<int>(completion.size()), c.n());
    for (size_t i = 0; i < completion.size(); ++i)
        for (size_t w = 0; w < completion[i].words().size(); ++w)
            lb.logical.row_ptr(static_cast<int>(i))[w] = completion[i].words()[w];
    return lb;
}

// splitmix64: the per-trial streams are pure functions of (seed, counter).
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct CounterRng {
    uint64_t state;
    CounterRng(uint64_t seed, uint64_t counter) {
        state = seed ^ (0xA0761D6478BD642Full * (counter + 1));
        // warm up
        splitmix64(state);
        splitmix64(state);
    }
    uint64_t next() { return splitmix64(state); }
    // unbiased bounded draw by rejection
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        while (true) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

inline std::vector<int> random_permutation(int n, CounterRng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

} // namespace detail

/// Exact minimum weight over nontrivial logicals by Gray-code enumeration
/// of the kernel. Kernel dimensions above the cap are refused; use the
/// estimator instead. Reports value 0 (exact) when k = 0.
inline DistanceReport distance_exact(const CssCode& c, Side side, int kernel_dim_cap = 24) {
    detail::LogicalBasis lb = detail::split_kernel(c, side);
    int ns = lb.stab.rows(), nl = lb.logical.rows();
    DistanceReport rep;
    rep.side = side;
    rep.exact = true;
    if (nl == 0) return rep; // no logicals: value 0 by convention
    if (ns + nl > kernel_dim_cap)
        throw std::invalid_argument("distance_exact: kernel dimension " + std::to_string(ns + nl) +
                                    " exceeds cap " + std::to_string(kernel_dim_cap) +
                                    "; use distance_upper");
    // Gray enumeration over [stab | logical] coefficients; a vector is a
    // logical iff some logical coefficient is set.
    int dim = ns + nl;
    BitVec cur(c.n());
    int best = -1;
    BitVec best_witness;
    uint64_t total = uint64_t(1) << dim;
    uint64_t gray = 0;
    for (uint64_t i = 1; i < total; ++i) {
        uint64_t next_gray = i ^ (i >> 1);
        uint64_t diff = gray ^ next_gray;
        int bit = std::countr_zero(diff);
        gray = next_gray;
        const BitMatrix& src = bit < ns ? lb.stab : lb.logical;
        int row = bit < ns ? bit : bit - ns;
        for (size_t w = 0; w < cur.words().size(); ++w) cur.words()[w] ^= src.row_ptr(row)[w];
        if ((gray >> ns) == 0) continue; // pure stabilizer
        int wt = cur.weight();
        if (best < 0 || wt < best || (wt == best && cur < best_witness)) {
            best = wt;
            best_witness = cur;
        }
    }
    rep.value = best;
    rep.witness = best_witness;
    return rep;
}

struct EstimatorOptions {
    long long trials = 10000;
    uint64_t seed = 1;
    int combination_depth = 2; // 1 = rows only, 2 = rows + pairwise sums
};

/// Randomized information-set upper bound. Each trial column-permutes the
/// kernel basis with a counter-based generator, reduces it to RREF, and
/// scores the rows and their pairwise sums; the best certified nontrivial
/// logical over all trials is returned. Deterministic in (seed, trials)
/// regardless of execution order; more trials never increase the value.
inline DistanceReport distance_upper(const CssCode& c, Side side, const EstimatorOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("distance_upper: trials must be >= 1");
    DistanceReport rep;
    rep.side = side;
    rep.seed = opts.seed;

    const BitMatrix& ker_of = side == Side::X ? c.hz : c.hx;
    const BitMatrix& row_of = side == Side::X ? c.hx : c.hz;
    BitMatrix kb = kernel_basis(ker_of);
    RowSpace stab(row_of);
    if (kb.rows() - stab.rank() <= 0) {
        rep.exact = true; // k = 0: value 0 by convention
        return rep;
    }

    int n = c.n();
    int best = -1;
    BitVec best_witness;
    auto consider = [&](const BitVec& permuted, const std::vector<int>& perm) {
        int wt = permuted.weight();
        if (best >= 0 && (wt > best || wt == 0)) return;
        if (wt == 0) return;
        // un-permute: permuted column perm[j] holds original column j
        BitVec v(n);
        for (int j = 0; j < n; ++j)
            if (permuted.get(perm[j])) v.set(j, true);
        if (stab.contains(v)) return;
        if (best < 0 || wt < best || (wt == best && v < best_witness)) {
            best = wt;
            best_witness = v;
        }
    };

    for (long long trial = 0; trial < opts.trials; ++trial) {
        detail::CounterRng rng(opts.seed, static_cast<uint64_t>(trial));
        std::vector<int> perm = detail::random_permutation(n, rng);
        BitMatrix pk = kb.permute_cols(perm);
        RrefResult rr = rref(pk);
        int rows = rr.m.rows();
        for (int i = 0; i < rows; ++i) consider(BitVec::row_of(rr.m, i), perm);
        if (opts.combination_depth >= 2) {
            BitVec sum(n);
            for (int i = 0; i < rows; ++i)
                for (int j = i + 1; j < rows; ++j) {
                    for (size_t w = 0; w < sum.words().size(); ++w)
                        sum.words()[w] = rr.m.row_ptr(i)[w] ^ rr.m.row_ptr(j)[w];
                    consider(sum, perm);
                }
        }
        if (opts.combination_depth >= 3) {
            BitVec sum(n);
            for (int i = 0; i < rows; ++i)
                for (int j = i + 1; j < rows; ++j)
                    for (int l = j + 1; l < rows; ++l) {
                        for (size_t w = 0; w < sum.words().size(); ++w)
                            sum.words()[w] =
                                rr.m.row_ptr(i)[w] ^ rr.m.row_ptr(j)[w] ^ rr.m.row_ptr(l)[w];
                        consider(sum, perm);
                    }
        }
        rep.trials_used = trial + 1;
    }
    if (best < 0)
        throw std::runtime_error("distance_upper: no nontrivial logical found; raise trials");
    rep.value = best;
    rep.witness = best_witness;
    rep.exact = false;
    return rep;
}

} // namespace qlift
