#pragma once

#include "qweb/fp.hpp"
#include "qweb/sparse.hpp"

#include <map>
#include <random>
#include <vector>

namespace qweb {

// Incremental Gaussian elimination over F_p on sparse rows.  Rows are fed one
// at a time; only independent (reduced) rows are retained, so memory scales
// with the rank, not with the number of constraints.
class FpRowReducer {
public:
    using Row = std::vector<std::pair<int, uint64_t>>; // sorted by column, values != 0

    // Returns true if the row was independent of the current basis.
    bool add_row(Row row) {
        while (!row.empty()) {
            int piv = row.front().first;
            auto it = basis_by_pivot_.find(piv);
            if (it == basis_by_pivot_.end()) {
                normalize(row);
                basis_by_pivot_.emplace(piv, std::move(row));
                return true;
            }
            eliminate(row, it->second);
        }
        return false;
    }

    int rank() const { return int(basis_by_pivot_.size()); }

private:
    static void normalize(Row& row) {
        uint64_t inv = Fp::inv(row.front().second);
        if (inv != 1)
            for (auto& [c, v] : row) v = Fp::mul(v, inv);
    }

    // row -= row.front().second * base   (base is normalized, same pivot)
    static void eliminate(Row& row, const Row& base) {
        uint64_t f = row.front().second;
        Row out;
        out.reserve(row.size() + base.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < base.size()) {
            if (j == base.size() || (i < row.size() && row[i].first < base[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || base[j].first < row[i].first) {
                out.emplace_back(base[j].first, Fp::neg(Fp::mul(f, base[j].second)));
                ++j;
            } else {
                uint64_t v = Fp::sub(row[i].second, Fp::mul(f, base[j].second));
                if (v) out.emplace_back(row[i].first, v);
                ++i, ++j;
            }
        }
        row = std::move(out);
    }

    std::map<int, Row> basis_by_pivot_;
};

inline int fp_rank(const std::vector<FpRowReducer::Row>& rows) {
    FpRowReducer red;
    for (const auto& r : rows) red.add_row(r);
    return red.rank();
}

// Specialize a matrix over Q(q) at q = q0 in F_p.  Throws DenominatorVanishes
// if q0 kills any denominator.
inline std::vector<FpRowReducer::Row> specialize_rows(const SparseMat<RatFunc>& m, uint64_t q0) {
    std::vector<FpRowReducer::Row> rows(size_t(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) {
            uint64_t x = eval_fp(v, q0);
            if (x) rows[size_t(i)].emplace_back(j, x);
        }
    return rows;
}

// Deterministic-by-seed point sampler for randomized rank computations.
class PointSampler {
public:
    explicit PointSampler(uint64_t seed) : rng_(seed) {}
    uint64_t next() {
        // avoid tiny points: roots of unity of very low order and q0 = 0,1
        std::uniform_int_distribution<uint64_t> d(1 << 10, Fp::P - 2);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};

// Randomized rank of a matrix over Q(q): max of ranks at `points` random
// specializations (the rank at any point is a lower bound for the generic
// rank, and drops only on a proper closed subvariety).  Points that hit a
// denominator are resampled.
inline int randomized_rank(const SparseMat<RatFunc>& m, uint64_t seed, int points = 3) {
    PointSampler sampler(seed);
    int best = 0;
    for (int t = 0; t < points; ++t) {
        for (int attempt = 0;; ++attempt) {
            uint64_t q0 = sampler.next();
            try {
                best = std::max(best, fp_rank(specialize_rows(m, q0)));
                break;
            } catch (const DenominatorVanishes&) {
                if (attempt > 64) throw;
            }
        }
    }
    return best;
}

// Exact rank over Q(q) by fraction-free-ish Gaussian elimination on a dense
// copy.  Only intended for small matrices (the exact/randomized agreement
// check); cost grows quickly with size.
inline int exact_rank(const SparseMat<RatFunc>& m) {
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<RatFunc>> a;
    a.assign(size_t(R), std::vector<RatFunc>(size_t(C)));
    for (int i = 0; i < R; ++i)
        for (const auto& [j, v] : m.row(i)) a[size_t(i)][size_t(j)] = v;
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int i = rank; i < R; ++i)
            if (!a[size_t(i)][size_t(col)].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[size_t(piv)], a[size_t(rank)]);
        const RatFunc pv = a[size_t(rank)][size_t(col)];
        for (int i = rank + 1; i < R; ++i) {
            RatFunc f = a[size_t(i)][size_t(col)] / pv;
            if (f.is_zero()) continue;
            for (int j = col; j < C; ++j)
                a[size_t(i)][size_t(j)] -= f * a[size_t(rank)][size_t(j)];
        }
        ++rank;
    }
    return rank;
}

// Dimension of the right kernel of m, via rank at randomized points.
inline int randomized_kernel_dim(const SparseMat<RatFunc>& m, uint64_t seed, int points = 3) {
    return m.cols() - randomized_rank(m, seed, points);
}

} // namespace qweb
