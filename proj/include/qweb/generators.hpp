#pragma once

#include "qweb/basis.hpp"
#include "qweb/glrep.hpp"
#include "qweb/qnum.hpp"
#include "qweb/sparse.hpp"

#include <map>
#include <tuple>

namespace qweb {

// ---------------------------------------------------------------------------
// Thin tensor space V^(x)m with basis words (letters 1..n, first letter is the
// slowest index), and the explosion maps relating it to the strand spaces.
// ---------------------------------------------------------------------------

inline int64_t thin_dim(int n, int m) {
    int64_t d = 1;
    while (m--) d *= n;
    return d;
}

inline int64_t thin_index(int n, const std::vector<int>& w) {
    int64_t idx = 0;
    for (int x : w) idx = idx * n + (x - 1);
    return idx;
}

inline std::vector<int> thin_word(int n, int m, int64_t idx) {
    std::vector<int> w(size_t(m), 0);
    for (int t = m - 1; t >= 0; --t) {
        w[size_t(t)] = int(idx % n) + 1;
        idx /= n;
    }
    return w;
}

namespace detail {

inline int inversions(const std::vector<int>& w) {
    int inv = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

inline int noninversions_distinct(const std::vector<int>& w) {
    int cnt = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] < w[b]) ++cnt;
    return cnt;
}

} // namespace detail

// iota: strand space -> thin tensor space (the "explosion" of a basis word
// into its antisymmetrized/symmetrized tensor representative).
//
//   Ext: v_S     |-> q^(m(m-1)/2) sum_w (-q^-1)^inv(w) v_w   over permutations of S
//   Sym: m_W     |-> (prod_x [mult_x(W)]!) sum_w q^(-noninv(w)) v_w   over distinct
//        permutations, noninv counting only strictly increasing pairs
//
// pi: thin tensor space -> strand space (projection):
//
//   Ext: v_w |-> (-q^-1)^inv(w) v_sort(w)  (0 if w has a repeated letter)
//   Sym: v_w |-> q^inv'(w) m_sort(w)       (inv' counting distinct pairs only)
//
// Both satisfy pi o iota = [m]! id; every thick intertwiner below is defined
// by exploding, acting on the thin space, and projecting back.
inline SparseMat<RatFunc> explode(Flavor f, int n, int m) {
    StrandBasis sb(f, n, m);
    SparseMat<RatFunc> out(int(thin_dim(n, m)), sb.dim());
    for (int c = 0; c < sb.dim(); ++c) {
        std::vector<int> w = sb.word(c);
        Laurent scale(Rat(1));
        if (f == Flavor::Ext) {
            scale = Laurent::q(m * (m - 1) / 2);
        } else {
            std::map<int, int> mult;
            for (int x : w) ++mult[x];
            for (auto [x, k] : mult) scale *= qfact(k);
        }
        std::sort(w.begin(), w.end());
        do {
            Laurent coeff =
                f == Flavor::Ext
                    ? scale * Laurent::monomial(detail::inversions(w) % 2 ? Rat(-1) : Rat(1),
                                                -detail::inversions(w))
                    : scale * Laurent::q(-detail::noninversions_distinct(w));
            out.add_to(int(thin_index(n, w)), c, RatFunc(coeff));
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

inline SparseMat<RatFunc> project(Flavor f, int n, int m) {
    StrandBasis sb(f, n, m);
    SparseMat<RatFunc> out(sb.dim(), int(thin_dim(n, m)));
    for (int64_t c = 0; c < thin_dim(n, m); ++c) {
        std::vector<int> w = thin_word(n, m, c);
        int inv = detail::inversions(w);
        std::vector<int> s = w;
        std::sort(s.begin(), s.end());
        if (f == Flavor::Ext) {
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
            out.set(sb.index(s), int(c),
                    RatFunc(Laurent::monomial(inv % 2 ? Rat(-1) : Rat(1), -inv)));
        } else {
            int invd = 0;
            for (size_t a = 0; a < w.size(); ++a)
                for (size_t b = a + 1; b < w.size(); ++b)
                    if (w[a] > w[b]) ++invd;
            out.set(sb.index(s), int(c), RatFunc(Laurent::q(invd)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Thin crossings on V (x) V (the R-matrix and its inverse), n^2 x n^2.
// Index of v_i (x) v_j is (i-1)*n + (j-1).
// ---------------------------------------------------------------------------

inline SparseMat<RatFunc> thin_crossing(Flavor f, int n, bool over) {
    SparseMat<RatFunc> m(n * n, n * n);
    // diagonal correction: +(q - q^-1) for the positive crossing, inverted
    // crossings get the negated correction (T^-1 = T -+ (q - q^-1))
    Laurent corr = Laurent::q(1) - Laurent::q(-1);
    if (!over) corr = -corr;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int col = (i - 1) * n + (j - 1);
            int swapped = (j - 1) * n + (i - 1);
            if (f == Flavor::Ext) {
                if (i == j) {
                    m.set(col, col, RatFunc(Laurent::monomial(Rat(-1), over ? -1 : 1)));
                } else {
                    m.add_to(swapped, col, RatFunc(Rat(-1)));
                    if ((i < j) == over) m.add_to(col, col, RatFunc(corr));
                }
            } else {
                if (i == j) {
                    m.set(col, col, RatFunc(Laurent::q(over ? 1 : -1)));
                } else {
                    m.add_to(swapped, col, RatFunc(1));
                    if ((i > j) == over) m.add_to(col, col, RatFunc(corr));
                }
            }
        }
    return m;
}

// ---------------------------------------------------------------------------
// Thick web generators, defined by explosion.  All are matrices with respect
// to the ObjectBasis index conventions (kron-compatible).
// ---------------------------------------------------------------------------

namespace detail {

inline RatFunc explosion_norm(int a, int b) {
    return RatFunc(Laurent(Rat(1)), qfact(a) * qfact(b));
}

// kron of identity padding around a middle matrix
inline SparseMat<RatFunc> pad(int left_dim, const SparseMat<RatFunc>& mid, int right_dim) {
    auto m = kron(SparseMat<RatFunc>::identity(left_dim), mid);
    return kron(m, SparseMat<RatFunc>::identity(right_dim));
}

// the braid moving the first a thin strands past the following b thin strands
inline SparseMat<RatFunc> thin_block_braid(Flavor f, int n, int a, int b, bool over) {
    int m = a + b;
    auto x = thin_crossing(f, n, over);
    auto total = SparseMat<RatFunc>::identity(int(thin_dim(n, m)));
    // strand s (1-based from the left of the a-block) walks right past b strands
    for (int s = a; s >= 1; --s)
        for (int t = 0; t < b; ++t) {
            int pos = s + t; // crossing acts on thin strands (pos, pos+1)
            total = pad(int(thin_dim(n, pos - 1)), x, int(thin_dim(n, m - pos - 1))) * total;
        }
    return total;
}

} // namespace detail

// merge via the thin space: strand(a) (x) strand(b) -> strand(a+b)
inline SparseMat<RatFunc> web_merge_exploded(Flavor f, int n, int a, int b) {
    auto m = project(f, n, a + b) * kron(explode(f, n, a), explode(f, n, b));
    return detail::explosion_norm(a, b) * m;
}

// split via the thin space: strand(a+b) -> strand(a) (x) strand(b)
inline SparseMat<RatFunc> web_split_exploded(Flavor f, int n, int a, int b) {
    auto m = kron(project(f, n, a), project(f, n, b)) * explode(f, n, a + b);
    return detail::explosion_norm(a, b) * m;
}

namespace detail {

// Cross statistics of two sorted words: counts of pairs (u in U, w in W) with
// u > w and with u < w.  Inversion counts of a concatenation split as
// inv(UW) = inv(U) + inv(W) + gt(U, W), and likewise for non-inversions, which
// is what lets the explosion sums below factor per argument.
inline std::pair<int, int> cross_pairs(const std::vector<int>& U, const std::vector<int>& W) {
    int gt = 0, lt = 0;
    for (int u : U)
        for (int w : W) {
            gt += u > w;
            lt += u < w;
        }
    return {gt, lt};
}

inline std::vector<int> multiplicity_profile(const std::vector<int>& sorted_word) {
    std::vector<int> prof;
    size_t i = 0;
    while (i < sorted_word.size()) {
        size_t j = i;
        while (j < sorted_word.size() && sorted_word[j] == sorted_word[i]) ++j;
        prof.push_back(int(j - i));
        i = j;
    }
    return prof;
}

inline Laurent mult_fact(const std::vector<int>& profile) {
    Laurent s{Rat(1)};
    for (int m : profile) s *= qfact(m);
    return s;
}

// Σ over distinct permutations w of a multiset with the given multiplicity
// profile of q^(inv(w) - noninv(w)), the combined iota/pi weight of one
// argument.  Depends only on the sorted profile; memoized.
inline const Laurent& sym_perm_weight(std::vector<int> profile) {
    static std::map<std::vector<int>, Laurent> memo;
    std::sort(profile.begin(), profile.end());
    auto it = memo.find(profile);
    if (it != memo.end()) return it->second;
    std::vector<int> w;
    for (size_t x = 0; x < profile.size(); ++x)
        w.insert(w.end(), size_t(profile[size_t(x)]), int(x) + 1);
    Laurent total;
    do {
        total += Laurent::q(inversions(w) - noninversions_distinct(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return memo.emplace(std::move(profile), std::move(total)).first->second;
}

} // namespace detail

// merge: strand(a) (x) strand(b) -> strand(a+b).  Same map as the exploded
// composite, but assembled column-by-column from the factored straightening
// statistics (each column hits the single union word), so the n^(a+b) thin
// space never materializes.  Exterior entries collapse to (-1/q)^gt.
inline SparseMat<RatFunc> web_merge(Flavor f, int n, int a, int b) {
    StrandBasis A(f, n, a), B(f, n, b), AB(f, n, a + b);
    SparseMat<RatFunc> out(AB.dim(), A.dim() * B.dim());
    const Laurent denom = qfact(a) * qfact(b);
    for (int ca = 0; ca < A.dim(); ++ca)
        for (int cb = 0; cb < B.dim(); ++cb) {
            const auto& U = A.word(ca);
            const auto& W = B.word(cb);
            std::vector<int> R(U);
            R.insert(R.end(), W.begin(), W.end());
            std::sort(R.begin(), R.end());
            if (f == Flavor::Ext && std::adjacent_find(R.begin(), R.end()) != R.end()) continue;
            auto [gt, lt] = detail::cross_pairs(U, W);
            (void)lt;
            RatFunc entry;
            if (f == Flavor::Ext) {
                entry = RatFunc(Laurent::monomial(gt % 2 ? Rat(-1) : Rat(1), -gt));
            } else {
                auto pu = detail::multiplicity_profile(U);
                auto pw = detail::multiplicity_profile(W);
                Laurent num = detail::mult_fact(pu) * detail::mult_fact(pw) *
                              detail::sym_perm_weight(pu) * detail::sym_perm_weight(pw) *
                              Laurent::q(gt);
                entry = RatFunc(num, denom);
            }
            out.set(AB.index(R), ca * B.dim() + cb, std::move(entry));
        }
    return out;
}

// split: strand(a+b) -> strand(a) (x) strand(b), summing over the multiset
// decompositions of each column word; the factored form of the same sums.
inline SparseMat<RatFunc> web_split(Flavor f, int n, int a, int b) {
    StrandBasis A(f, n, a), B(f, n, b), AB(f, n, a + b);
    SparseMat<RatFunc> out(A.dim() * B.dim(), AB.dim());
    const Laurent denom = qfact(a) * qfact(b);
    std::vector<int> pick(size_t(a + b), 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    std::sort(pick.begin(), pick.end());
    std::vector<std::vector<int>> masks;
    do masks.push_back(pick);
    while (std::next_permutation(pick.begin(), pick.end()));
    for (int c = 0; c < AB.dim(); ++c) {
        const auto& R = AB.word(c);
        const Laurent scale_r = detail::mult_fact(detail::multiplicity_profile(R));
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& m : masks) {
            std::vector<int> U, W;
            for (size_t t = 0; t < R.size(); ++t) (m[t] ? U : W).push_back(R[t]);
            if (!seen.insert({U, W}).second) continue;
            auto [gt, lt] = detail::cross_pairs(U, W);
            RatFunc entry;
            if (f == Flavor::Ext) {
                entry = RatFunc(Laurent::monomial(gt % 2 ? Rat(-1) : Rat(1), a * b - gt));
            } else {
                Laurent num = scale_r * detail::sym_perm_weight(detail::multiplicity_profile(U)) *
                              detail::sym_perm_weight(detail::multiplicity_profile(W)) *
                              Laurent::q(-lt);
                entry = RatFunc(num, denom);
            }
            out.add_to(A.index(U) * B.dim() + B.index(W), c, entry);
        }
    }
    return out;
}

// crossing: strand(a) (x) strand(b) -> strand(b) (x) strand(a)
inline SparseMat<RatFunc> web_crossing(Flavor f, int n, int a, int b, bool over) {
    auto m = kron(project(f, n, b), project(f, n, a)) *
             (detail::thin_block_braid(f, n, a, b, over) *
              kron(explode(f, n, a), explode(f, n, b)));
    return detail::explosion_norm(a, b) * m;
}

// Same map, assembled by peeling one thin strand at a time instead of fully
// exploding both arguments:
//   X(a,b) = 1/[b] (merge(b-1,1) (x) id_a) (id_{b-1} (x) X(a,1))
//                  (X(a,b-1) (x) id_1) (id_a (x) split(b-1,1))
// and symmetrically in the first argument down to the thin case.  Agrees with
// web_crossing (digon removal collapses the split/merge pair) but stays
// polynomial in the strand dimensions, so it is usable for large labels.
inline SparseMat<RatFunc> web_crossing_peeled(Flavor f, int n, int a, int b, bool over) {
    if (a == 1 && b == 1) return thin_crossing(f, n, over);
    auto idm = [&](int m) { return SparseMat<RatFunc>::identity(int(strand_dim(f, n, m))); };
    if (b >= 2) {
        auto x = kron(web_merge(f, n, b - 1, 1), idm(a)) *
                 (kron(idm(b - 1), web_crossing_peeled(f, n, a, 1, over)) *
                  (kron(web_crossing_peeled(f, n, a, b - 1, over), idm(1)) *
                   kron(idm(a), web_split(f, n, b - 1, 1))));
        return RatFunc(Laurent(Rat(1)), qint(b)) * x;
    }
    auto x = kron(idm(1), web_merge(f, n, a - 1, 1)) *
             (kron(web_crossing_peeled(f, n, a - 1, 1, over), idm(1)) *
              (kron(idm(a - 1), thin_crossing(f, n, over)) *
               kron(web_split(f, n, a - 1, 1), idm(1))));
    return RatFunc(Laurent(Rat(1)), qint(a)) * x;
}

// ---------------------------------------------------------------------------
// Boundary intertwiners.  Which vector is used depends on the evaluation
// functor: cups/caps live on V (x) V (two thin strands), start/end dots on a
// single 2-labelled strand.
// ---------------------------------------------------------------------------

// orthogonal-invariant pairing on V (x) V (exterior flavor evaluation)
inline SparseMat<RatFunc> cup_orth(int n) {
    SparseMat<RatFunc> v(n * n, 1);
    for (int i = 1; i <= n; ++i) v.set((i - 1) * n + (i - 1), 0, RatFunc(1));
    return v;
}
inline SparseMat<RatFunc> cap_orth(int n) {
    SparseMat<RatFunc> v(1, n * n);
    for (int i = 1; i <= n; ++i)
        v.set(0, (i - 1) * n + (i - 1), RatFunc(Laurent::q(n + 1 - 2 * i)));
    return v;
}

// symplectic-invariant pairing on V (x) V (symmetric flavor evaluation, n even)
inline SparseMat<RatFunc> cup_symp(int n) {
    assert(n % 2 == 0);
    SparseMat<RatFunc> v(n * n, 1);
    for (int i = 1; i <= n / 2; ++i) {
        v.set((2 * i - 2) * n + (2 * i - 1), 0, RatFunc(Laurent::q(1 - i + 1)));
        v.set((2 * i - 1) * n + (2 * i - 2), 0, RatFunc(Laurent::monomial(Rat(-1), 1 - i)));
    }
    return v;
}
inline SparseMat<RatFunc> cap_symp(int n) {
    assert(n % 2 == 0);
    SparseMat<RatFunc> v(1, n * n);
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 1) {
            int j = i + 1;
            v.set(0, (i - 1) * n + (j - 1), RatFunc(Laurent::q(n - (3 * i + 1) / 2)));
        } else {
            int j = i - 1;
            v.set(0, (i - 1) * n + (j - 1), RatFunc(Laurent::monomial(Rat(-1), n - 3 * i / 2)));
        }
    }
    return v;
}

// symplectic-invariant 2-form in the exterior square (exterior flavor dots, n even)
inline SparseMat<RatFunc> sdot_symp(int n) {
    assert(n % 2 == 0);
    StrandBasis sb(Flavor::Ext, n, 2);
    SparseMat<RatFunc> v(sb.dim(), 1);
    for (int i = 1; i <= n / 2; ++i)
        v.set(sb.index({2 * i - 1, 2 * i}), 0, RatFunc(Laurent::q(1 - i)));
    return v;
}
inline SparseMat<RatFunc> edot_symp(int n) {
    assert(n % 2 == 0);
    StrandBasis sb(Flavor::Ext, n, 2);
    SparseMat<RatFunc> v(1, sb.dim());
    for (int i = 1; i <= n; i += 2)
        v.set(0, sb.index({i, i + 1}), RatFunc(Laurent::q(n - (3 * i + 1) / 2)));
    return v;
}

// orthogonal-invariant quadratic form in the symmetric square (symmetric flavor dots)
inline SparseMat<RatFunc> sdot_orth(int n) {
    StrandBasis sb(Flavor::Sym, n, 2);
    SparseMat<RatFunc> v(sb.dim(), 1);
    RatFunc inv2(Laurent(Rat(1)), qint(2));
    for (int i = 1; i <= n; ++i) v.set(sb.index({i, i}), 0, inv2);
    return v;
}
inline SparseMat<RatFunc> edot_orth(int n) {
    StrandBasis sb(Flavor::Sym, n, 2);
    SparseMat<RatFunc> v(1, sb.dim());
    for (int i = 1; i <= n; ++i)
        v.set(0, sb.index({i, i}), RatFunc(Laurent::q(n + 1 - 2 * i)));
    return v;
}

} // namespace qweb
