#pragma once

#include "qweb/basis.hpp"
#include "qweb/qnum.hpp"
#include "qweb/sparse.hpp"

namespace qweb {

// Chevalley action on a single strand space (exterior or symmetric power).
//
//   E_i: replaces one letter i+1 by i,   F_i: replaces one letter i by i+1,
//   K_i: diagonal with eigenvalue q^(mult_i - mult_{i+1}).
//
// On exterior words the moving coefficient is 1; on symmetric words it is the
// quantum multiplicity [mult_{i+1}] (for E) resp. [mult_i] (for F).  These are
// the operators induced on the quotients of tensor space by the standard
// comultiplication rules; glrep tests re-derive them via explosion.
inline SparseMat<RatFunc> strand_E(const StrandBasis& sb, Flavor f, int i) {
    SparseMat<RatFunc> m(sb.dim(), sb.dim());
    for (int c = 0; c < sb.dim(); ++c) {
        std::vector<int> w = sb.word(c);
        int mult = int(std::count(w.begin(), w.end(), i + 1));
        if (mult == 0) continue;
        auto it = std::find(w.begin(), w.end(), i + 1);
        if (f == Flavor::Ext && std::count(w.begin(), w.end(), i)) continue;
        *it = i;
        std::sort(w.begin(), w.end());
        m.set(sb.index(w), c, f == Flavor::Ext ? RatFunc(1) : RatFunc(qint(mult)));
    }
    return m;
}

inline SparseMat<RatFunc> strand_F(const StrandBasis& sb, Flavor f, int i) {
    SparseMat<RatFunc> m(sb.dim(), sb.dim());
    for (int c = 0; c < sb.dim(); ++c) {
        std::vector<int> w = sb.word(c);
        int mult = int(std::count(w.begin(), w.end(), i));
        if (mult == 0) continue;
        auto it = std::find(w.begin(), w.end(), i);
        if (f == Flavor::Ext && std::count(w.begin(), w.end(), i + 1)) continue;
        *it = i + 1;
        std::sort(w.begin(), w.end());
        m.set(sb.index(w), c, f == Flavor::Ext ? RatFunc(1) : RatFunc(qint(mult)));
    }
    return m;
}

inline int weight_exponent(const std::vector<int>& word, int i) {
    return int(std::count(word.begin(), word.end(), i)) -
           int(std::count(word.begin(), word.end(), i + 1));
}

inline SparseMat<RatFunc> strand_K(const StrandBasis& sb, int i, int sign = 1) {
    SparseMat<RatFunc> m(sb.dim(), sb.dim());
    for (int c = 0; c < sb.dim(); ++c)
        m.set(c, c, RatFunc(Laurent::q(sign * weight_exponent(sb.word(c), i))));
    return m;
}

// Object-level operators via the comultiplication, with the first tensor
// factor leftmost:  Delta(E) = E (x) K + 1 (x) E,  Delta(F) = F (x) 1 + K^-1 (x) F.
inline SparseMat<RatFunc> act_K(const ObjectBasis& ob, int i, int sign = 1) {
    SparseMat<RatFunc> out(int(ob.dim()), int(ob.dim()));
    for (int64_t c = 0; c < ob.dim(); ++c) {
        int e = 0;
        auto d = ob.digits(c);
        for (int s = 0; s < ob.num_strands(); ++s)
            e += weight_exponent(ob.strand(s).word(d[size_t(s)]), i);
        out.set(int(c), int(c), RatFunc(Laurent::q(sign * e)));
    }
    return out;
}

namespace detail {

enum class ChevKind { E, F };

inline SparseMat<RatFunc> act_chevalley(const ObjectBasis& ob, int i, ChevKind kind) {
    int S = ob.num_strands();
    SparseMat<RatFunc> total(int(ob.dim()), int(ob.dim()));
    for (int t = 0; t < S; ++t) {
        SparseMat<RatFunc> term(1, 1);
        term.set(0, 0, RatFunc(1));
        for (int s = 0; s < S; ++s) {
            const StrandBasis& sb = ob.strand(s);
            SparseMat<RatFunc> factor;
            if (s == t) {
                factor = kind == ChevKind::E ? strand_E(sb, ob.flavor(), i)
                                             : strand_F(sb, ob.flavor(), i);
            } else if (kind == ChevKind::E && s > t) {
                factor = strand_K(sb, i, 1);
            } else if (kind == ChevKind::F && s < t) {
                factor = strand_K(sb, i, -1);
            } else {
                factor = SparseMat<RatFunc>::identity(sb.dim());
            }
            term = kron(term, factor);
        }
        total = total + term;
    }
    return total;
}

} // namespace detail

inline SparseMat<RatFunc> act_E(const ObjectBasis& ob, int i) {
    return detail::act_chevalley(ob, i, detail::ChevKind::E);
}
inline SparseMat<RatFunc> act_F(const ObjectBasis& ob, int i) {
    return detail::act_chevalley(ob, i, detail::ChevKind::F);
}

} // namespace qweb
