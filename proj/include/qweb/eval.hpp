#pragma once

#include "qweb/generators.hpp"
#include "qweb/web.hpp"

#include <map>
#include <tuple>

namespace qweb {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The six evaluation functors: each web family paired with the exterior or
// symmetric strand model. The loop-parameter value is determined by the
// flavor: exterior specializes z = q^n, symmetric z = -q^{-n}.
enum class FunctorKind { AExt, ASym, BDExt, BDSym, CExt, CSym };

inline WebFamily functor_family(FunctorKind f) {
    switch (f) {
        case FunctorKind::AExt:
        case FunctorKind::ASym: return WebFamily::Plain;
        case FunctorKind::BDExt:
        case FunctorKind::BDSym: return WebFamily::CupCap;
        case FunctorKind::CExt:
        case FunctorKind::CSym: return WebFamily::Dotted;
    }
    return WebFamily::Plain;
}

inline Flavor functor_flavor(FunctorKind f) {
    switch (f) {
        case FunctorKind::AExt:
        case FunctorKind::BDExt:
        case FunctorKind::CExt: return Flavor::Ext;
        default: return Flavor::Sym;
    }
}

// Functors landing on the symplectic side need an even-dimensional space:
// symmetric-model cups/caps and exterior-model dots only exist for even n.
inline bool functor_legal(FunctorKind f, int n) {
    if (n < 1) return false;
    if (f == FunctorKind::BDSym || f == FunctorKind::CExt) return n % 2 == 0;
    return true;
}

inline ZSpec functor_z(FunctorKind f, int n) {
    return functor_flavor(f) == Flavor::Ext ? ZSpec::plus_q(n) : ZSpec::minus_q_inv(n);
}

inline std::string functor_name(FunctorKind f) {
    switch (f) {
        case FunctorKind::AExt: return "a-ext";
        case FunctorKind::ASym: return "a-sym";
        case FunctorKind::BDExt: return "bd-ext";
        case FunctorKind::BDSym: return "bd-sym";
        case FunctorKind::CExt: return "c-ext";
        case FunctorKind::CSym: return "c-sym";
    }
    return "?";
}

inline FunctorKind functor_from_name(const std::string& s) {
    if (s == "a-ext") return FunctorKind::AExt;
    if (s == "a-sym") return FunctorKind::ASym;
    if (s == "bd-ext") return FunctorKind::BDExt;
    if (s == "bd-sym") return FunctorKind::BDSym;
    if (s == "c-ext") return FunctorKind::CExt;
    if (s == "c-sym") return FunctorKind::CSym;
    throw EvalError("unknown functor '" + s + "'");
}

inline const std::vector<FunctorKind>& all_functors() {
    static const std::vector<FunctorKind> fs = {FunctorKind::AExt,  FunctorKind::ASym,
                                                FunctorKind::BDExt, FunctorKind::BDSym,
                                                FunctorKind::CExt,  FunctorKind::CSym};
    return fs;
}

// Evaluates webs for a fixed strand model (flavor, n). Generator matrices are
// cached; full diagrams are evaluated column by column so that only the
// generator blocks are ever materialized, never the padded slice matrices.
class Evaluator {
public:
    Evaluator(Flavor f, int n) : flavor_(f), n_(n) {}

    Flavor flavor() const { return flavor_; }
    int n() const { return n_; }

    int64_t strand_dim_of(int label) const { return strand_dim(flavor_, n_, label); }
    int64_t object_dim(const std::vector<int>& labels) const {
        int64_t d = 1;
        for (int a : labels) d *= strand_dim_of(a);
        return d;
    }

    const SparseMat<RatFunc>& gen_matrix(WebFamily fam, GenKind k, int a, int b) const {
        auto key = std::make_tuple(int(fam), int(k), a, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, build_gen(fam, k, a, b)).first->second;
    }

    // same matrix transposed: row r lists the targets of source basis vector r
    const SparseMat<RatFunc>& gen_rows(WebFamily fam, GenKind k, int a, int b) const {
        auto key = std::make_tuple(int(fam), int(k), a, b);
        auto it = cache_t_.find(key);
        if (it != cache_t_.end()) return it->second;
        return cache_t_.emplace(key, gen_matrix(fam, k, a, b).transposed()).first->second;
    }

    using Column = std::map<int64_t, RatFunc>;

    Column eval_column(const Web& w, int64_t j) const {
        Column col;
        col[j] = RatFunc(1);
        for (const Slice& sl : w.slices) {
            const auto& rowsT = gen_rows(w.family, sl.kind, sl.a, sl.b);
            int64_t dg_src = object_dim(sl.gen_source());
            int64_t dg_tgt = object_dim(sl.gen_target());
            int64_t dr = object_dim(sl.right);
            Column next;
            for (const auto& [idx, val] : col) {
                int64_t post = idx % dr;
                int64_t rest = idx / dr;
                int64_t mid = rest % dg_src;
                int64_t pre = rest / dg_src;
                for (const auto& [midp, g] : rowsT.row(int(mid))) {
                    RatFunc c = val * g;
                    if (c.is_zero()) continue;
                    int64_t tgt = (pre * dg_tgt + midp) * dr + post;
                    auto [slot, fresh] = next.try_emplace(tgt, c);
                    if (!fresh) {
                        slot->second = slot->second + c;
                        if (slot->second.is_zero()) next.erase(slot);
                    }
                }
            }
            col = std::move(next);
        }
        return col;
    }

    SparseMat<RatFunc> eval(const Web& w) const {
        w.validate();
        int64_t sd = object_dim(w.source);
        int64_t td = object_dim(w.target());
        SparseMat<RatFunc> m{int(td), int(sd)};
        for (int64_t j = 0; j < sd; ++j)
            for (const auto& [i, v] : eval_column(w, j)) m.set(int(i), int(j), v);
        return m;
    }

private:
    SparseMat<RatFunc> build_gen(WebFamily fam, GenKind k, int a, int b) const {
        switch (k) {
            case GenKind::Merge: return web_merge(flavor_, n_, a, b);
            case GenKind::Split: return web_split(flavor_, n_, a, b);
            case GenKind::XOver: return web_crossing_peeled(flavor_, n_, a, b, true);
            case GenKind::XUnder: return web_crossing_peeled(flavor_, n_, a, b, false);
            case GenKind::Cup:
            case GenKind::Cap: {
                if (fam != WebFamily::CupCap) throw EvalError("cup/cap outside cupcap family");
                if (flavor_ == Flavor::Sym && n_ % 2 != 0)
                    throw EvalError("symmetric-model cup/cap needs even n");
                if (k == GenKind::Cup)
                    return flavor_ == Flavor::Ext ? cup_orth(n_) : cup_symp(n_);
                return flavor_ == Flavor::Ext ? cap_orth(n_) : cap_symp(n_);
            }
            case GenKind::SDot:
            case GenKind::EDot: {
                if (fam != WebFamily::Dotted) throw EvalError("dots outside dotted family");
                if (flavor_ == Flavor::Ext && n_ % 2 != 0)
                    throw EvalError("exterior-model dots need even n");
                if (k == GenKind::SDot)
                    return flavor_ == Flavor::Ext ? sdot_symp(n_) : sdot_orth(n_);
                return flavor_ == Flavor::Ext ? edot_symp(n_) : edot_orth(n_);
            }
        }
        throw EvalError("unknown generator");
    }

    Flavor flavor_;
    int n_;
    mutable std::map<std::tuple<int, int, int, int>, SparseMat<RatFunc>> cache_, cache_t_;
};

// A formal linear combination of webs with common boundary.
struct ComboTerm {
    RatFunc coef;
    Web web;
};
using Combo = std::vector<ComboTerm>;

inline Combo combo(const Web& w) { return {{RatFunc(1), w}}; }
inline Combo combo(const RatFunc& c, const Web& w) { return {{c, w}}; }

// Result of comparing two combinations entrywise. On mismatch the witness
// records one differing matrix entry.
struct CompareResult {
    bool equal = true;
    int64_t row = -1, col = -1;
    RatFunc lhs, rhs;
};

inline CompareResult combo_equal(const Evaluator& ev, const Combo& lhs, const Combo& rhs) {
    if (lhs.empty() && rhs.empty()) return {};
    const Web& ref = lhs.empty() ? rhs.front().web : lhs.front().web;
    std::vector<int> src = ref.source, tgt = ref.target();
    for (const auto* side : {&lhs, &rhs})
        for (const ComboTerm& t : *side) {
            t.web.validate();
            if (t.web.source != src || t.web.target() != tgt)
                throw EvalError("combination terms have mismatched boundaries");
        }
    int64_t sd = ev.object_dim(src);
    for (int64_t j = 0; j < sd; ++j) {
        Evaluator::Column l, r;
        auto accumulate = [&](const Combo& side, Evaluator::Column& into) {
            for (const ComboTerm& t : side) {
                if (t.coef.is_zero()) continue;
                for (const auto& [i, v] : ev.eval_column(t.web, j)) {
                    RatFunc c = t.coef * v;
                    if (c.is_zero()) continue;
                    auto [slot, fresh] = into.try_emplace(i, c);
                    if (!fresh) {
                        slot->second = slot->second + c;
                        if (slot->second.is_zero()) into.erase(slot);
                    }
                }
            }
        };
        accumulate(lhs, l);
        accumulate(rhs, r);
        auto li = l.begin();
        auto ri = r.begin();
        while (li != l.end() || ri != r.end()) {
            if (ri == r.end() || (li != l.end() && li->first < ri->first))
                return {false, li->first, j, li->second, RatFunc()};
            if (li == l.end() || ri->first < li->first)
                return {false, ri->first, j, RatFunc(), ri->second};
            if (li->second != ri->second) return {false, li->first, j, li->second, ri->second};
            ++li;
            ++ri;
        }
    }
    return {};
}

} // namespace qweb
