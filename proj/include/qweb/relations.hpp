#pragma once

#include "qweb/build.hpp"
#include "qweb/eval.hpp"

#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace qweb {

// ---------------------------------------------------------------------------
// Formal combinations: coefficients may depend on the loop parameter z, which
// is only fixed once an evaluation functor is chosen.
// ---------------------------------------------------------------------------
using ZCoef = std::function<RatFunc(const ZSpec&)>;
struct FormalTerm {
    ZCoef coef;
    Web web;
};
using FormalCombo = std::vector<FormalTerm>;

inline ZCoef zc(RatFunc c) {
    return [c = std::move(c)](const ZSpec&) { return c; };
}
inline ZCoef zc(const Laurent& c) { return zc(RatFunc(c)); }
inline ZCoef zc_one() { return zc(RatFunc(1)); }
inline ZCoef zc_bracket(int a, int d = 1) {
    return [a, d](const ZSpec& z) { return zbracket(z, a, d); };
}
// c * z^e (z is a signed power of q, so this stays a monomial)
inline ZCoef zc_mono(int c, int e) {
    return [c, e](const ZSpec& z) {
        int sign = (e % 2 == 0) ? 1 : z.sign;
        return RatFunc(Laurent::monomial(Rat(c * sign), z.pow * e));
    };
}

inline Combo resolve(const FormalCombo& f, const ZSpec& z) {
    Combo out;
    for (const FormalTerm& t : f) {
        RatFunc c = t.coef(z);
        if (!c.is_zero()) out.push_back({c, t.web});
    }
    return out;
}

// ---------------------------------------------------------------------------
// A relation fixture: a named generator of (lhs, rhs) pairs, each of which
// must evaluate to an exact matrix identity under every applicable functor.
// ---------------------------------------------------------------------------
struct RelInstance {
    std::string tag;
    FormalCombo lhs, rhs;
};

struct RelFixture {
    std::string name;
    WebFamily family; // Plain fixtures apply to all functors
    std::function<std::vector<RelInstance>()> make;
};

struct RelWitness {
    std::string instance;
    int64_t row = -1, col = -1;
    std::string lhs, rhs;
};

struct ReportRow {
    std::string fixture;
    FunctorKind functor = FunctorKind::AExt;
    int n = 0;
    bool pass = false;
    int run = 0, skipped = 0;
    std::optional<RelWitness> witness;
};

// Shared evaluators: the functor action factors through the flavor, so one
// evaluator serves all functors of that flavor at a given n.
struct EvalCache {
    std::map<std::pair<int, int>, Evaluator> evs;
    Evaluator& get(Flavor f, int n) {
        auto key = std::make_pair(int(f), n);
        auto it = evs.find(key);
        if (it == evs.end()) it = evs.try_emplace(key, Evaluator(f, n)).first;
        return it->second;
    }
};

// ---------------------------------------------------------------------------
// Work estimate and budget.  Label sweeps grow quickly in the symmetric
// flavor at large n; instances whose estimated work exceeds the budget are
// skipped and reported as such, so coverage stays visible.  The unit is
// roughly "basis columns touched": per slice the dimension of its full
// source, plus a construction proxy for thick crossings.
// ---------------------------------------------------------------------------
inline int64_t instance_work(const Evaluator& ev, const Combo& lhs, const Combo& rhs) {
    auto choose = [](int64_t m, int64_t k) {
        int64_t r = 1;
        for (int64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
        return r;
    };
    int64_t total = 0;
    for (const Combo* side : {&lhs, &rhs})
        for (const ComboTerm& t : *side)
            for (const Slice& s : t.web.slices) {
                std::vector<int> full = s.left;
                auto g = s.gen_source();
                full.insert(full.end(), g.begin(), g.end());
                full.insert(full.end(), s.right.begin(), s.right.end());
                total += ev.object_dim(full);
                if (s.kind == GenKind::XOver || s.kind == GenKind::XUnder)
                    total += ev.strand_dim_of(s.a) * ev.strand_dim_of(s.b) *
                             choose(s.a + s.b, std::min(s.a, s.b));
            }
    return total;
}

inline int64_t column_budget() {
    if (const char* s = std::getenv("QWEB_COLUMN_BUDGET")) {
        long long v = std::atoll(s);
        return v <= 0 ? std::numeric_limits<int64_t>::max() : int64_t(v);
    }
    return 250'000;
}

inline ReportRow run_instances(const std::string& name, const std::vector<RelInstance>& insts,
                               FunctorKind f, int n, EvalCache& cache, int64_t budget) {
    ReportRow row;
    row.fixture = name;
    row.functor = f;
    row.n = n;
    row.pass = true;
    Evaluator& ev = cache.get(functor_flavor(f), n);
    ZSpec z = functor_z(f, n);
    for (const RelInstance& inst : insts) {
        Combo lhs = resolve(inst.lhs, z), rhs = resolve(inst.rhs, z);
        if (instance_work(ev, lhs, rhs) > budget) {
            ++row.skipped;
            continue;
        }
        CompareResult r = combo_equal(ev, lhs, rhs);
        ++row.run;
        if (!r.equal) {
            row.pass = false;
            row.witness = RelWitness{inst.tag, r.row, r.col, r.lhs.str(), r.rhs.str()};
            break;
        }
    }
    if (row.run == 0) row.pass = false; // a row must actually check something
    return row;
}

// Check one relation under a set of functors and ranks.
inline std::vector<ReportRow> check_relation(const FormalCombo& lhs, const FormalCombo& rhs,
                                             const std::vector<FunctorKind>& functors,
                                             const std::vector<int>& ns, EvalCache& cache,
                                             const std::string& name = "relation",
                                             int64_t budget = column_budget()) {
    WebFamily fam = WebFamily::Plain;
    if (!lhs.empty()) fam = lhs.front().web.family;
    else if (!rhs.empty()) fam = rhs.front().web.family;
    std::vector<RelInstance> insts{{name, lhs, rhs}};
    std::vector<ReportRow> rows;
    for (FunctorKind f : functors) {
        if (fam != WebFamily::Plain && functor_family(f) != fam) continue;
        for (int n : ns) {
            if (!functor_legal(f, n)) continue;
            rows.push_back(run_instances(name, insts, f, n, cache, budget));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// The fixture catalog.
// ---------------------------------------------------------------------------
namespace fixtures {

using Ops = std::vector<std::function<void(WebBuilder&)>>;

inline std::optional<Web> ops_web(WebFamily fam, std::vector<int> labels, const Ops& ops) {
    WebBuilder b(fam, std::move(labels));
    for (const auto& op : ops) op(b);
    if (b.dead()) return std::nullopt;
    return b.web();
}

inline void add(FormalCombo& c, ZCoef coef, std::optional<Web> w) {
    if (w) c.push_back({std::move(coef), std::move(*w)});
}

inline Web mkweb(WebFamily fam, std::vector<int> src, std::vector<Slice> sl) {
    Web w;
    w.family = fam;
    w.source = std::move(src);
    w.slices = std::move(sl);
    w.validate();
    return w;
}

inline FormalCombo one(Web w) { return {{zc_one(), std::move(w)}}; }

inline std::string tagn(std::initializer_list<int> xs, const char* suffix = "") {
    std::ostringstream o;
    const char* sep = "";
    for (int x : xs) {
        o << sep << x;
        sep = ",";
    }
    o << suffix;
    return o.str();
}

inline std::function<void(WebBuilder&)> rg(int from, int to, int t = 1) {
    return [=](WebBuilder& b) { b.rung(from, to, t); };
}
inline std::function<void(WebBuilder&)> rpair() {
    return [](WebBuilder& b) { b.raise_pair(); };
}
inline std::function<void(WebBuilder&)> lpair() {
    return [](WebBuilder& b) { b.lower_pair(); };
}
inline std::function<void(WebBuilder&)> rtwo() {
    return [](WebBuilder& b) { b.raise_two(); };
}
inline std::function<void(WebBuilder&)> ltwo() {
    return [](WebBuilder& b) { b.lower_two(); };
}

// --- plain family -----------------------------------------------------------

inline std::vector<RelInstance> merge_associativity() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                Web l = mkweb(F, {a, b, c},
                              {slice_gen({}, GenKind::Merge, a, b, {c}),
                               slice_gen({}, GenKind::Merge, a + b, c, {})});
                Web r = mkweb(F, {a, b, c},
                              {slice_gen({a}, GenKind::Merge, b, c, {}),
                               slice_gen({}, GenKind::Merge, a, b + c, {})});
                out.push_back({tagn({a, b, c}), one(l), one(r)});
            }
    return out;
}

inline std::vector<RelInstance> split_coassociativity() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                Web l = mkweb(F, {a + b + c},
                              {slice_gen({}, GenKind::Split, a + b, c, {}),
                               slice_gen({}, GenKind::Split, a, b, {c})});
                Web r = mkweb(F, {a + b + c},
                              {slice_gen({}, GenKind::Split, a, b + c, {}),
                               slice_gen({a}, GenKind::Split, b, c, {})});
                out.push_back({tagn({a, b, c}), one(l), one(r)});
            }
    return out;
}

inline std::vector<RelInstance> rung_commutator() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc_one(), ops_web(F, {a, b}, {rg(0, 1), rg(1, 0)}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rg(1, 0), rg(0, 1)}));
            add(rhs, zc(qint(a - b)), ops_web(F, {a, b}, {}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> thick_rung_commutator() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    const std::vector<std::pair<int, int>> cds{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (auto [c, d] : cds) {
                FormalCombo lhs, rhs;
                add(lhs, zc_one(), ops_web(F, {a, b}, {rg(0, 1, c), rg(1, 0, d)}));
                for (int e = 0; e <= std::min(c, d); ++e)
                    add(rhs, zc(qbinom(a - b - c + d, e)),
                        ops_web(F, {a, b}, {rg(1, 0, d - e), rg(0, 1, c - e)}));
                out.push_back({tagn({a, b, c, d}, " up"), lhs, rhs});

                FormalCombo lhs2, rhs2;
                add(lhs2, zc_one(), ops_web(F, {a, b}, {rg(1, 0, c), rg(0, 1, d)}));
                for (int e = 0; e <= std::min(c, d); ++e)
                    add(rhs2, zc(qbinom(-a + b - c + d, e)),
                        ops_web(F, {a, b}, {rg(0, 1, d - e), rg(1, 0, c - e)}));
                out.push_back({tagn({a, b, c, d}, " down"), lhs2, rhs2});
            }
    return out;
}

inline std::vector<RelInstance> divided_power_composition() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    const std::vector<std::pair<int, int>> cds{{1, 1}, {2, 1}, {1, 2}};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (auto [c, d] : cds) {
                FormalCombo lhs, rhs;
                add(lhs, zc_one(), ops_web(F, {a, b}, {rg(1, 0, c), rg(1, 0, d)}));
                add(rhs, zc(qbinom(c + d, d)), ops_web(F, {a, b}, {rg(1, 0, c + d)}));
                out.push_back({tagn({a, b, c, d}, " up"), lhs, rhs});

                FormalCombo lhs2, rhs2;
                add(lhs2, zc_one(), ops_web(F, {a, b}, {rg(0, 1, c), rg(0, 1, d)}));
                add(rhs2, zc(qbinom(c + d, d)), ops_web(F, {a, b}, {rg(0, 1, c + d)}));
                out.push_back({tagn({a, b, c, d}, " down"), lhs2, rhs2});
            }
    return out;
}

inline std::vector<RelInstance> digon_removal() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            Web l = mkweb(F, {a + b},
                          {slice_gen({}, GenKind::Split, a, b, {}),
                           slice_gen({}, GenKind::Merge, a, b, {})});
            Web id = mkweb(F, {a + b}, {});
            out.push_back({tagn({a, b}), one(l), {{zc(qbinom(a + b, b)), id}}});
        }
    return out;
}

inline std::vector<RelInstance> far_rung_commutation() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d) {
                    FormalCombo le, re, lf, rf;
                    add(le, zc_one(), ops_web(F, {a, b, c, d}, {rg(1, 0), rg(3, 2)}));
                    add(re, zc_one(), ops_web(F, {a, b, c, d}, {rg(3, 2), rg(1, 0)}));
                    out.push_back({tagn({a, b, c, d}, " raise"), le, re});
                    add(lf, zc_one(), ops_web(F, {a, b, c, d}, {rg(0, 1), rg(2, 3)}));
                    add(rf, zc_one(), ops_web(F, {a, b, c, d}, {rg(2, 3), rg(0, 1)}));
                    out.push_back({tagn({a, b, c, d}, " lower"), lf, rf});
                }
    return out;
}

// Alternating sum  sum_{u+v=t} (-1)^v X^(u) Y^(s) X^(v) = 0  for adjacent
// rungs, where the divided powers are thick rungs.
inline std::vector<RelInstance> adjacent_rung_serre(int s, int t) {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    struct Variant {
        const char* name;
        int xf, xt, yf, yt; // rung endpoints for X and Y
    };
    const std::vector<Variant> variants{
        {" E lo", 1, 0, 2, 1}, {" E hi", 2, 1, 1, 0}, {" F lo", 0, 1, 1, 2}, {" F hi", 1, 2, 0, 1}};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (const Variant& vr : variants) {
                    FormalCombo lhs;
                    for (int v = 0; v <= t; ++v) {
                        int u = t - v;
                        add(lhs, zc(RatFunc(v % 2 ? -1 : 1)),
                            ops_web(F, {a, b, c},
                                    {rg(vr.xf, vr.xt, v), rg(vr.yf, vr.yt, s), rg(vr.xf, vr.xt, u)}));
                    }
                    out.push_back({tagn({a, b, c, s, t}, vr.name), lhs, {}});
                }
    return out;
}

inline std::vector<RelInstance> thin_rung_serre() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                FormalCombo lhs, rhs;
                add(lhs, zc(qint(2)), ops_web(F, {a, b, c}, {rg(1, 0), rg(2, 1), rg(1, 0)}));
                add(rhs, zc_one(), ops_web(F, {a, b, c}, {rg(2, 1), rg(1, 0), rg(1, 0)}));
                add(rhs, zc_one(), ops_web(F, {a, b, c}, {rg(1, 0), rg(1, 0), rg(2, 1)}));
                out.push_back({tagn({a, b, c}), lhs, rhs});
            }
    return out;
}

inline std::vector<RelInstance> pitchfork() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (GenKind x : {GenKind::XOver, GenKind::XUnder})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    const char* sfx = x == GenKind::XOver ? " over" : " under";
                    Web l1 = mkweb(F, {a, b, c},
                                   {slice_gen({a}, GenKind::Merge, b, c, {}),
                                    slice_gen({}, x, a, b + c, {})});
                    Web r1 = mkweb(F, {a, b, c},
                                   {slice_gen({}, x, a, b, {c}), slice_gen({b}, x, a, c, {}),
                                    slice_gen({}, GenKind::Merge, b, c, {a})});
                    out.push_back({tagn({a, b, c}, (std::string(" merge") + sfx).c_str()),
                                   one(l1), one(r1)});
                    Web l2 = mkweb(F, {a, b + c},
                                   {slice_gen({}, x, a, b + c, {}),
                                    slice_gen({}, GenKind::Split, b, c, {a})});
                    Web r2 = mkweb(F, {a, b + c},
                                   {slice_gen({a}, GenKind::Split, b, c, {}),
                                    slice_gen({}, x, a, b, {c}), slice_gen({b}, x, a, c, {})});
                    out.push_back({tagn({a, b, c}, (std::string(" split") + sfx).c_str()),
                                   one(l2), one(r2)});
                }
    return out;
}

inline std::vector<RelInstance> trivalent_twist() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Plain;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            for (bool over : {true, false}) {
                GenKind x = over ? GenKind::XOver : GenKind::XUnder;
                int e = over ? a * b : -a * b;
                const char* sfx = over ? " over" : " under";
                Web l1 = mkweb(F, {a, b},
                               {slice_gen({}, x, a, b, {}), slice_gen({}, GenKind::Merge, b, a, {})});
                Web r1 = mkweb(F, {a, b}, {slice_gen({}, GenKind::Merge, a, b, {})});
                out.push_back({tagn({a, b}, (std::string(" merge") + sfx).c_str()),
                               one(l1), {{zc(Laurent::q(e)), r1}}});
                Web l2 = mkweb(F, {a + b},
                               {slice_gen({}, GenKind::Split, b, a, {}), slice_gen({}, x, b, a, {})});
                Web r2 = mkweb(F, {a + b}, {slice_gen({}, GenKind::Split, a, b, {})});
                out.push_back({tagn({a, b}, (std::string(" split") + sfx).c_str()),
                               one(l2), {{zc(Laurent::q(e)), r2}}});
            }
        }
    return out;
}

inline std::vector<RelInstance> crossing_quadratic() {
    const WebFamily F = WebFamily::Plain;
    auto X = [&](GenKind k) { return slice_gen({}, k, 1, 1, {}); };
    Web xx = mkweb(F, {1, 1}, {X(GenKind::XOver), X(GenKind::XOver)});
    Web x = mkweb(F, {1, 1}, {X(GenKind::XOver)});
    Web id = mkweb(F, {1, 1}, {});
    FormalCombo rhs{{zc(Laurent::q(1) - Laurent::q(-1)), x}, {zc_one(), id}};
    Web ou = mkweb(F, {1, 1}, {X(GenKind::XOver), X(GenKind::XUnder)});
    Web uo = mkweb(F, {1, 1}, {X(GenKind::XUnder), X(GenKind::XOver)});
    return {{"quadratic", one(xx), rhs},
            {"over under", one(ou), one(id)},
            {"under over", one(uo), one(id)}};
}

inline std::vector<RelInstance> braid_relation() {
    const WebFamily F = WebFamily::Plain;
    Slice x01 = slice_gen({}, GenKind::XOver, 1, 1, {1});
    Slice x12 = slice_gen({1}, GenKind::XOver, 1, 1, {});
    Web l = mkweb(F, {1, 1, 1}, {x01, x12, x01});
    Web r = mkweb(F, {1, 1, 1}, {x12, x01, x12});
    return {{"1,1,1", one(l), one(r)}};
}

inline std::vector<RelInstance> far_crossing_commutation() {
    const WebFamily F = WebFamily::Plain;
    Slice x01 = slice_gen({}, GenKind::XOver, 1, 1, {1, 1});
    Slice x23 = slice_gen({1, 1}, GenKind::XOver, 1, 1, {});
    Web l = mkweb(F, {1, 1, 1, 1}, {x01, x23});
    Web r = mkweb(F, {1, 1, 1, 1}, {x23, x01});
    return {{"1,1,1,1", one(l), one(r)}};
}

// --- cup/cap family ---------------------------------------------------------

inline std::vector<RelInstance> circle_removal() {
    const WebFamily F = WebFamily::CupCap;
    Web l = mkweb(F, {}, {slice_gen({}, GenKind::Cup, 0, 0, {}), slice_gen({}, GenKind::Cap, 0, 0, {})});
    Web id = mkweb(F, {}, {});
    return {{"circle", one(l), {{zc_bracket(0), id}}}};
}

inline std::vector<RelInstance> bubble_removal() {
    const WebFamily F = WebFamily::CupCap;
    Web l = mkweb(F, {1},
                  {slice_gen({1}, GenKind::Cup, 0, 0, {}),
                   slice_gen({}, GenKind::Merge, 1, 1, {1}),
                   slice_gen({}, GenKind::Split, 1, 1, {1}),
                   slice_gen({1}, GenKind::Cap, 0, 0, {})});
    Web id = mkweb(F, {1}, {});
    return {{"bubble", one(l), {{zc_bracket(-1), id}}}};
}

// The round trip around a cup: the identity plus a cap-cup term.  The scalar
// in front of the identity is the interesting part; lasso_move_wrong flips it
// to produce a deliberately failing variant for witness tests.
inline std::vector<RelInstance> lasso_move_impl(int shift) {
    const WebFamily F = WebFamily::CupCap;
    Web l = mkweb(F, {1, 1},
                  {slice_gen({1, 1}, GenKind::Cup, 0, 0, {}),
                   slice_gen({1}, GenKind::XUnder, 1, 1, {1}),
                   slice_gen({}, GenKind::Merge, 1, 1, {1, 1}),
                   slice_gen({2}, GenKind::Merge, 1, 1, {}),
                   slice_gen({2}, GenKind::Split, 1, 1, {}),
                   slice_gen({}, GenKind::Split, 1, 1, {1, 1}),
                   slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                   slice_gen({1, 1}, GenKind::Cap, 0, 0, {})});
    Web capcup = mkweb(F, {1, 1},
                       {slice_gen({}, GenKind::Cap, 0, 0, {}), slice_gen({}, GenKind::Cup, 0, 0, {})});
    Web id = mkweb(F, {1, 1}, {});
    FormalCombo rhs{{zc_one(), capcup}, {zc_bracket(shift), id}};
    return {{"lasso", one(l), rhs}};
}
inline std::vector<RelInstance> lasso_move() { return lasso_move_impl(-2); }
inline std::vector<RelInstance> lasso_move_wrong() { return lasso_move_impl(-1); }

inline std::vector<RelInstance> lollipop_vanishing() {
    const WebFamily F = WebFamily::CupCap;
    Web l1 = mkweb(F, {},
                   {slice_gen({}, GenKind::Cup, 0, 0, {}), slice_gen({}, GenKind::Merge, 1, 1, {})});
    Web l2 = mkweb(F, {2},
                   {slice_gen({}, GenKind::Split, 1, 1, {}), slice_gen({}, GenKind::Cap, 0, 0, {})});
    return {{"cup merge", one(l1), {}}, {"split cap", one(l2), {}}};
}

inline std::vector<RelInstance> cup_slide() {
    const WebFamily F = WebFamily::CupCap;
    Web l1 = mkweb(F, {},
                   {slice_gen({}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1, 1}, GenKind::Cup, 0, 0, {}),
                    slice_gen({}, GenKind::Merge, 1, 1, {1, 1}),
                    slice_gen({}, GenKind::Split, 1, 1, {1, 1})});
    Web r1 = mkweb(F, {},
                   {slice_gen({}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1, 1}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1, 1}, GenKind::Merge, 1, 1, {}),
                    slice_gen({1, 1}, GenKind::Split, 1, 1, {})});
    Web l2 = mkweb(F, {1, 1, 1, 1},
                   {slice_gen({1, 1}, GenKind::Merge, 1, 1, {}),
                    slice_gen({1, 1}, GenKind::Split, 1, 1, {}),
                    slice_gen({1, 1}, GenKind::Cap, 0, 0, {}),
                    slice_gen({}, GenKind::Cap, 0, 0, {})});
    Web r2 = mkweb(F, {1, 1, 1, 1},
                   {slice_gen({}, GenKind::Merge, 1, 1, {1, 1}),
                    slice_gen({}, GenKind::Split, 1, 1, {1, 1}),
                    slice_gen({1, 1}, GenKind::Cap, 0, 0, {}),
                    slice_gen({}, GenKind::Cap, 0, 0, {})});
    return {{"under cup", one(l1), one(r1)}, {"under cap", one(l2), one(r2)}};
}

inline std::vector<RelInstance> kink_removal() {
    const WebFamily F = WebFamily::CupCap;
    auto kink = [&](GenKind x) {
        return mkweb(F, {1},
                     {slice_gen({1}, GenKind::Cup, 0, 0, {}), slice_gen({}, x, 1, 1, {1}),
                      slice_gen({1}, GenKind::Cap, 0, 0, {})});
    };
    Web id = mkweb(F, {1}, {});
    return {{"over", one(kink(GenKind::XOver)), {{zc_mono(-1, -1), id}}},
            {"under", one(kink(GenKind::XUnder)), {{zc_mono(-1, 1), id}}}};
}

inline std::vector<RelInstance> clasp_reduction() {
    const WebFamily F = WebFamily::CupCap;
    Web l = mkweb(F, {1, 1},
                  {slice_gen({1, 1}, GenKind::Cup, 0, 0, {}),
                   slice_gen({1}, GenKind::XUnder, 1, 1, {1}),
                   slice_gen({}, GenKind::XOver, 1, 1, {1, 1}),
                   slice_gen({1, 1}, GenKind::XUnder, 1, 1, {}),
                   slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                   slice_gen({1, 1}, GenKind::Cap, 0, 0, {})});
    Web r = mkweb(F, {1, 1},
                  {slice_gen({}, GenKind::Cap, 0, 0, {}), slice_gen({}, GenKind::Cup, 0, 0, {})});
    return {{"clasp", one(l), one(r)}};
}

inline std::vector<RelInstance> twisted_cup() {
    const WebFamily F = WebFamily::CupCap;
    Web l1 = mkweb(F, {},
                   {slice_gen({}, GenKind::Cup, 0, 0, {}), slice_gen({}, GenKind::XOver, 1, 1, {})});
    Web r1 = mkweb(F, {}, {slice_gen({}, GenKind::Cup, 0, 0, {})});
    Web l2 = mkweb(F, {1, 1},
                   {slice_gen({}, GenKind::XOver, 1, 1, {}), slice_gen({}, GenKind::Cap, 0, 0, {})});
    Web r2 = mkweb(F, {1, 1}, {slice_gen({}, GenKind::Cap, 0, 0, {})});
    RatFunc mqi(Laurent::monomial(Rat(-1), -1));
    return {{"cup", one(l1), {{zc(mqi), r1}}}, {"cap", one(l2), {{zc(mqi), r2}}}};
}

inline std::vector<RelInstance> crossing_slide() {
    const WebFamily F = WebFamily::CupCap;
    Web l1 = mkweb(F, {1, 1, 1, 1},
                   {slice_gen({}, GenKind::XOver, 1, 1, {1, 1}),
                    slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                    slice_gen({1, 1}, GenKind::Cap, 0, 0, {}),
                    slice_gen({}, GenKind::Cap, 0, 0, {})});
    Web r1 = mkweb(F, {1, 1, 1, 1},
                   {slice_gen({1, 1}, GenKind::XOver, 1, 1, {}),
                    slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                    slice_gen({1, 1}, GenKind::Cap, 0, 0, {}),
                    slice_gen({}, GenKind::Cap, 0, 0, {})});
    Web l2 = mkweb(F, {},
                   {slice_gen({}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1, 1}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                    slice_gen({}, GenKind::XOver, 1, 1, {1, 1})});
    Web r2 = mkweb(F, {},
                   {slice_gen({}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1, 1}, GenKind::Cup, 0, 0, {}),
                    slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                    slice_gen({1, 1}, GenKind::XOver, 1, 1, {})});
    return {{"past cap", one(l1), one(r1)}, {"past cup", one(l2), one(r2)}};
}

inline std::vector<RelInstance> pair_raise_lower_commutator() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::CupCap;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc_one(), ops_web(F, {a, b}, {rpair(), lpair()}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {lpair(), rpair()}));
            add(rhs, zc_bracket(-a - b), ops_web(F, {a, b}, {}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> pair_raise_rung_commute() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::CupCap;
    for (int a = 1; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc_one(), ops_web(F, {a, b}, {rpair(), rg(0, 1)}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rg(0, 1), rpair()}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> pair_raise_thin_form() {
    const WebFamily F = WebFamily::CupCap;
    Web l = mkweb(F, {1},
                  {slice_gen({1}, GenKind::Cup, 0, 0, {}),
                   slice_gen({}, GenKind::XUnder, 1, 1, {1}),
                   slice_gen({1}, GenKind::Merge, 1, 1, {}),
                   slice_gen({1}, GenKind::Split, 1, 1, {}),
                   slice_gen({}, GenKind::Merge, 1, 1, {1})});
    Web r = mkweb(F, {1},
                  {slice_gen({1}, GenKind::Cup, 0, 0, {}),
                   slice_gen({}, GenKind::Merge, 1, 1, {1})});
    return {{"thin", one(l), one(r)}};
}

inline std::vector<RelInstance> pair_raise_left_rung_commute() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::CupCap;
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc_one(), ops_web(F, {a, b}, {rpair(), rg(1, 0)}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rg(1, 0), rpair()}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> pair_raise_rung_serre() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::CupCap;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                FormalCombo lhs, rhs;
                add(lhs, zc(qint(2)), ops_web(F, {a, b, c}, {rpair(), rg(1, 0), rpair()}));
                add(rhs, zc_one(), ops_web(F, {a, b, c}, {rpair(), rpair(), rg(1, 0)}));
                add(rhs, zc_one(), ops_web(F, {a, b, c}, {rg(1, 0), rpair(), rpair()}));
                out.push_back({tagn({a, b, c}), lhs, rhs});
            }
    return out;
}

inline std::vector<RelInstance> rung_pair_raise_serre() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::CupCap;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                FormalCombo lhs, rhs;
                add(lhs, zc(qint(2)), ops_web(F, {a, b, c}, {rg(1, 0), rpair(), rg(1, 0)}));
                add(rhs, zc_one(), ops_web(F, {a, b, c}, {rg(1, 0), rg(1, 0), rpair()}));
                add(rhs, zc_one(), ops_web(F, {a, b, c}, {rpair(), rg(1, 0), rg(1, 0)}));
                out.push_back({tagn({a, b, c}), lhs, rhs});
            }
    return out;
}

// --- dotted family ----------------------------------------------------------

// cup/cap made of a dot and a trivalent vertex, with id strands on the left
inline void dotted_cup(std::vector<Slice>& sl, std::vector<int> left) {
    sl.push_back(slice_gen(left, GenKind::SDot, 0, 0, {}));
    sl.push_back(slice_gen(left, GenKind::Split, 1, 1, {}));
}
inline void dotted_cap(std::vector<Slice>& sl, std::vector<int> left) {
    sl.push_back(slice_gen(left, GenKind::Merge, 1, 1, {}));
    sl.push_back(slice_gen(left, GenKind::EDot, 0, 0, {}));
}

inline std::vector<RelInstance> barbell_removal() {
    const WebFamily F = WebFamily::Dotted;
    Web l = mkweb(F, {},
                  {slice_gen({}, GenKind::SDot, 0, 0, {}), slice_gen({}, GenKind::EDot, 0, 0, {})});
    Web id = mkweb(F, {}, {});
    return {{"barbell", one(l), {{zc_bracket(0, 2), id}}}};
}

inline std::vector<RelInstance> dot_bridge_thin() {
    const WebFamily F = WebFamily::Dotted;
    Web l = mkweb(F, {1},
                  {slice_gen({1}, GenKind::SDot, 0, 0, {}),
                   slice_gen({}, GenKind::Merge, 1, 2, {}),
                   slice_gen({}, GenKind::Split, 1, 2, {}),
                   slice_gen({1}, GenKind::EDot, 0, 0, {})});
    Web id = mkweb(F, {1}, {});
    return {{"thin", one(l), {{zc_bracket(-1, 2), id}}}};
}

inline std::vector<RelInstance> dot_bridge_thick() {
    const WebFamily F = WebFamily::Dotted;
    Web l = mkweb(F, {2},
                  {slice_gen({2}, GenKind::SDot, 0, 0, {}),
                   slice_gen({}, GenKind::Merge, 2, 2, {}),
                   slice_gen({}, GenKind::Split, 2, 2, {}),
                   slice_gen({2}, GenKind::EDot, 0, 0, {})});
    Web de = mkweb(F, {2},
                   {slice_gen({}, GenKind::EDot, 0, 0, {}), slice_gen({}, GenKind::SDot, 0, 0, {})});
    Web id = mkweb(F, {2}, {});
    FormalCombo rhs{{zc_one(), de}, {zc_bracket(-2, 2), id}};
    return {{"thick", one(l), rhs}};
}

inline std::vector<RelInstance> dotted_cup_slide() {
    const WebFamily F = WebFamily::Dotted;
    std::vector<Slice> l1s, r1s;
    dotted_cup(l1s, {});
    dotted_cup(l1s, {1, 1});
    l1s.push_back(slice_gen({}, GenKind::Merge, 1, 1, {1, 1}));
    l1s.push_back(slice_gen({}, GenKind::Split, 1, 1, {1, 1}));
    dotted_cup(r1s, {});
    dotted_cup(r1s, {1, 1});
    r1s.push_back(slice_gen({1, 1}, GenKind::Merge, 1, 1, {}));
    r1s.push_back(slice_gen({1, 1}, GenKind::Split, 1, 1, {}));
    Web l1 = mkweb(F, {}, l1s), r1 = mkweb(F, {}, r1s);
    std::vector<Slice> l2s{slice_gen({1, 1}, GenKind::Merge, 1, 1, {}),
                           slice_gen({1, 1}, GenKind::Split, 1, 1, {})};
    dotted_cap(l2s, {1, 1});
    dotted_cap(l2s, {});
    std::vector<Slice> r2s{slice_gen({}, GenKind::Merge, 1, 1, {1, 1}),
                           slice_gen({}, GenKind::Split, 1, 1, {1, 1})};
    dotted_cap(r2s, {1, 1});
    dotted_cap(r2s, {});
    Web l2 = mkweb(F, {1, 1, 1, 1}, l2s), r2 = mkweb(F, {1, 1, 1, 1}, r2s);
    return {{"under cup", one(l1), one(r1)}, {"under cap", one(l2), one(r2)}};
}

inline std::vector<RelInstance> dot_circle_removal() {
    const WebFamily F = WebFamily::Dotted;
    std::vector<Slice> sl;
    dotted_cup(sl, {});
    dotted_cap(sl, {});
    Web l = mkweb(F, {}, sl);
    Web id = mkweb(F, {}, {});
    return {{"circle", one(l), {{zc_bracket(0, 1), id}}}};
}

inline std::vector<RelInstance> dotted_kink_removal() {
    const WebFamily F = WebFamily::Dotted;
    Web l = mkweb(F, {1},
                  {slice_gen({1}, GenKind::SDot, 0, 0, {}),
                   slice_gen({1}, GenKind::Split, 1, 1, {}),
                   slice_gen({}, GenKind::XOver, 1, 1, {1}),
                   slice_gen({1}, GenKind::Merge, 1, 1, {}),
                   slice_gen({1}, GenKind::EDot, 0, 0, {})});
    Web id = mkweb(F, {1}, {});
    return {{"over", one(l), {{zc_mono(-1, -1), id}}}};
}

inline std::vector<RelInstance> dotted_clasp_reduction() {
    const WebFamily F = WebFamily::Dotted;
    Web l = mkweb(F, {1, 1},
                  {slice_gen({1, 1}, GenKind::SDot, 0, 0, {}),
                   slice_gen({1, 1}, GenKind::Split, 1, 1, {}),
                   slice_gen({1}, GenKind::XUnder, 1, 1, {1}),
                   slice_gen({}, GenKind::XOver, 1, 1, {1, 1}),
                   slice_gen({1, 1}, GenKind::XUnder, 1, 1, {}),
                   slice_gen({1}, GenKind::XOver, 1, 1, {1}),
                   slice_gen({1, 1}, GenKind::Merge, 1, 1, {}),
                   slice_gen({1, 1}, GenKind::EDot, 0, 0, {})});
    std::vector<Slice> rs;
    dotted_cap(rs, {});
    dotted_cup(rs, {});
    Web r = mkweb(F, {1, 1}, rs);
    return {{"clasp", one(l), one(r)}};
}

inline std::vector<RelInstance> dotted_twisted_cup() {
    const WebFamily F = WebFamily::Dotted;
    std::vector<Slice> l1s;
    dotted_cup(l1s, {});
    l1s.push_back(slice_gen({}, GenKind::XOver, 1, 1, {}));
    std::vector<Slice> r1s;
    dotted_cup(r1s, {});
    Web l1 = mkweb(F, {}, l1s), r1 = mkweb(F, {}, r1s);
    std::vector<Slice> l2s{slice_gen({}, GenKind::XOver, 1, 1, {})};
    dotted_cap(l2s, {});
    std::vector<Slice> r2s;
    dotted_cap(r2s, {});
    Web l2 = mkweb(F, {1, 1}, l2s), r2 = mkweb(F, {1, 1}, r2s);
    RatFunc mq(Laurent::q(1));
    return {{"cup", one(l1), {{zc(mq), r1}}}, {"cap", one(l2), {{zc(mq), r2}}}};
}

inline std::vector<RelInstance> dotted_crossing_slide() {
    const WebFamily F = WebFamily::Dotted;
    std::vector<Slice> l1s{slice_gen({}, GenKind::XOver, 1, 1, {1, 1}),
                           slice_gen({1}, GenKind::XOver, 1, 1, {1})};
    dotted_cap(l1s, {1, 1});
    dotted_cap(l1s, {});
    std::vector<Slice> r1s{slice_gen({1, 1}, GenKind::XOver, 1, 1, {}),
                           slice_gen({1}, GenKind::XOver, 1, 1, {1})};
    dotted_cap(r1s, {1, 1});
    dotted_cap(r1s, {});
    Web l1 = mkweb(F, {1, 1, 1, 1}, l1s), r1 = mkweb(F, {1, 1, 1, 1}, r1s);
    std::vector<Slice> l2s, r2s;
    dotted_cup(l2s, {});
    dotted_cup(l2s, {1, 1});
    l2s.push_back(slice_gen({1}, GenKind::XOver, 1, 1, {1}));
    l2s.push_back(slice_gen({}, GenKind::XOver, 1, 1, {1, 1}));
    dotted_cup(r2s, {});
    dotted_cup(r2s, {1, 1});
    r2s.push_back(slice_gen({1}, GenKind::XOver, 1, 1, {1}));
    r2s.push_back(slice_gen({1, 1}, GenKind::XOver, 1, 1, {}));
    Web l2 = mkweb(F, {}, l2s), r2 = mkweb(F, {}, r2s);
    return {{"past cap", one(l1), one(r1)}, {"past cup", one(l2), one(r2)}};
}

inline std::vector<RelInstance> dot_raise_lower_commutator() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Dotted;
    for (int a = 0; a <= 3; ++a) {
        FormalCombo lhs, rhs;
        add(lhs, zc_one(), ops_web(F, {a}, {rtwo(), ltwo()}));
        add(rhs, zc_one(), ops_web(F, {a}, {ltwo(), rtwo()}));
        add(rhs, zc_bracket(-a, 2), ops_web(F, {a}, {}));
        out.push_back({tagn({a}), lhs, rhs});
    }
    return out;
}

inline std::vector<RelInstance> dot_raise_rung_commute() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Dotted;
    for (int a = 1; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc_one(), ops_web(F, {a, b}, {rtwo(), rg(0, 1)}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rg(0, 1), rtwo()}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> dot_raise_serre() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Dotted;
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc_one(), ops_web(F, {a, b}, {rtwo(), rg(1, 0), rg(1, 0), rg(1, 0)}));
            add(lhs, zc(qint(3)), ops_web(F, {a, b}, {rg(1, 0), rg(1, 0), rtwo(), rg(1, 0)}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rg(1, 0), rg(1, 0), rg(1, 0), rtwo()}));
            add(rhs, zc(qint(3)), ops_web(F, {a, b}, {rg(1, 0), rtwo(), rg(1, 0), rg(1, 0)}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> rung_dot_raise_serre() {
    std::vector<RelInstance> out;
    const WebFamily F = WebFamily::Dotted;
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            FormalCombo lhs, rhs;
            add(lhs, zc(qint(2, 2)), ops_web(F, {a, b}, {rtwo(), rg(1, 0), rtwo()}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rtwo(), rtwo(), rg(1, 0)}));
            add(rhs, zc_one(), ops_web(F, {a, b}, {rg(1, 0), rtwo(), rtwo()}));
            out.push_back({tagn({a, b}), lhs, rhs});
        }
    return out;
}

inline std::vector<RelInstance> double_dot_coherence() {
    const WebFamily F = WebFamily::Dotted;
    std::vector<Slice> common{slice_gen({}, GenKind::SDot, 0, 0, {}),
                              slice_gen({2}, GenKind::SDot, 0, 0, {})};
    std::vector<Slice> l1 = common;
    l1.push_back(slice_gen({2}, GenKind::Split, 1, 1, {}));
    l1.push_back(slice_gen({}, GenKind::Merge, 2, 1, {1}));
    l1.push_back(slice_gen({}, GenKind::Split, 1, 2, {1}));
    std::vector<Slice> r1 = common;
    r1.push_back(slice_gen({}, GenKind::Split, 1, 1, {2}));
    r1.push_back(slice_gen({1}, GenKind::Merge, 1, 2, {}));
    r1.push_back(slice_gen({1}, GenKind::Split, 2, 1, {}));
    std::vector<Slice> l2 = common;
    l2.push_back(slice_gen({2}, GenKind::Split, 1, 1, {}));
    l2.push_back(slice_gen({}, GenKind::Merge, 2, 1, {1}));
    l2.push_back(slice_gen({}, GenKind::Split, 1, 2, {1}));
    l2.push_back(slice_gen({1}, GenKind::Merge, 2, 1, {}));
    std::vector<Slice> r2 = common;
    r2.push_back(slice_gen({}, GenKind::Split, 1, 1, {2}));
    r2.push_back(slice_gen({1}, GenKind::Merge, 1, 2, {}));
    return {{"three strand", one(mkweb(F, {}, l1)), one(mkweb(F, {}, r1))},
            {"collapsed", one(mkweb(F, {}, l2)), {{zc(qint(3)), mkweb(F, {}, r2)}}}};
}

inline std::vector<RelInstance> double_dot_merge() {
    const WebFamily F = WebFamily::Dotted;
    Web l = mkweb(F, {},
                  {slice_gen({}, GenKind::SDot, 0, 0, {}),
                   slice_gen({2}, GenKind::SDot, 0, 0, {}),
                   slice_gen({}, GenKind::Merge, 2, 2, {}),
                   slice_gen({}, GenKind::Split, 1, 3, {})});
    Web r = mkweb(F, {},
                  {slice_gen({}, GenKind::SDot, 0, 0, {}),
                   slice_gen({2}, GenKind::SDot, 0, 0, {}),
                   slice_gen({}, GenKind::Split, 1, 1, {2}),
                   slice_gen({1}, GenKind::Merge, 1, 2, {})});
    return {{"merged", one(l), {{zc(qint(2, 2)), r}}}};
}

} // namespace fixtures

inline const std::vector<RelFixture>& relation_catalog() {
    using namespace fixtures;
    static const std::vector<RelFixture> cat{
        {"merge-associativity", WebFamily::Plain, merge_associativity},
        {"split-coassociativity", WebFamily::Plain, split_coassociativity},
        {"rung-commutator", WebFamily::Plain, rung_commutator},
        {"thick-rung-commutator", WebFamily::Plain, thick_rung_commutator},
        {"divided-power-composition", WebFamily::Plain, divided_power_composition},
        {"digon-removal", WebFamily::Plain, digon_removal},
        {"far-rung-commutation", WebFamily::Plain, far_rung_commutation},
        {"adjacent-rung-serre-1-2", WebFamily::Plain, [] { return adjacent_rung_serre(1, 2); }},
        {"adjacent-rung-serre-2-3", WebFamily::Plain, [] { return adjacent_rung_serre(2, 3); }},
        {"thin-rung-serre", WebFamily::Plain, thin_rung_serre},
        {"pitchfork", WebFamily::Plain, pitchfork},
        {"trivalent-twist", WebFamily::Plain, trivalent_twist},
        {"crossing-quadratic", WebFamily::Plain, crossing_quadratic},
        {"braid-relation", WebFamily::Plain, braid_relation},
        {"far-crossing-commutation", WebFamily::Plain, far_crossing_commutation},
        {"circle-removal", WebFamily::CupCap, circle_removal},
        {"bubble-removal", WebFamily::CupCap, bubble_removal},
        {"lasso-move", WebFamily::CupCap, lasso_move},
        {"lollipop-vanishing", WebFamily::CupCap, lollipop_vanishing},
        {"cup-slide", WebFamily::CupCap, cup_slide},
        {"kink-removal", WebFamily::CupCap, kink_removal},
        {"clasp-reduction", WebFamily::CupCap, clasp_reduction},
        {"twisted-cup", WebFamily::CupCap, twisted_cup},
        {"crossing-slide", WebFamily::CupCap, crossing_slide},
        {"pair-raise-lower-commutator", WebFamily::CupCap, pair_raise_lower_commutator},
        {"pair-raise-rung-commute", WebFamily::CupCap, pair_raise_rung_commute},
        {"pair-raise-thin-form", WebFamily::CupCap, pair_raise_thin_form},
        {"pair-raise-left-rung-commute", WebFamily::CupCap, pair_raise_left_rung_commute},
        {"pair-raise-rung-serre", WebFamily::CupCap, pair_raise_rung_serre},
        {"rung-pair-raise-serre", WebFamily::CupCap, rung_pair_raise_serre},
        {"barbell-removal", WebFamily::Dotted, barbell_removal},
        {"dot-bridge-thin", WebFamily::Dotted, dot_bridge_thin},
        {"dot-bridge-thick", WebFamily::Dotted, dot_bridge_thick},
        {"dotted-cup-slide", WebFamily::Dotted, dotted_cup_slide},
        {"dot-circle-removal", WebFamily::Dotted, dot_circle_removal},
        {"dotted-kink-removal", WebFamily::Dotted, dotted_kink_removal},
        {"dotted-clasp-reduction", WebFamily::Dotted, dotted_clasp_reduction},
        {"dotted-twisted-cup", WebFamily::Dotted, dotted_twisted_cup},
        {"dotted-crossing-slide", WebFamily::Dotted, dotted_crossing_slide},
        {"dot-raise-lower-commutator", WebFamily::Dotted, dot_raise_lower_commutator},
        {"dot-raise-rung-commute", WebFamily::Dotted, dot_raise_rung_commute},
        {"dot-raise-serre", WebFamily::Dotted, dot_raise_serre},
        {"rung-dot-raise-serre", WebFamily::Dotted, rung_dot_raise_serre},
    };
    return cat;
}

// Run the whole catalog.  For plain-family fixtures the matrices only depend
// on the functor's flavor (their coefficients never involve z), so each is
// evaluated once per flavor and the verdict replicated across that flavor's
// functors.
inline std::vector<ReportRow> run_catalog(const std::vector<FunctorKind>& functors,
                                          const std::vector<int>& ns, EvalCache& cache,
                                          int64_t budget = column_budget()) {
    std::vector<ReportRow> rows;
    for (const RelFixture& fx : relation_catalog()) {
        std::vector<RelInstance> insts = fx.make();
        for (int n : ns) {
            if (fx.family == WebFamily::Plain) {
                for (Flavor fl : {Flavor::Ext, Flavor::Sym}) {
                    std::vector<FunctorKind> group;
                    for (FunctorKind f : functors)
                        if (functor_flavor(f) == fl && functor_legal(f, n)) group.push_back(f);
                    if (group.empty()) continue;
                    ReportRow r = run_instances(fx.name, insts, group.front(), n, cache, budget);
                    for (FunctorKind f : group) {
                        rows.push_back(r);
                        rows.back().functor = f;
                    }
                }
            } else {
                for (FunctorKind f : functors) {
                    if (functor_family(f) != fx.family || !functor_legal(f, n)) continue;
                    rows.push_back(run_instances(fx.name, insts, f, n, cache, budget));
                }
            }
        }
    }
    return rows;
}

} // namespace qweb
