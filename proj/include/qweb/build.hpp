#pragma once

#include "qweb/web.hpp"

#include <cassert>

namespace qweb {

// ---------------------------------------------------------------------------
// Incremental web construction over a fixed set of "slots".
//
// A slot is a strand position whose label is allowed to be zero; zero-labelled
// slots are elided from the emitted slices, so parametrized gadgets (ladder
// rungs, cup/cap raising operators, ...) can be written once and the
// degenerate shapes at the boundary of the label range come out right.  If an
// operation would need a negative label the builder goes dead: the web under
// construction stands for the zero morphism and should be dropped by the
// caller.
// ---------------------------------------------------------------------------
class WebBuilder {
public:
    WebBuilder(WebFamily fam, std::vector<int> labels)
        : cur_(std::move(labels)) {
        w_.family = fam;
        w_.source = phys_all();
    }

    bool dead() const { return dead_; }
    const std::vector<int>& labels() const { return cur_; }
    int slots() const { return int(cur_.size()); }

    // The built web; only meaningful while not dead.
    const Web& web() const {
        assert(!dead_);
        return w_;
    }

    // Move t boxes from slot `from` onto the adjacent slot `to` through a
    // single rung (split off t, then merge).  t == 1 is a thin ladder rung,
    // larger t a thick one (divided power).
    void rung(int from, int to, int t = 1) {
        assert(from >= 0 && from < slots() && to >= 0 && to < slots());
        assert(from - to == 1 || to - from == 1);
        if (dead_ || t == 0) return;
        if (cur_[size_t(from)] < t) { dead_ = true; return; }
        int b = cur_[size_t(from)], a = cur_[size_t(to)];
        if (from == to + 1) { // donate leftwards
            if (b - t > 0)
                slice(prefix(to + 1), GenKind::Split, t, b - t, suffix(from + 1));
            if (a > 0)
                slice(prefix(to), GenKind::Merge, a, t, cat(pos(b - t), suffix(from + 1)));
        } else { // donate rightwards
            if (b - t > 0)
                slice(prefix(from), GenKind::Split, b - t, t, cat(pos(a), suffix(to + 1)));
            if (a > 0)
                slice(cat(prefix(from), pos(b - t)), GenKind::Merge, t, a, suffix(to + 1));
        }
        cur_[size_t(from)] -= t;
        cur_[size_t(to)] += t;
    }

    // Cup-based raising gadget on the last two slots: (a,b) -> (a+1,b+1).
    // A cup is created at the far right; its left leg crosses over the last
    // strand and merges into the second-to-last one.
    void raise_pair() {
        assert(slots() >= 2);
        if (dead_) return;
        int k = slots() - 1;
        int a = cur_[size_t(k - 1)], b = cur_[size_t(k)];
        std::vector<int> p = prefix(k - 1);
        if (a > 0 && b > 0) {
            slice(cat(p, {a, b}), GenKind::Cup, 0, 0, {});
            slice(cat(p, {a}), GenKind::XUnder, b, 1, {1});
            slice(p, GenKind::Merge, a, 1, {b, 1});
            slice(cat(p, {a + 1}), GenKind::Merge, b, 1, {});
        } else if (a == 0 && b > 0) {
            slice(cat(p, {b}), GenKind::Cup, 0, 0, {});
            slice(p, GenKind::XUnder, b, 1, {1});
            slice(cat(p, {1}), GenKind::Merge, b, 1, {});
        } else if (a > 0) {
            slice(cat(p, {a}), GenKind::Cup, 0, 0, {});
            slice(p, GenKind::Merge, a, 1, {1});
        } else {
            slice(p, GenKind::Cup, 0, 0, {});
        }
        cur_[size_t(k - 1)] += 1;
        cur_[size_t(k)] += 1;
    }

    // Mirror gadget (flip of raise_pair at the lowered labels): (a,b) -> (a-1,b-1).
    void lower_pair() {
        assert(slots() >= 2);
        if (dead_) return;
        int k = slots() - 1;
        int a = cur_[size_t(k - 1)], b = cur_[size_t(k)];
        if (a == 0 || b == 0) { dead_ = true; return; }
        std::vector<int> p = prefix(k - 1);
        if (b > 1)
            slice(cat(p, {a}), GenKind::Split, b - 1, 1, {});
        if (a > 1)
            slice(p, GenKind::Split, a - 1, 1, cat(pos(b - 1), {1}));
        if (b > 1)
            slice(cat(p, pos(a - 1)), GenKind::XOver, 1, b - 1, {1});
        slice(cat(p, pos(a - 1), pos(b - 1)), GenKind::Cap, 0, 0, {});
        cur_[size_t(k - 1)] -= 1;
        cur_[size_t(k)] -= 1;
    }

    // Dot-based raising gadget on the last slot: c -> c+2.
    void raise_two() {
        assert(slots() >= 1);
        if (dead_) return;
        int k = slots() - 1;
        int c = cur_[size_t(k)];
        std::vector<int> p = prefix(k);
        if (c > 0) {
            slice(cat(p, {c}), GenKind::SDot, 0, 0, {});
            slice(p, GenKind::Merge, c, 2, {});
        } else {
            slice(p, GenKind::SDot, 0, 0, {});
        }
        cur_[size_t(k)] += 2;
    }

    // Mirror gadget: c -> c-2 (dead below 2).
    void lower_two() {
        assert(slots() >= 1);
        if (dead_) return;
        int k = slots() - 1;
        int c = cur_[size_t(k)];
        if (c < 2) { dead_ = true; return; }
        std::vector<int> p = prefix(k);
        if (c > 2)
            slice(p, GenKind::Split, c - 2, 2, {});
        slice(cat(p, pos(c - 2)), GenKind::EDot, 0, 0, {});
        cur_[size_t(k)] -= 2;
    }

private:
    static std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    static std::vector<int> cat(std::vector<int> a, const std::vector<int>& b,
                                const std::vector<int>& c) {
        return cat(cat(std::move(a), b), c);
    }
    static std::vector<int> pos(int x) {
        return x > 0 ? std::vector<int>{x} : std::vector<int>{};
    }
    std::vector<int> phys_all() const { return phys(0, slots()); }
    std::vector<int> prefix(int end) const { return phys(0, end); }
    std::vector<int> suffix(int begin) const { return phys(begin, slots()); }
    std::vector<int> phys(int begin, int end) const {
        std::vector<int> out;
        for (int s = begin; s < end; ++s)
            if (cur_[size_t(s)] > 0) out.push_back(cur_[size_t(s)]);
        return out;
    }
    void slice(std::vector<int> l, GenKind k, int a, int b, std::vector<int> r) {
        w_.slices.push_back(slice_gen(std::move(l), k, a, b, std::move(r)));
    }

    Web w_;
    std::vector<int> cur_;
    bool dead_ = false;
};

} // namespace qweb
