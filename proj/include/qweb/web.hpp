#pragma once

#include "qweb/basis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qweb {

// The three diagram families: plain (merge/split/crossings only), cupcap
// (adds thin cups and caps), dotted (adds 2-labelled start/end dots).
enum class WebFamily { Plain, CupCap, Dotted };

inline std::string family_name(WebFamily f) {
    switch (f) {
        case WebFamily::Plain: return "A";
        case WebFamily::CupCap: return "BD";
        case WebFamily::Dotted: return "C";
    }
    return "?";
}

enum class GenKind { Merge, Split, XOver, XUnder, Cup, Cap, SDot, EDot };

inline bool gen_has_args(GenKind k) {
    return k == GenKind::Merge || k == GenKind::Split || k == GenKind::XOver ||
           k == GenKind::XUnder;
}

// One horizontal slice: identity strands on the left, a single generator,
// identity strands on the right.
struct Slice {
    std::vector<int> left;
    GenKind kind = GenKind::Merge;
    int a = 0, b = 0;
    std::vector<int> right;

    std::vector<int> gen_source() const {
        switch (kind) {
            case GenKind::Merge: return {a, b};
            case GenKind::Split: return {a + b};
            case GenKind::XOver:
            case GenKind::XUnder: return {a, b};
            case GenKind::Cup: return {};
            case GenKind::Cap: return {1, 1};
            case GenKind::SDot: return {};
            case GenKind::EDot: return {2};
        }
        return {};
    }
    std::vector<int> gen_target() const {
        switch (kind) {
            case GenKind::Merge: return {a + b};
            case GenKind::Split: return {a, b};
            case GenKind::XOver:
            case GenKind::XUnder: return {b, a};
            case GenKind::Cup: return {1, 1};
            case GenKind::Cap: return {};
            case GenKind::SDot: return {2};
            case GenKind::EDot: return {};
        }
        return {};
    }

    std::vector<int> source() const {
        std::vector<int> s = left;
        auto g = gen_source();
        s.insert(s.end(), g.begin(), g.end());
        s.insert(s.end(), right.begin(), right.end());
        return s;
    }
    std::vector<int> target() const {
        std::vector<int> s = left;
        auto g = gen_target();
        s.insert(s.end(), g.begin(), g.end());
        s.insert(s.end(), right.begin(), right.end());
        return s;
    }
};

struct WebError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cup/cap/dot with strands on its right: structurally well-formed but illegal.
struct PlacementError : WebError {
    using WebError::WebError;
};

// A web diagram, read bottom to top as a composition of slices.
struct Web {
    WebFamily family = WebFamily::Plain;
    std::vector<int> source;
    std::vector<Slice> slices;

    std::vector<int> target() const {
        return slices.empty() ? source : slices.back().target();
    }

    // Structural validation: slices must compose, labels must be positive,
    // family-specific generators must match, and boundary generators
    // (cup/cap/dots) may not have strands to their right.
    void validate() const {
        std::vector<int> cur = source;
        for (int x : source)
            if (x <= 0) throw WebError("web source has a non-positive label");
        for (size_t t = 0; t < slices.size(); ++t) {
            const Slice& sl = slices[t];
            auto where = [&] { return " in slice " + std::to_string(t + 1); };
            for (int x : sl.left)
                if (x <= 0) throw WebError("non-positive identity label" + where());
            for (int x : sl.right)
                if (x <= 0) throw WebError("non-positive identity label" + where());
            if (gen_has_args(sl.kind) && (sl.a <= 0 || sl.b <= 0))
                throw WebError("non-positive generator label" + where());
            bool boundary = sl.kind == GenKind::Cup || sl.kind == GenKind::Cap ||
                            sl.kind == GenKind::SDot || sl.kind == GenKind::EDot;
            if (boundary && !sl.right.empty())
                throw PlacementError("boundary generator with strands to its right" + where());
            if ((sl.kind == GenKind::Cup || sl.kind == GenKind::Cap) &&
                family != WebFamily::CupCap)
                throw WebError("cup/cap outside the cupcap family" + where());
            if ((sl.kind == GenKind::SDot || sl.kind == GenKind::EDot) &&
                family != WebFamily::Dotted)
                throw WebError("dot generator outside the dotted family" + where());
            if (sl.source() != cur)
                throw WebError("slice does not compose with the web below it" + where());
            cur = sl.target();
        }
    }

    // Vertical flip (the contravariant involution): reverse the slice order
    // and dualize every generator.
    Web flipped() const {
        Web w;
        w.family = family;
        w.source = target();
        for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
            Slice s;
            s.left = it->left;
            s.right = it->right;
            switch (it->kind) {
                case GenKind::Merge: s.kind = GenKind::Split; s.a = it->a; s.b = it->b; break;
                case GenKind::Split: s.kind = GenKind::Merge; s.a = it->a; s.b = it->b; break;
                case GenKind::XOver: s.kind = GenKind::XUnder; s.a = it->b; s.b = it->a; break;
                case GenKind::XUnder: s.kind = GenKind::XOver; s.a = it->b; s.b = it->a; break;
                case GenKind::Cup: s.kind = GenKind::Cap; break;
                case GenKind::Cap: s.kind = GenKind::Cup; break;
                case GenKind::SDot: s.kind = GenKind::EDot; break;
                case GenKind::EDot: s.kind = GenKind::SDot; break;
            }
            w.slices.push_back(std::move(s));
        }
        return w;
    }

    // Crossing-reversal (the bar-symmetry companion on diagrams).
    Web crossings_flipped() const {
        Web w = *this;
        for (Slice& s : w.slices) {
            if (s.kind == GenKind::XOver) s.kind = GenKind::XUnder;
            else if (s.kind == GenKind::XUnder) s.kind = GenKind::XOver;
        }
        return w;
    }
};

// Small builder helpers used all over the fixture catalog.
inline Slice slice_gen(std::vector<int> left, GenKind k, int a, int b, std::vector<int> right) {
    Slice s;
    s.left = std::move(left);
    s.kind = k;
    s.a = a;
    s.b = b;
    s.right = std::move(right);
    return s;
}
inline Slice slice_boundary(std::vector<int> left, GenKind k) {
    Slice s;
    s.left = std::move(left);
    s.kind = k;
    return s;
}

} // namespace qweb
