#pragma once

#include "qweb/web.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace qweb {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline int parse_label(const std::string& t, int lineno) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + t + "'");
    }
    if (pos != t.size())
        throw ParseError("line " + std::to_string(lineno) + ": trailing junk in '" + t + "'");
    if (v <= 0)
        throw ParseError("line " + std::to_string(lineno) + ": labels must be positive, got " + t);
    return v;
}

inline std::vector<int> parse_id_segment(const std::vector<std::string>& toks, int lineno) {
    if (toks.empty() || toks[0] != "id")
        throw ParseError("line " + std::to_string(lineno) + ": identity segment must start with 'id'");
    std::vector<int> out;
    for (size_t i = 1; i < toks.size(); ++i) out.push_back(parse_label(toks[i], lineno));
    return out;
}

} // namespace detail

// Text format, one statement per line or ';'-separated ('#' starts a comment):
//   family A|BD|C
//   source <label>*        (or 'source ∅' for the empty boundary)
//   <id segment> | <generator> | <id segment>     (one statement per slice)
// Identity segments are the keyword 'id' followed by zero or more labels; a
// bare generator statement means empty padding on both sides.
// Generators: merge a b, split a b, xover a b, xunder a b, cup, cap, sdot, edot.
inline Web parse_web(const std::string& text) {
    std::istringstream in(text);
    std::string phys;
    std::vector<std::pair<int, std::string>> stmts;
    int lineno = 0;
    while (std::getline(in, phys)) {
        ++lineno;
        if (auto h = phys.find('#'); h != std::string::npos) phys.erase(h);
        std::string cur;
        for (char c : phys) {
            if (c == ';') {
                stmts.emplace_back(lineno, cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        stmts.emplace_back(lineno, cur);
    }
    Web w;
    bool seen_family = false, seen_source = false;
    for (const auto& [ln, stmt] : stmts) {
        const int lno = ln;
        auto bars_split = [&] {
            std::vector<std::string> segs;
            std::string cur;
            for (char c : stmt) {
                if (c == '|') {
                    segs.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            segs.push_back(cur);
            return segs;
        };
        auto toks = detail::tokens_of(stmt);
        if (toks.empty()) continue;
        if (!seen_family) {
            if (toks[0] != "family" || toks.size() != 2)
                throw ParseError("line " + std::to_string(lno) + ": expected 'family A|BD|C'");
            if (toks[1] == "A") w.family = WebFamily::Plain;
            else if (toks[1] == "BD") w.family = WebFamily::CupCap;
            else if (toks[1] == "C") w.family = WebFamily::Dotted;
            else throw ParseError("line " + std::to_string(lno) + ": unknown family '" + toks[1] + "'");
            seen_family = true;
            continue;
        }
        if (!seen_source) {
            if (toks[0] != "source")
                throw ParseError("line " + std::to_string(lno) + ": expected 'source <labels>'");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i] == "∅") continue; // explicit empty-boundary marker
                w.source.push_back(detail::parse_label(toks[i], lno));
            }
            seen_source = true;
            continue;
        }
        auto segs = bars_split();
        Slice s;
        std::vector<std::string> g;
        if (segs.size() == 1) {
            g = toks; // bare generator, no padding
        } else if (segs.size() == 3) {
            s.left = detail::parse_id_segment(detail::tokens_of(segs[0]), lno);
            s.right = detail::parse_id_segment(detail::tokens_of(segs[2]), lno);
            g = detail::tokens_of(segs[1]);
        } else {
            throw ParseError("line " + std::to_string(lno) +
                             ": a slice needs exactly two '|' separators or none");
        }
        const int lineno = lno;
        if (g.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty generator segment");
        auto need_args = [&](GenKind k) {
            if (g.size() != 3)
                throw ParseError("line " + std::to_string(lineno) + ": '" + g[0] +
                                 "' takes exactly two labels");
            s.kind = k;
            s.a = detail::parse_label(g[1], lineno);
            s.b = detail::parse_label(g[2], lineno);
        };
        auto need_bare = [&](GenKind k) {
            if (g.size() != 1)
                throw ParseError("line " + std::to_string(lineno) + ": '" + g[0] +
                                 "' takes no labels");
            s.kind = k;
        };
        if (g[0] == "merge") need_args(GenKind::Merge);
        else if (g[0] == "split") need_args(GenKind::Split);
        else if (g[0] == "xover") need_args(GenKind::XOver);
        else if (g[0] == "xunder") need_args(GenKind::XUnder);
        else if (g[0] == "cup") need_bare(GenKind::Cup);
        else if (g[0] == "cap") need_bare(GenKind::Cap);
        else if (g[0] == "sdot") need_bare(GenKind::SDot);
        else if (g[0] == "edot") need_bare(GenKind::EDot);
        else throw ParseError("line " + std::to_string(lineno) + ": unknown generator '" + g[0] + "'");
        w.slices.push_back(std::move(s));
    }
    if (!seen_family) throw ParseError("missing 'family' line");
    if (!seen_source) throw ParseError("missing 'source' line");
    w.validate();
    return w;
}

inline std::string gen_name(GenKind k) {
    switch (k) {
        case GenKind::Merge: return "merge";
        case GenKind::Split: return "split";
        case GenKind::XOver: return "xover";
        case GenKind::XUnder: return "xunder";
        case GenKind::Cup: return "cup";
        case GenKind::Cap: return "cap";
        case GenKind::SDot: return "sdot";
        case GenKind::EDot: return "edot";
    }
    return "?";
}

inline std::string serialize_web(const Web& w) {
    std::ostringstream out;
    out << "family " << family_name(w.family) << "\n";
    out << "source";
    for (int x : w.source) out << ' ' << x;
    out << "\n";
    auto id_seg = [](const std::vector<int>& labels) {
        std::string s = "id";
        for (int x : labels) s += ' ' + std::to_string(x);
        return s;
    };
    for (const Slice& s : w.slices) {
        out << id_seg(s.left) << " | " << gen_name(s.kind);
        if (gen_has_args(s.kind)) out << ' ' << s.a << ' ' << s.b;
        out << " | " << id_seg(s.right) << "\n";
    }
    return out.str();
}

} // namespace qweb
