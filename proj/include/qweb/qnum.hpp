#pragma once

#include "qweb/ratfunc.hpp"

namespace qweb {

// Quantum integer [s] in base q^d:  (q^(ds) - q^(-ds)) / (q^d - q^(-d)).
// [0] = 0 and [-s] = -[s].
inline Laurent qint(int s, int d = 1) {
    if (s == 0) return Laurent();
    if (s < 0) return -qint(-s, d);
    Laurent p;
    for (int t = 0; t < s; ++t) p += Laurent::q(d * (s - 1 - 2 * t));
    return p;
}

inline Laurent qfact(int s, int d = 1) {
    assert(s >= 0);
    Laurent p(Rat(1));
    for (int t = 2; t <= s; ++t) p *= qint(t, d);
    return p;
}

// Quantum binomial [s choose t] in base q^d, via the product formula
// prod_{u=1..t} [s-u+1]/[u].  Defined for any integer s (including s < 0);
// the result is always a Laurent polynomial.
inline Laurent qbinom(int s, int t, int d = 1) {
    if (t < 0) return Laurent();
    RatFunc r(Rat(1));
    for (int u = 1; u <= t; ++u) {
        Laurent top = qint(s - u + 1, d);
        if (top.is_zero()) return Laurent();
        r *= RatFunc(top, qint(u, d));
    }
    return r.as_laurent();
}

// The parameter z is never treated symbolically: it is specialized to a
// signed power of q.  sign is +1 or -1, z = sign * q^pow.
struct ZSpec {
    int sign = 1;
    int pow = 0;

    static ZSpec plus_q(int n) { return {1, n}; }
    static ZSpec minus_q_inv(int n) { return {-1, -n}; }

    friend bool operator==(const ZSpec&, const ZSpec&) = default;
};

// z as a (monomial) rational function.
inline RatFunc zvalue(const ZSpec& z) {
    return RatFunc(Laurent::monomial(Rat(z.sign), z.pow));
}

// [z; a]_d = (z q_d^a - z^{-1} q_d^{-a}) / (q_d - q_d^{-1})  with q_d = q^d.
// Since z^{-1} = sign * q^{-pow}, the numerator is
// sign * (q^(pow+da) - q^(-pow-da)).  For d | (pow+da) this collapses to a
// quantum integer; otherwise it stays an honest rational function.
inline RatFunc zbracket(const ZSpec& z, int a, int d = 1) {
    int m = z.pow + d * a;
    Laurent num = Laurent::monomial(Rat(z.sign), m) - Laurent::monomial(Rat(z.sign), -m);
    return RatFunc(num, Laurent::q(d) - Laurent::q(-d));
}

// The angle bracket used alongside 2-labelled dots: <z; a> = [z; a]_2.
inline RatFunc zbracket2(const ZSpec& z, int a) { return zbracket(z, a, 2); }

} // namespace qweb
