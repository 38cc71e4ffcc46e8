#pragma once

#include "qweb/ratfunc.hpp"

#include <cstdint>
#include <stdexcept>

namespace qweb {

// Arithmetic mod the Mersenne prime p = 2^61 - 1, used for randomized rank
// computations.  Values are canonical representatives in [0, p).
struct Fp {
    static constexpr uint64_t P = (uint64_t(1) << 61) - 1;

    static uint64_t add(uint64_t a, uint64_t b) {
        uint64_t s = a + b;
        return s >= P ? s - P : s;
    }
    static uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
    static uint64_t neg(uint64_t a) { return a ? P - a : 0; }
    static uint64_t mul(uint64_t a, uint64_t b) {
        unsigned __int128 t = (unsigned __int128)a * b;
        uint64_t lo = uint64_t(t & P), hi = uint64_t(t >> 61);
        uint64_t s = lo + hi;
        return s >= P ? s - P : s;
    }
    static uint64_t pow(uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    static uint64_t inv(uint64_t a) {
        if (a == 0) throw std::domain_error("inverse of zero mod p");
        return pow(a, P - 2);
    }

    // Reduce a big rational mod p.  Throws if the denominator vanishes mod p
    // (practically impossible for the denominators that occur here).
    static uint64_t from_rat(const Rat& r) {
        auto red = [](Int v) {
            Int m = v % Int(P);
            if (m < 0) m += Int(P);
            return uint64_t(m);
        };
        uint64_t n = red(rat_num(r)), d = red(rat_den(r));
        return mul(n, inv(d));
    }
};

// Raised when a specialization point q0 kills a denominator; callers resample.
struct DenominatorVanishes : std::runtime_error {
    DenominatorVanishes() : std::runtime_error("denominator vanishes at specialization point") {}
};

// Evaluate a Laurent polynomial at q = q0 in F_p (q0 must be nonzero).
inline uint64_t eval_fp(const Laurent& p, uint64_t q0) {
    if (p.is_zero()) return 0;
    // Horner from the top, then multiply by q0^lo.
    uint64_t acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = Fp::add(Fp::mul(acc, q0), Fp::from_rat(*it));
    int lo = p.lo();
    uint64_t shift = lo >= 0 ? Fp::pow(q0, uint64_t(lo)) : Fp::inv(Fp::pow(q0, uint64_t(-lo)));
    return Fp::mul(acc, shift);
}

inline uint64_t eval_fp(const RatFunc& f, uint64_t q0) {
    if (f.is_zero()) return 0;
    uint64_t n = eval_fp(f.num(), q0);
    if (f.is_laurent()) return n;
    uint64_t d = eval_fp(f.den(), q0);
    if (d == 0) throw DenominatorVanishes();
    return Fp::mul(n, Fp::inv(d));
}

} // namespace qweb
