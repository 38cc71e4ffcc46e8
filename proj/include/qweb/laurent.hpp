#pragma once

#include "qweb/rational.hpp"

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qweb {

// Laurent polynomial in one variable q with rational coefficients.
// Stored densely from the lowest exponent `lo`: coeff of q^(lo+i) is c[i].
// Invariant: c is empty (the zero polynomial) or c.front()!=0 && c.back()!=0.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rat& r) {
        if (r != 0) { lo_ = 0; c_ = {r}; }
    }
    Laurent(long n) : Laurent(Rat(n)) {}
    Laurent(int n) : Laurent(Rat(n)) {}

    static Laurent monomial(const Rat& coeff, int exp) {
        Laurent p;
        if (coeff != 0) { p.lo_ = exp; p.c_ = {coeff}; }
        return p;
    }
    static Laurent q(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return c_.empty(); }
    int lo() const { assert(!c_.empty()); return lo_; }
    int hi() const { assert(!c_.empty()); return lo_ + int(c_.size()) - 1; }
    int num_terms() const {
        int n = 0;
        for (const Rat& x : c_) if (x != 0) ++n;
        return n;
    }

    Rat coeff(int exp) const {
        if (c_.empty() || exp < lo_ || exp > hi()) return Rat(0);
        return c_[size_t(exp - lo_)];
    }

    // True iff the polynomial is a single monomial c*q^k.
    bool is_monomial() const { return c_.size() == 1; }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::max(a.hi(), b.hi());
        std::vector<Rat> c(size_t(hi - lo + 1), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[size_t(a.lo_ - lo) + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[size_t(b.lo_ - lo) + i] += b.c_[i];
        return from_raw(lo, std::move(c));
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    Laurent operator-() const {
        Laurent r = *this;
        for (Rat& x : r.c_) x = -x;
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return from_raw(a.lo_ + b.lo_, std::move(c));
    }

    friend Laurent operator*(const Rat& s, const Laurent& a) {
        if (s == 0) return Laurent();
        Laurent r = a;
        for (Rat& x : r.c_) x *= s;
        return r;
    }

    Laurent& operator+=(const Laurent& b) { *this = *this + b; return *this; }
    Laurent& operator-=(const Laurent& b) { *this = *this - b; return *this; }
    Laurent& operator*=(const Laurent& b) { *this = *this * b; return *this; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_ || (a.is_zero() && b.is_zero());
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(int e) const {
        assert(e >= 0);
        Laurent r(Rat(1)), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // Substitution q -> q^(-1) (the bar involution on scalars).
    Laurent bar() const {
        if (is_zero()) return Laurent();
        Laurent r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.lo_ = -hi();
        return r;
    }

    // Multiply by q^k.
    Laurent shifted(int k) const {
        Laurent r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }

    // Evaluation at q = 1.
    Rat at_one() const {
        Rat s(0);
        for (const Rat& x : c_) s += x;
        return s;
    }

    // Exact division; throws if the remainder is nonzero.
    friend Laurent divexact(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::domain_error("laurent division by zero");
        if (a.is_zero()) return Laurent();
        if (b.is_monomial())
            return Laurent::monomial(Rat(1) / b.c_[0], -b.lo_) * a;
        auto [quo, rem] = divmod_poly(a.c_, b.c_);
        if (!rem.empty()) throw std::domain_error("laurent division not exact");
        return from_raw(a.lo_ - b.lo_, std::move(quo));
    }

    // Monic gcd of the underlying polynomials (exponent shifts are units here,
    // so the result is pinned to lowest exponent 0).
    friend Laurent laurent_gcd(Laurent a, Laurent b) {
        if (a.is_zero()) return b.unit_normalized();
        if (b.is_zero()) return a.unit_normalized();
        std::vector<Rat> x = a.c_, y = b.c_;
        while (!y.empty()) {
            auto [quo, rem] = divmod_poly(x, y);
            (void)quo;
            x = std::move(y);
            y = std::move(rem);
        }
        Laurent g = from_raw(0, std::move(x));
        return g.unit_normalized();
    }

    // Divide out the unit part: shift to lo = 0 and scale so the lowest
    // coefficient is exactly 1. Used to put gcds/denominators in a canonical form.
    Laurent unit_normalized() const {
        if (is_zero()) return Laurent();
        Laurent r = *this;
        r.lo_ = 0;
        Rat inv = Rat(1) / r.c_[0];
        if (inv != 1)
            for (Rat& x : r.c_) x *= inv;
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int e = hi(); e >= lo_; --e) {
            Rat co = coeff(e);
            if (co == 0) continue;
            if (!first) out << (co > 0 ? " + " : " - ");
            else if (co < 0) out << "-";
            first = false;
            Rat a = co > 0 ? co : Rat(-co);
            if (a != 1 || e == 0) out << a.str();
            if (e != 0) {
                if (a != 1) out << "*";
                out << "q";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

    const std::vector<Rat>& coeffs() const { return c_; }

private:
    static Laurent from_raw(int lo, std::vector<Rat> c) {
        size_t b = 0, e = c.size();
        while (b < e && c[b] == 0) ++b;
        while (e > b && c[e - 1] == 0) --e;
        Laurent p;
        if (b < e) {
            p.lo_ = lo + int(b);
            p.c_.assign(c.begin() + long(b), c.begin() + long(e));
        }
        return p;
    }

    // Ordinary polynomial divmod on coefficient vectors (index = exponent).
    static std::pair<std::vector<Rat>, std::vector<Rat>>
    divmod_poly(std::vector<Rat> a, const std::vector<Rat>& b) {
        assert(!b.empty() && b.back() != 0);
        // strip leading zeros of a
        while (!a.empty() && a.back() == 0) a.pop_back();
        std::vector<Rat> quo;
        if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, Rat(0));
        while (a.size() >= b.size() && !a.empty()) {
            Rat f = a.back() / b.back();
            size_t shift = a.size() - b.size();
            quo[shift] = f;
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return {std::move(quo), std::move(a)};
    }

    int lo_ = 0;
    std::vector<Rat> c_;
};

} // namespace qweb
