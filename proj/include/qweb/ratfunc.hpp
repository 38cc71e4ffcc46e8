#pragma once

#include "qweb/laurent.hpp"

namespace qweb {

// Element of the field of rational functions in q, kept in a canonical
// reduced form: gcd(num, den) = 1, den has lowest exponent 0 and lowest
// coefficient 1 (so structural equality is semantic equality).
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Laurent& p) : num_(p), den_(Rat(1)) {}
    RatFunc(const Rat& r) : num_(r), den_(Rat(1)) {}
    RatFunc(long n) : RatFunc(Rat(n)) {}
    RatFunc(int n) : RatFunc(Rat(n)) {}
    RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("ratfunc with zero denominator");
        reduce();
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // Throws unless the denominator is trivial.
    const Laurent& as_laurent() const {
        if (!is_laurent()) throw std::domain_error("ratfunc is not a laurent polynomial");
        return num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ + b.num_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("ratfunc division by zero");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
    RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc bar() const {
        if (is_zero()) return RatFunc();
        return RatFunc(num_.bar(), den_.bar());
    }

    RatFunc pow(int e) const {
        if (e < 0) return RatFunc(Laurent(Rat(1))) / pow(-e);
        RatFunc r(Rat(1)), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) { den_ = Laurent(Rat(1)); return; }
        if (den_.is_monomial()) {
            num_ = divexact(num_, den_);
            den_ = Laurent(Rat(1));
            return;
        }
        Laurent g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        if (den_.is_monomial()) {
            num_ = divexact(num_, den_);
            den_ = Laurent(Rat(1));
            return;
        }
        // pin the remaining denominator: lowest exponent 0, lowest coefficient 1
        int shift = den_.lo();
        Rat scale = Rat(1) / den_.coeff(shift);
        den_ = scale * den_.shifted(-shift);
        num_ = scale * num_.shifted(-shift);
    }

    Laurent num_;
    Laurent den_ = Laurent(Rat(1));
};

} // namespace qweb
