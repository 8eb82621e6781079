#ifndef QRSYM_RATFUNC_HPP
#define QRSYM_RATFUNC_HPP

#include <string>
#include <utility>

#include "qrsym/errors.hpp"
#include "qrsym/poly.hpp"

namespace qrsym {

// Reduced rational function over a field K: gcd(num, den) = 1, den monic with
// the scalar content absorbed into the numerator. Zero is 0/1, so equality is
// syntactic.
template <class K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
    explicit RatFunc(K c) : num_(std::move(c)), den_(1) {}
    explicit RatFunc(Poly<K> p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw ZeroDenominator();
        normalize();
    }

    static RatFunc var() { return RatFunc(Poly<K>::var()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == Poly<K>(1); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const { return raw(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw ZeroDenominator();
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    RatFunc inv() const {
        if (is_zero()) throw ZeroDenominator();
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw PoleAtPoint(x.str());
        return num_.eval(x) * d.inv();
    }

    // f(x + s), exact.
    RatFunc shift(const K& s) const { return RatFunc(num_.shift(s), den_.shift(s)); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Value as the argument grows without bound: 0 when the numerator degree
    // is smaller, the ratio of leading coefficients when equal.
    K limit_at_infinity() const {
        if (is_zero()) return K(0);
        if (num_.degree() > den_.degree()) throw DivergentLimit();
        if (num_.degree() < den_.degree()) return K(0);
        return num_.lead() * den_.lead().inv();
    }

    // den-degree minus num-degree; large positive value for the zero function.
    int degree_drop() const {
        if (is_zero()) return 1 << 20;
        return den_.degree() - num_.degree();
    }

    std::string str(const std::string& var) const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    static RatFunc raw(Poly<K> n, Poly<K> d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>(1);
            return;
        }
        if (den_.degree() > 0) {
            Poly<K> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        K lc = den_.lead();
        if (!(lc == K(1))) {
            K il = lc.inv();
            num_ = num_ * il;
            den_ = den_ * il;
        }
    }

    Poly<K> num_, den_;
};

// Product that reports the factor removed by reduction. The removed factor is
// where a reduced composite symbol can silently cross a removable singularity
// of the true operator composition.
template <class K>
RatFunc<K> mul_tracked(const RatFunc<K>& a, const RatFunc<K>& b, Poly<K>* cancelled) {
    Poly<K> n = a.num() * b.num();
    Poly<K> d = a.den() * b.den();
    if (d.degree() == 0) {
        if (cancelled) *cancelled = Poly<K>(1);
        return RatFunc<K>(std::move(n), std::move(d));
    }
    Poly<K> g = gcd(n, d);
    if (cancelled) *cancelled = g;
    return RatFunc<K>(std::move(n), std::move(d));
}

} // namespace qrsym

#endif
