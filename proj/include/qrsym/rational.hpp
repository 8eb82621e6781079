#ifndef QRSYM_RATIONAL_HPP
#define QRSYM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qrsym/errors.hpp"

namespace qrsym {

// Arbitrary-precision rational scalar. Canonical form is maintained by GMP:
// gcd(|num|, den) = 1 and den >= 1, zero is 0/1. Equality is therefore a
// syntactic check.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                      // NOLINT: implicit by design
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw ZeroDenominator();
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional sign; exact decimal digits only.
    static Rational from_string(std::string_view s) {
        try {
            mpq_class v(std::string(s), 10);
            if (v.get_den() == 0) throw ZeroDenominator();
            v.canonicalize();
            Rational r;
            r.v_ = v;
            return r;
        } catch (const std::invalid_argument&) {
            throw BadInput("not a rational: '" + std::string(s) + "'");
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonnegative() const { return v_ >= 0; }
    int sign() const { return sgn(v_); }

    // Value as long, only valid when is_integer() and it fits.
    long to_long() const { return mpz_get_si(v_.get_num().get_mpz_t()); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ZeroDenominator();
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const {
        if (is_zero()) throw ZeroDenominator();
        return Rational(mpq_class(1 / v_));
    }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational square() const { return *this * *this; }

    Rational pow(unsigned e) const {
        Rational r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    // Canonical string: "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

  private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace qrsym

#endif
