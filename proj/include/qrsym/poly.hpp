#ifndef QRSYM_POLY_HPP
#define QRSYM_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qrsym/errors.hpp"
#include "qrsym/rational.hpp"

namespace qrsym {

// Dense univariate polynomial over a field K. Coefficients are stored by
// ascending exponent with a nonzero leading coefficient; the zero polynomial
// has an empty coefficient vector and degree -1.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(K constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    Poly(long constant) : Poly(K(constant)) {}  // NOLINT
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }

    // x(x-1)...(x-k+1)
    static Poly falling_factorial(int k) {
        Poly r(1);
        for (int j = 0; j < k; ++j) r = r * Poly(std::vector<K>{K(-j), K(1)});
        return r;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[i];
    }
    const K& lead() const { return c_.back(); }
    const std::vector<K>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<K> c(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> c(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(c));
    }
    Poly operator*(const K& k) const {
        if (k.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * k;
        return r;
    }
    Poly operator/(const K& k) const { return *this * k.inv(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(c));
    }

    // p(x + shift), exact.
    Poly shift(const K& s) const {
        Poly r;
        Poly xs(std::vector<K>{s, K(1)});
        for (int i = degree(); i >= 0; --i) r = r * xs + Poly(c_[i]);
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    // Euclidean division; requires a nonzero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw ZeroDenominator();
        Poly q, r = *this;
        K dl = d.lead().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            K c = r.lead() * dl;
            std::vector<K> mono(static_cast<size_t>(k) + 1, K(0));
            mono[k] = c;
            Poly m(std::move(mono));
            q = q + m;
            r = r - m * d;
        }
        return {q, r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this / lead();
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            K c = coeff(i);
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c.str();
            if (i == 0) {
                out += cs;
                continue;
            }
            if (cs != "1") out += "(" + cs + ")*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    // Monic remainders at every step keep coefficient growth in check.
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly<K> r = (a % b).monic();
        a = b;
        b = r;
    }
    return a;
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return ((a * b) / gcd(a, b)).monic();
}

} // namespace qrsym

#endif
