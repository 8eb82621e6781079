#ifndef QRSYM_GRADED_OP_HPP
#define QRSYM_GRADED_OP_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "qrsym/fields.hpp"

namespace qrsym {

// Graded operator on the polynomial module, represented canonically by its
// symbols: a degree-d component with symbol s acts as z^n -> s(n) z^{n-d}.
// With that convention z has degree -1, d/dz degree +1, and deg L_k = k.
// Zero components are never stored.
//
// cancel[d] lists nonnegative integer points where reduction of a composite
// symbol removed a factor vanishing there. At such a point the reduced symbol
// can disagree with the true operator composition (the factor was an honest
// zero of a falling factorial cancelling an honest denominator), so
// evaluations there carry a warning.
template <class K>
struct GradedOp {
    std::map<int, RatFunc<K>> comp;
    std::map<int, std::vector<long>> cancel;

    bool is_zero() const { return comp.empty(); }

    std::vector<int> grades() const {
        std::vector<int> g;
        g.reserve(comp.size());
        for (const auto& [d, s] : comp) g.push_back(d);
        return g;
    }
    bool is_homogeneous(int d) const { return comp.size() == 1 && comp.count(d) == 1; }

    const RatFunc<K>& symbol(int d) const {
        static const RatFunc<K> zero;
        auto it = comp.find(d);
        return it == comp.end() ? zero : it->second;
    }

    void set(int d, RatFunc<K> s) {
        if (s.is_zero())
            comp.erase(d);
        else
            comp[d] = std::move(s);
    }

    void add_cancel(int d, long n) {
        auto& v = cancel[d];
        if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
        std::sort(v.begin(), v.end());
    }
    bool has_cancel(int d, long n) const {
        auto it = cancel.find(d);
        if (it == cancel.end()) return false;
        return std::find(it->second.begin(), it->second.end(), n) != it->second.end();
    }
};

// z^a * f(xi) * d^b with a, b >= 0.
template <class K>
struct Monomial {
    int z_pow;
    RatFunc<K> f;
    int d_pow;
};

template <class K>
GradedOp<K> zero_op() { return {}; }

template <class K>
GradedOp<K> identity_op() {
    GradedOp<K> r;
    r.set(0, RatFunc<K>(1));
    return r;
}

// Normal-form reduction of z^a f(xi) d^b: the degree-(b-a) symbol is
// xi (xi-1) ... (xi-b+1) * f(xi-b).
template <class K>
GradedOp<K> from_monomials(const std::vector<Monomial<K>>& terms) {
    GradedOp<K> r;
    for (const auto& t : terms) {
        int d = t.d_pow - t.z_pow;
        RatFunc<K> s = RatFunc<K>(Poly<K>::falling_factorial(t.d_pow)) *
                       t.f.shift(K(-t.d_pow));
        r.set(d, r.symbol(d) + s);
    }
    return r;
}

template <class K>
GradedOp<K> op_add(const GradedOp<K>& x, const GradedOp<K>& y) {
    GradedOp<K> r = x;
    for (const auto& [d, s] : y.comp) r.set(d, r.symbol(d) + s);
    for (const auto& [d, pts] : y.cancel)
        for (long n : pts) r.add_cancel(d, n);
    for (const auto& [d, pts] : x.cancel)
        for (long n : pts) r.add_cancel(d, n);
    return r;
}

template <class K>
GradedOp<K> op_neg(const GradedOp<K>& x) {
    GradedOp<K> r;
    for (const auto& [d, s] : x.comp) r.set(d, -s);
    r.cancel = x.cancel;
    return r;
}

template <class K>
GradedOp<K> op_sub(const GradedOp<K>& x, const GradedOp<K>& y) {
    return op_add(x, op_neg(y));
}

template <class K>
GradedOp<K> scalar_mul(const K& c, const GradedOp<K>& x) {
    GradedOp<K> r;
    if (c.is_zero()) return r;
    for (const auto& [d, s] : x.comp) r.set(d, s * RatFunc<K>(c));
    r.cancel = x.cancel;
    return r;
}

// Composition: (x*y) z^n = x(y z^n). Components (d, sx) of x and (e, sy) of y
// contribute sx(xi - e) * sy(xi) at degree d + e.
template <class K>
GradedOp<K> op_mul(const GradedOp<K>& x, const GradedOp<K>& y) {
    GradedOp<K> r;
    for (const auto& [d, sx] : x.comp) {
        for (const auto& [e, sy] : y.comp) {
            Poly<K> cancelled;
            RatFunc<K> term = mul_tracked(sx.shift(K(-e)), sy, &cancelled);
            r.set(d + e, r.symbol(d + e) + term);
            if constexpr (std::is_same_v<K, Rational>) {
                if (cancelled.degree() > 0)
                    for (long n : nonneg_integer_roots(cancelled)) r.add_cancel(d + e, n);
            }
        }
    }
    // Inherited warnings: x's symbol at degree d is read at xi - e, so a
    // warning of x at point p surfaces at p + e; y's warnings stay in place.
    for (const auto& [e, sy] : y.comp)
        for (const auto& [d, pts] : x.cancel)
            for (long p : pts)
                if (p + e >= 0) r.add_cancel(d + e, p + e);
    for (const auto& [d, sx] : x.comp)
        for (const auto& [e, pts] : y.cancel)
            for (long p : pts) r.add_cancel(d + e, p);
    return r;
}

template <class K>
GradedOp<K> op_commutator(const GradedOp<K>& x, const GradedOp<K>& y) {
    return op_sub(op_mul(x, y), op_mul(y, x));
}

template <class K>
GradedOp<K> op_pow(const GradedOp<K>& x, unsigned e) {
    GradedOp<K> r = identity_op<K>();
    for (unsigned i = 0; i < e; ++i) r = op_mul(r, x);
    return r;
}

template <class K>
bool op_equal(const GradedOp<K>& x, const GradedOp<K>& y) {
    return x.comp == y.comp;
}

template <class K>
struct SymbolValue {
    K value;
    bool cancellation_warning = false;
};

// sigma_d(n). Throws ModuleUndefined on a genuine pole; a tracked removable
// point evaluates fine but is flagged.
template <class K>
SymbolValue<K> eval_symbol_at(const GradedOp<K>& x, int d, long n) {
    auto it = x.comp.find(d);
    if (it == x.comp.end()) return {K(0), false};
    const RatFunc<K>& s = it->second;
    K den = s.den().eval(K(n));
    if (den.is_zero()) throw ModuleUndefined(d, n);
    return {s.num().eval(K(n)) * den.inv(), x.has_cancel(d, n)};
}

// Full action on the basis vector z^n as a map (resulting exponent -> value).
template <class K>
std::map<long, K> apply_to_basis(const GradedOp<K>& x, long n) {
    std::map<long, K> out;
    for (const auto& [d, s] : x.comp) {
        K v = eval_symbol_at(x, d, n).value;
        if (v.is_zero()) continue;
        long m = n - d;
        if (m < 0) throw ModuleUndefined(d, n);
        out[m] = out.count(m) ? out[m] + v : v;
        if (out[m].is_zero()) out.erase(m);
    }
    return out;
}

// Term-by-term action of a monomial list on z^n. A vanishing falling
// factorial annihilates the term before the middle factor is evaluated, so no
// pole of f at n - b can contribute.
template <class K>
std::map<long, K> apply_monomials(const std::vector<Monomial<K>>& terms, long n) {
    std::map<long, K> out;
    for (const auto& t : terms) {
        K ff(1);
        for (int j = 0; j < t.d_pow; ++j) ff = ff * K(n - j);
        if (ff.is_zero()) continue;
        K v = ff * t.f.eval(K(n - t.d_pow));
        long m = n - t.d_pow + t.z_pow;
        if (v.is_zero()) continue;
        out[m] = out.count(m) ? out[m] + v : v;
        if (out[m].is_zero()) out.erase(m);
    }
    return out;
}

// Membership of the action on the module: no symbol denominator may vanish at
// a reachable basis index. Strict membership in the operator algebra itself
// additionally forbids integer poles anywhere.
struct MembershipReport {
    bool valid = true;
    std::vector<std::pair<int, long>> offending;        // (degree, basis index)
    bool valid_strict = true;
    std::vector<std::pair<int, long>> strict_offending; // integer poles, any sign
};

template <class K>
MembershipReport validate_membership(const GradedOp<K>& x);

template <>
inline MembershipReport validate_membership(const GradedOp<Rational>& x) {
    MembershipReport rep;
    for (const auto& [d, s] : x.comp) {
        for (long n : nonneg_integer_roots(s.den())) {
            rep.valid = false;
            rep.offending.emplace_back(d, n);
        }
        // Negative integer poles via the reflected polynomial den(-t).
        std::vector<Rational> rc;
        for (int k = 0; k <= s.den().degree(); ++k)
            rc.push_back(k % 2 ? -s.den().coeff(k) : s.den().coeff(k));
        for (long n : nonneg_integer_roots(PolyQ(rc))) {
            if (n == 0) continue; // already covered
            rep.valid_strict = false;
            rep.strict_offending.emplace_back(d, -n);
        }
    }
    rep.valid_strict = rep.valid_strict && rep.valid;
    for (auto& p : rep.offending) rep.strict_offending.push_back(p);
    std::sort(rep.strict_offending.begin(), rep.strict_offending.end());
    std::sort(rep.offending.begin(), rep.offending.end());
    return rep;
}

// Symbolic-weight membership: for each reachable index in the window the
// denominator is a rational function of the weight; its rational zeros are
// the excluded weights. The full excluded set is an arithmetic family; the
// report lists the window [0, n_window].
struct SymbolicMembershipReport {
    bool valid_generic = true;                           // no weight-independent pole
    std::vector<std::pair<int, long>> always_offending;  // pole for every weight
    struct Excluded {
        int degree;
        long point;
        Rational weight;
    };
    std::vector<Excluded> excluded;
};

inline SymbolicMembershipReport validate_membership_symbolic(const GradedOp<RatQ>& x,
                                                             long n_window = 16) {
    SymbolicMembershipReport rep;
    for (const auto& [d, s] : x.comp) {
        for (long n = 0; n <= n_window; ++n) {
            RatQ v = s.den().eval(RatQ(Rational(n)));
            if (v.is_zero()) {
                rep.valid_generic = false;
                rep.always_offending.emplace_back(d, n);
                continue;
            }
            for (const Rational& r : rational_roots(v.num()))
                rep.excluded.push_back({d, n, r});
        }
    }
    return rep;
}

} // namespace qrsym

#endif
