#ifndef QRSYM_GENERATORS_HPP
#define QRSYM_GENERATORS_HPP

#include <span>
#include <string>

#include "qrsym/graded_op.hpp"

namespace qrsym {

// Generator catalog for one weight. The weight lives in the coefficient
// field: pass RatQ::var() for a symbolic weight, a Rational for a concrete
// one. One formula covers the whole ladder:
//   L_k   = (xi + (k+1) h) d^k                        (k >= 0)
//   L_-k  = z^k (xi + (k+1) h) / prod_{j<k} (xi+2h+j) (k >= 1)
// and L_{-1}, L_0, L_1 reduce to the Lie algebra generators z, z d + h,
// z d^2 + 2h d. The current family J_k = d^k, J_{-k} has the same
// denominators without the tensor factor; J_0 = 1.
template <class K>
class Catalog {
  public:
    explicit Catalog(K weight) : h_(std::move(weight)) {}

    const K& weight() const { return h_; }

    GradedOp<K> L(int k) const {
        auto it = lcache_.find(k);
        if (it != lcache_.end()) return it->second;
        GradedOp<K> op = from_monomials(std::vector<Monomial<K>>{L_monomial(k)});
        lcache_.emplace(k, op);
        return op;
    }

    GradedOp<K> J(int k) const {
        auto it = jcache_.find(k);
        if (it != jcache_.end()) return it->second;
        GradedOp<K> op;
        if (k == 0) {
            op = identity_op<K>();
        } else if (k > 0) {
            op = from_monomials(std::vector<Monomial<K>>{{0, RatFunc<K>(1), k}});
        } else {
            op = from_monomials(std::vector<Monomial<K>>{{-k, RatFunc<K>(Poly<K>(1), lowering_den(-k)), 0}});
        }
        jcache_.emplace(k, op);
        return op;
    }

    GradedOp<K> l(int i) const { return L(i); }  // |i| <= 1
    GradedOp<K> D() const { return J(1); }
    GradedOp<K> F() const { return J(-1); }

    Monomial<K> L_monomial(int k) const {
        K kp1h = K(k >= 0 ? k + 1 : 1 - k) * h_;
        Poly<K> tensor(std::vector<K>{kp1h, K(1)});  // xi + (|k|+1) h
        if (k >= 0) return {0, RatFunc<K>(tensor), k};
        return {-k, RatFunc<K>(tensor, lowering_den(-k)), 0};
    }

    // [L_i, L_j] - (i-j) L_{i+j}
    GradedOp<K> defect(int i, int j) const {
        return op_sub(op_commutator(L(i), L(j)), scalar_mul(K(i - j), L(i + j)));
    }

    // [J_i, J_j] against the abelian bracket.
    GradedOp<K> defect_J(int i, int j) const { return op_commutator(J(i), J(j)); }

    void warm(int max_abs_index) const {
        for (int k = -max_abs_index; k <= max_abs_index; ++k) {
            L(k);
            J(k);
        }
    }

  private:
    Poly<K> lowering_den(int k) const {
        Poly<K> den(1);
        for (int j = 0; j < k; ++j)
            den = den * Poly<K>(std::vector<K>{K(2) * h_ + K(j), K(1)});
        return den;
    }

    K h_;
    mutable std::map<int, GradedOp<K>> lcache_, jcache_;
};

template <class K>
struct IdentityReport {
    std::string name;
    GradedOp<K> residual;
    bool pass = false;
};

template <class K>
IdentityReport<K> make_report(std::string name, GradedOp<K> residual) {
    bool ok = residual.is_zero();
    return {std::move(name), std::move(residual), ok};
}

// [l_i, l_j] = (i-j) l_{i+j}
template <class K>
IdentityReport<K> verify_sl2(const Catalog<K>& cat, int i, int j) {
    GradedOp<K> res = op_sub(op_commutator(cat.l(i), cat.l(j)),
                             scalar_mul(K(i - j), cat.l(i + j)));
    return make_report<K>("sl2[" + std::to_string(i) + "," + std::to_string(j) + "]",
                          std::move(res));
}

enum class Family { L, J };

// Mode form of the primary-field law: a spin-s family satisfies
// [l_i, V_n] = ((s-1) i - n) V_{n+i} for i in {-1, 0, 1}.
template <class K>
IdentityReport<K> verify_tensor_relation(const Catalog<K>& cat, int i, int n, Family fam) {
    int spin = fam == Family::L ? 2 : 1;
    GradedOp<K> v = fam == Family::L ? cat.L(n) : cat.J(n);
    GradedOp<K> vt = fam == Family::L ? cat.L(n + i) : cat.J(n + i);
    GradedOp<K> res = op_sub(op_commutator(cat.l(i), v),
                             scalar_mul(K((spin - 1) * i - n), vt));
    std::string name = std::string(fam == Family::L ? "L" : "J") + "-tensor[i=" +
                       std::to_string(i) + ",n=" + std::to_string(n) + "]";
    return make_report<K>(std::move(name), std::move(res));
}

// [L_n, L_m] = (n-m) L_{n+m} on the half planes n,m >= -1 and n,m <= 1.
template <class K>
IdentityReport<K> verify_witt_halfplane(const Catalog<K>& cat, int n, int m) {
    if (!((n >= -1 && m >= -1) || (n <= 1 && m <= 1)))
        throw BadInput("pair outside the exact half planes");
    GradedOp<K> res = cat.defect(n, m);
    return make_report<K>("witt[" + std::to_string(n) + "," + std::to_string(m) + "]",
                          std::move(res));
}

// [FD, DF] = 0 and [D, F] = q (1 - DF)(1 - FD) with q = 1/(2h-1).
template <class K>
std::pair<IdentityReport<K>, IdentityReport<K>> verify_berezin(const Catalog<K>& cat) {
    GradedOp<K> D = cat.D(), F = cat.F();
    GradedOp<K> DF = op_mul(D, F), FD = op_mul(F, D);
    IdentityReport<K> diag = make_report<K>("berezin[FD,DF]", op_commutator(FD, DF));
    K q = (K(2) * cat.weight() - K(1)).inv();
    GradedOp<K> one = identity_op<K>();
    GradedOp<K> rhs = scalar_mul(q, op_mul(op_sub(one, DF), op_sub(one, FD)));
    IdentityReport<K> rel = make_report<K>("berezin[D,F]", op_sub(op_commutator(D, F), rhs));
    return {diag, rel};
}

// [L_n, f(D)] = -D^{n+1} f'(D) for n >= -1.
template <class K>
IdentityReport<K> verify_fD_commutation(const Catalog<K>& cat, int n, const PolyQ& f) {
    auto of_D = [&](const PolyQ& p) {
        GradedOp<K> acc;
        for (int k = 0; k <= p.degree(); ++k)
            acc = op_add(acc, scalar_mul(scalar_to<K>(p.coeff(k)), cat.J(k)));
        return acc;
    };
    GradedOp<K> lhs = op_commutator(cat.L(n), of_D(f));
    GradedOp<K> rhs = op_neg(op_mul(cat.J(n + 1), of_D(f.derivative())));
    return make_report<K>("fD[n=" + std::to_string(n) + "]", op_sub(lhs, rhs));
}

// Dual identity: [L_{-n}, f(F)] = F^{n+1} f'(F) for n >= -1.
template <class K>
IdentityReport<K> verify_fF_commutation(const Catalog<K>& cat, int n, const PolyQ& f) {
    auto of_F = [&](const PolyQ& p) {
        GradedOp<K> acc;
        for (int k = 0; k <= p.degree(); ++k)
            acc = op_add(acc, scalar_mul(scalar_to<K>(p.coeff(k)), cat.J(-k)));
        return acc;
    };
    GradedOp<K> lhs = op_commutator(cat.L(-n), of_F(f));
    GradedOp<K> rhs = op_mul(cat.J(-(n + 1)), of_F(f.derivative()));
    return make_report<K>("fF[n=" + std::to_string(n) + "]", op_sub(lhs, rhs));
}

// Nested commutator [[...[L_{k0}, L_{k1}], ...], L_{km}] minus the image of
// the same nested abstract bracket; the residual feeds the defect analyses.
template <class K>
GradedOp<K> iterated_defect(const Catalog<K>& cat, std::span<const int> idx) {
    if (idx.size() < 2) throw BadInput("need at least two indices");
    GradedOp<K> nested = cat.L(idx[0]);
    std::map<int, Rational> abstract{{idx[0], Rational(1)}};
    for (size_t t = 1; t < idx.size(); ++t) {
        nested = op_commutator(nested, cat.L(idx[t]));
        std::map<int, Rational> next;
        for (const auto& [k, c] : abstract) {
            Rational w = c * Rational(k - idx[t]);
            if (w.is_zero()) continue;
            Rational& slot = next[k + idx[t]];
            slot += w;
            if (slot.is_zero()) next.erase(k + idx[t]);
        }
        abstract = std::move(next);
    }
    GradedOp<K> image;
    for (const auto& [k, c] : abstract)
        image = op_add(image, scalar_mul(scalar_to<K>(c), cat.L(k)));
    return op_sub(nested, image);
}

} // namespace qrsym

#endif
