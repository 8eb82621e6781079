#include "qrsym/asymptotics.hpp"

#include "qrsym/verma.hpp"

namespace qrsym {

namespace {

RatQ shift_inner(const RatQ& c, const Rational& h0) {
    return RatQ(c.num().shift(h0), c.den().shift(h0));
}

PolyP shift_inner(const PolyP& p, const Rational& h0) {
    std::vector<RatQ> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) c.push_back(shift_inner(p.coeff(k), h0));
    return PolyP(std::move(c));
}

Catalog<RatQ> symbolic_catalog() { return Catalog<RatQ>(RatQ::var()); }

} // namespace

RatQ substitute_weight_scalar(const RatQ& f, const Rational& h0) {
    return RatQ(f.num().shift(h0), f.den().shift(h0));
}

GradedOp<RatQ> substitute_weight(const GradedOp<RatQ>& op, const Rational& h0) {
    GradedOp<RatQ> out;
    for (const auto& [d, s] : op.comp)
        out.set(d, RatP(shift_inner(s.num(), h0), shift_inner(s.den(), h0)));
    return out;
}

ExpansionSeries expand_operator(const GradedOp<RatQ>& symbolic_op, const Rational& h0,
                                int order) {
    ExpansionSeries series;
    series.h0 = h0;
    series.order = order;
    series.coeff.assign(order + 1, GradedOp<Rational>{});
    series.pole_log.assign(order + 1, {});
    GradedOp<RatQ> shifted = substitute_weight(symbolic_op, h0);
    for (const auto& [d, s] : shifted.comp) {
        std::vector<RatQ> coeffs = taylor_in_param(s, order);
        for (int m = 0; m <= order; ++m) {
            if (coeffs[m].is_zero()) continue;
            series.coeff[m].set(d, coeffs[m]);
            for (long p : nonneg_integer_roots(coeffs[m].den()))
                series.pole_log[m].emplace_back(d, p);
        }
    }
    return series;
}

ExpansionSeries expand_defect(int i, int j, const Rational& h0, int order) {
    Catalog<RatQ> cat = symbolic_catalog();
    return expand_operator(cat.defect(i, j), h0, order);
}

CentralReport central_coefficient(int i, const Rational& h0) {
    if (i < 2) throw BadInput("central term needs index >= 2");
    CentralReport rep;
    rep.index = i;
    rep.h0 = h0;
    Catalog<RatQ> cat = symbolic_catalog();
    GradedOp<RatQ> comm = op_commutator(cat.L(i), cat.L(-i));
    GradedOp<RatQ> shifted = substitute_weight(comm, h0);
    std::vector<RatQ> tay = taylor_in_param(shifted.symbol(0), 1);
    // Base-weight image of the expected bracket: 2i (xi + h0). Its removal at
    // order 0 is exact; the order-1 remainder keeps the bracket's own weight
    // shift (the constant 2i) inside g1.
    rep.g1 = tay[1];
    rep.g1_defect = tay[1] - RatQ(Rational(2 * i));
    try {
        Rational kappa = rep.g1.limit_at_infinity();
        rep.kappa = kappa;
        rep.hs_residual = (rep.g1 - RatQ(kappa)).degree_drop() >= 1;
        rep.central_charge_slope =
            Rational(12) * kappa / Rational(static_cast<long>(i) * i * i - i);
    } catch (const DivergentLimit&) {
        rep.kappa = std::nullopt;
        rep.hs_residual = false;
        rep.central_charge_slope = Rational(0);
    }
    return rep;
}

Rational central_charge_slope(int i, const Rational& h0) {
    CentralReport rep = central_coefficient(i, h0);
    if (!rep.kappa) throw DivergentLimit();
    return rep.central_charge_slope;
}

RatQ order_swap_experiment(int i, const Rational& h0) {
    if (i < 2) throw BadInput("central term needs index >= 2");
    Catalog<RatQ> cat = symbolic_catalog();
    GradedOp<RatQ> defect = cat.defect(i, -i);
    GradedOp<RatQ> shifted = substitute_weight(defect, h0);
    RatP diag = shifted.symbol(0);
    if (diag.is_zero()) return RatQ();
    return diag.limit_at_infinity();
}

FiniteDifferenceCheck finite_difference_check(int i, int j, const Rational& h0,
                                              const Rational& hbar0, int n) {
    ExpansionSeries series = expand_defect(i, j, h0, 1);
    RatQ g1 = series.coeff[1].symbol(i + j);
    Rational predicted = hbar0 * g1.eval(Rational(n));
    Catalog<Rational> cat(h0 + hbar0);
    int window = n + std::abs(i) + std::abs(j) + 2;
    BandedMatrix m = defect_matrix(cat, i, j, window);
    Rational exact = m.get(n - (i + j), n);
    FiniteDifferenceCheck out{exact, predicted, Rational(0)};
    if (!exact.is_zero()) out.relative_error = ((exact - predicted) / exact).abs();
    return out;
}

} // namespace qrsym
