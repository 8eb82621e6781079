#ifndef QRSYM_ASYMPTOTICS_HPP
#define QRSYM_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "qrsym/generators.hpp"

namespace qrsym {

// h -> h0 + param in every symbol, exactly. The result is read over Q(param).
GradedOp<RatQ> substitute_weight(const GradedOp<RatQ>& op, const Rational& h0);
RatQ substitute_weight_scalar(const RatQ& f, const Rational& h0);

// Small-parameter expansion of an operator family around the base weight.
// coeff[m] collects the xi-symbols of the param^m term; each is an exact
// rational function of xi over Q. pole_log records nonnegative integer
// xi-poles of each coefficient (evaluations there are meaningless).
struct ExpansionSeries {
    Rational h0;
    int order = 0;
    std::vector<GradedOp<Rational>> coeff;
    std::vector<std::vector<std::pair<int, long>>> pole_log;  // per order: (degree, point)
};

ExpansionSeries expand_operator(const GradedOp<RatQ>& symbolic_op, const Rational& h0,
                                int order);

// Expansion of the bracket defect [L_i, L_j] - (i-j) L_{i+j} taken at the
// running weight h0 + param. At the distinguished base weights 1/2 and 1 the
// bracket relations hold exactly at order zero, so the defect starts at
// first order there.
ExpansionSeries expand_defect(int i, int j, const Rational& h0, int order);

// Central-term report for the diagonal pair (i, -i).
//
// g1 is the first-order coefficient of the commutator [L_i, L_-i] itself,
// measured against the base-weight image of the expected bracket: the
// expected term 2i L_0 is re-expanded too, but its own first-order part
// (2i, from the weight shift inside L_0) is deliberately not removed. The
// constant kappa that survives at xi -> infinity is the central term in this
// normalization; the rest of g1 decays and is square-summable on the basis
// (the HS flag). Removing the bracket's first-order part as well leaves a
// defect coefficient that decays to zero identically; both views are
// reported.
struct CentralReport {
    int index = 0;
    Rational h0;
    RatQ g1;                       // first-order coefficient, as above
    RatQ g1_defect;                // same with the bracket's own order-1 part removed
    std::optional<Rational> kappa; // lim g1; nullopt if divergent
    bool hs_residual = false;      // g1 - kappa has degree drop >= 1
    Rational central_charge_slope; // c(param) = slope * param
};

CentralReport central_coefficient(int i, const Rational& h0);

// 12 kappa / (i^3 - i), the coefficient of the linear central-charge form.
Rational central_charge_slope(int i, const Rational& h0);

// Mod-HS reduction applied before any expansion: the exact degree-0 defect
// symbol over Q(param) is sent to its value at xi -> infinity. The result is
// a rational function of the parameter; the representation-defect decays for
// every fixed parameter value, so this is identically zero — while the
// expansion-first route keeps a nonzero constant. The two reductions do not
// commute.
RatQ order_swap_experiment(int i, const Rational& h0);

// Exact finite-difference probe of the expansion: compares the first-order
// prediction hbar0 * g1(n) with the exact diagonal defect entry at the
// concrete weight h0 + hbar0.
struct FiniteDifferenceCheck {
    Rational exact_entry;
    Rational predicted;
    Rational relative_error;  // |exact - predicted| / |exact|
};

FiniteDifferenceCheck finite_difference_check(int i, int j, const Rational& h0,
                                              const Rational& hbar0, int n);

} // namespace qrsym

#endif
