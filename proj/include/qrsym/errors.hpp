#ifndef QRSYM_ERRORS_HPP
#define QRSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrsym {

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

// Evaluation of a rational function at a point where the denominator vanishes.
struct PoleAtPoint : std::domain_error {
    explicit PoleAtPoint(const std::string& where)
        : std::domain_error("pole at point " + where) {}
};

struct DivergentLimit : std::domain_error {
    DivergentLimit() : std::domain_error("limit at infinity diverges") {}
};

// Re-expansion in the small parameter is impossible: the denominator vanishes
// identically at parameter = 0.
struct PoleAtZeroParam : std::domain_error {
    PoleAtZeroParam() : std::domain_error("denominator vanishes at zero parameter") {}
};

// The operator action on the module basis is undefined at this weight:
// a symbol denominator vanishes at a reachable integer point.
struct ModuleUndefined : std::domain_error {
    int degree;
    long point;
    ModuleUndefined(int d, long n)
        : std::domain_error("module action undefined: degree " + std::to_string(d) +
                            ", basis index " + std::to_string(n)),
          degree(d), point(n) {}
};

struct NonpositiveNorms : std::domain_error {
    NonpositiveNorms() : std::domain_error("basis norms not positive; Hilbert-Schmidt analysis refused") {}
};

struct TrivialCocycleClass : std::domain_error {
    TrivialCocycleClass() : std::domain_error("cocycle is a coboundary; no Virasoro normalization") {}
};

struct BadInput : std::invalid_argument {
    explicit BadInput(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qrsym

#endif
