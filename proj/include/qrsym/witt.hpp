#ifndef QRSYM_WITT_HPP
#define QRSYM_WITT_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qrsym/rational.hpp"

namespace qrsym {

// Gaussian rational a + b i. The complexified circle basis e_n = i e^{int} d/dt
// carries factors of i; nothing outside this module needs them.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}  // NOLINT

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inv() const {
        Rational n = norm2();
        if (n.is_zero()) throw ZeroDenominator();
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inv(); }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        if (re.is_zero()) return im.str() + "*i";
        return re.str() + (im > Rational(0) ? "+" : "") + im.str() + "*i";
    }
};

// Finite linear combination of the basis e_k.
using WittElement = std::map<int, GaussianRational>;

WittElement witt_e(int k);
WittElement witt_bracket(const WittElement& a, const WittElement& b);
// [[...[e_{k0}, e_{k1}], ...], e_{km}] as an abstract element.
WittElement witt_nested_bracket(std::span<const int> idx);
bool witt_jacobi_residual_zero(const WittElement& a, const WittElement& b,
                               const WittElement& c);

struct VirasoroElement {
    WittElement w;
    GaussianRational central;
};

// [e_j, e_k] = (j-k) e_{j+k} + (j^3-j)/12 delta_{j+k,0} c, extended bilinearly.
VirasoroElement virasoro_bracket(const VirasoroElement& a, const VirasoroElement& b);
bool virasoro_jacobi_residual_zero(const VirasoroElement& a, const VirasoroElement& b,
                                   const VirasoroElement& c);

// Trigonometric vector field v(t) d/dt stored by exact Fourier coefficients
// of v: v(t) = sum coeff[n] e^{int}.
struct TrigField {
    std::map<int, GaussianRational> fourier;

    static TrigField sin_n(int n);   // sin(nt) d/dt
    static TrigField cos_n(int n);   // cos(nt) d/dt
    static TrigField d_t();          // d/dt
    static TrigField e_n(int n);     // i e^{int} d/dt

    bool is_zero() const;
    bool is_real() const;            // coeff(-n) == conj(coeff(n))
    TrigField operator+(const TrigField& o) const;
    TrigField operator-(const TrigField& o) const;
    TrigField scale(const GaussianRational& c) const;
    bool operator==(const TrigField& o) const;
};

// [v1 d/dt, v2 d/dt] = (v1 v2' - v1' v2) d/dt, exact Fourier products.
TrigField trig_bracket(const TrigField& a, const TrigField& b);

// Gelfand-Fuchs 2-cocycle, integrand v1' v2'' - v2' v1''; the integral over
// the circle is 2*pi times the zero mode, and the returned value is the
// coefficient of pi (so the result is an exact Gaussian rational).
GaussianRational gelfand_fuchs_over_pi(const TrigField& a, const TrigField& b);

// c([a,b],c) + c([b,c],a) + c([c,a],b), in units of pi. Zero for a 2-cocycle.
GaussianRational cocycle_residual_over_pi(const TrigField& a, const TrigField& b,
                                          const TrigField& c);

// Given a cocycle of the form c_raw(e_j, e_k) = alpha j^3 delta_{j+k,0} (alpha
// in units of pi), find lambda (in units of 1/pi) and the coboundary shift mu
// on the e_0 coefficient with
//   lambda c_raw(e_j, e_k) + mu [e_j,e_k]_0 = (j^3-j)/12 delta_{j+k,0}.
struct VirasoroNormalization {
    GaussianRational lambda_over_inv_pi;
    GaussianRational mu;
};
VirasoroNormalization normalize_to_virasoro(const GaussianRational& alpha);

// Comparison of the classical printed bracket table for the real basis
// {s_n, c_n, h} against the Fourier-product oracle. The printed table leaves
// the index-0 symbols ambiguous; both readings are reported.
enum class ZeroModeConvention {
    drop,     // s_0 = c_0 = 0; the delta term supplies the h part
    c0_as_h,  // c_0 = h
};

struct TableComparison {
    struct Line {
        std::string lhs;          // e.g. "[s_2,c_3]"
        std::string convention;
        bool match;
        std::string oracle;       // oracle result, printed in the real basis
        std::string table;        // table prediction
    };
    std::vector<Line> lines;
    int mismatches = 0;
};

TableComparison compare_reference_table(int max_index, ZeroModeConvention conv);

std::string trig_to_string(const TrigField& v);

} // namespace qrsym

#endif
