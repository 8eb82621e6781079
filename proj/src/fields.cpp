#include "qrsym/fields.hpp"

#include <algorithm>

namespace qrsym {

namespace {

// Scale to integer coefficients (content discarded).
std::vector<mpz_class> integerize(const PolyQ& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.denominator();
        l = l / gcd(l, d) * d;
    }
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
    return out;
}

mpz_class eval_int(const std::vector<mpz_class>& c, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<mpz_class> divisors(const mpz_class& n_in, size_t cap = 1u << 16) {
    std::vector<mpz_class> out;
    mpz_class n = abs(n_in);
    if (n == 0) return out;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            out.push_back(n / i);
            if (out.size() > cap) break;
        }
    }
    return out;
}

} // namespace

std::vector<long> nonneg_integer_roots(const PolyQ& p, long scan_cap) {
    std::vector<long> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    std::vector<mpz_class> c = integerize(p);
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(0);
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() <= 1) return roots;
    // Cauchy bound on root magnitude.
    mpz_class maxc = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) maxc = std::max(maxc, mpz_class(abs(c[i])));
    mpz_class lead = abs(c.back());
    mpz_class bound = maxc / lead + 2;
    long b = bound.fits_slong_p() ? bound.get_si() : scan_cap;
    b = std::min(b, scan_cap);
    for (long n = 1; n <= b; ++n) {
        if (eval_int(c, mpz_class(n)) == 0) roots.push_back(n);
    }
    return roots;
}

std::vector<Rational> rational_roots(const PolyQ& p) {
    std::vector<Rational> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    std::vector<mpz_class> c = integerize(p);
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() <= 1) return roots;
    if (c.size() == 2) {
        roots.push_back(Rational(mpq_class(-c[0], c[1])));
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    for (const mpz_class& pnum : divisors(c.front())) {
        for (const mpz_class& q : divisors(c.back())) {
            for (int s : {1, -1}) {
                Rational cand(mpq_class(s * pnum, q));
                PolyQ probe = p;
                if (probe.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Clear inner denominators of a xi-polynomial over Q(param); returns the
// coefficients of param^j as xi-polynomials, all scaled by the same lcm.
std::vector<PolyQ> to_param_layers(const PolyP& p, const PolyQ& clear) {
    std::vector<PolyQ> layers;
    for (int k = 0; k <= p.degree(); ++k) {
        RatQ c = p.coeff(k);
        PolyQ scaled = c.num() * (clear / c.den());
        for (int j = 0; j <= scaled.degree(); ++j) {
            if (j >= static_cast<int>(layers.size())) layers.resize(j + 1);
            Rational v = scaled.coeff(j);
            if (v.is_zero()) continue;
            std::vector<Rational> mono(static_cast<size_t>(k) + 1, Rational(0));
            mono[k] = v;
            layers[j] = layers[j] + PolyQ(std::move(mono));
        }
    }
    if (layers.empty()) layers.emplace_back();
    return layers;
}

PolyQ inner_lcm(const PolyP& p, PolyQ acc) {
    for (int k = 0; k <= p.degree(); ++k) acc = lcm(acc, p.coeff(k).den());
    return acc;
}

} // namespace

std::vector<RatQ> taylor_in_param(const RatP& f, int order) {
    PolyQ clear = inner_lcm(f.den(), inner_lcm(f.num(), PolyQ(1)));
    std::vector<PolyQ> nl = to_param_layers(f.num(), clear);
    std::vector<PolyQ> dl = to_param_layers(f.den(), clear);
    if (dl[0].is_zero()) throw PoleAtZeroParam();
    RatQ d0(dl[0]);
    std::vector<RatQ> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
        RatQ acc = j < static_cast<int>(nl.size()) ? RatQ(nl[j]) : RatQ();
        for (int m = 1; m <= j && m < static_cast<int>(dl.size()); ++m)
            acc -= RatQ(dl[m]) * out[j - m];
        out.push_back(acc / d0);
    }
    return out;
}

RatQ substitute_param(const RatP& f, const Rational& value) {
    auto subst = [&](const PolyP& p) {
        // Evaluate each Q(param) coefficient, keep the xi-polynomial exact.
        std::vector<Rational> c;
        c.reserve(static_cast<size_t>(p.degree()) + 1);
        for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).eval(value));
        return PolyQ(std::move(c));
    };
    return RatQ(subst(f.num()), subst(f.den()));
}

} // namespace qrsym
