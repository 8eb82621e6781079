#include "qrsym/witt.hpp"

#include <sstream>

#include "qrsym/errors.hpp"

namespace qrsym {

namespace {

void add_to(std::map<int, GaussianRational>& m, int k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

} // namespace

WittElement witt_e(int k) { return {{k, GaussianRational(1)}}; }

WittElement witt_bracket(const WittElement& a, const WittElement& b) {
    WittElement out;
    for (const auto& [j, cj] : a)
        for (const auto& [k, ck] : b)
            add_to(out, j + k, cj * ck * GaussianRational(Rational(j - k)));
    return out;
}

WittElement witt_nested_bracket(std::span<const int> idx) {
    if (idx.empty()) return {};
    WittElement acc = witt_e(idx[0]);
    for (size_t t = 1; t < idx.size(); ++t) acc = witt_bracket(acc, witt_e(idx[t]));
    return acc;
}

bool witt_jacobi_residual_zero(const WittElement& a, const WittElement& b,
                               const WittElement& c) {
    WittElement sum = witt_bracket(witt_bracket(a, b), c);
    for (const auto& [k, v] : witt_bracket(witt_bracket(b, c), a)) add_to(sum, k, v);
    for (const auto& [k, v] : witt_bracket(witt_bracket(c, a), b)) add_to(sum, k, v);
    return sum.empty();
}

VirasoroElement virasoro_bracket(const VirasoroElement& a, const VirasoroElement& b) {
    VirasoroElement out;
    out.w = witt_bracket(a.w, b.w);
    GaussianRational central;
    for (const auto& [j, cj] : a.w) {
        auto it = b.w.find(-j);
        if (it == b.w.end()) continue;
        long jl = j;
        central += cj * it->second *
                   GaussianRational(Rational(jl * jl * jl - jl, 12));
    }
    out.central = central;
    return out;
}

bool virasoro_jacobi_residual_zero(const VirasoroElement& a, const VirasoroElement& b,
                                   const VirasoroElement& c) {
    VirasoroElement r = virasoro_bracket(virasoro_bracket(a, b), c);
    VirasoroElement s = virasoro_bracket(virasoro_bracket(b, c), a);
    VirasoroElement t = virasoro_bracket(virasoro_bracket(c, a), b);
    WittElement sum = r.w;
    for (const auto& [k, v] : s.w) add_to(sum, k, v);
    for (const auto& [k, v] : t.w) add_to(sum, k, v);
    GaussianRational cen = r.central + s.central + t.central;
    return sum.empty() && cen.is_zero();
}

TrigField TrigField::sin_n(int n) {
    // sin(nt) = (e^{int} - e^{-int}) / (2i)
    TrigField f;
    GaussianRational half_over_i = GaussianRational(Rational(0), Rational(-1, 2));
    f.fourier[n] = half_over_i;
    f.fourier[-n] = -half_over_i;
    if (n == 0) f.fourier.clear();
    return f;
}

TrigField TrigField::cos_n(int n) {
    TrigField f;
    if (n == 0) {
        f.fourier[0] = GaussianRational(1);
        return f;
    }
    f.fourier[n] = GaussianRational(Rational(1, 2));
    f.fourier[-n] = GaussianRational(Rational(1, 2));
    return f;
}

TrigField TrigField::d_t() {
    TrigField f;
    f.fourier[0] = GaussianRational(1);
    return f;
}

TrigField TrigField::e_n(int n) {
    TrigField f;
    f.fourier[n] = GaussianRational::i();
    return f;
}

bool TrigField::is_zero() const {
    for (const auto& [n, c] : fourier)
        if (!c.is_zero()) return false;
    return true;
}

bool TrigField::is_real() const {
    for (const auto& [n, c] : fourier) {
        auto it = fourier.find(-n);
        GaussianRational other = it == fourier.end() ? GaussianRational() : it->second;
        if (other != c.conj()) return false;
    }
    return true;
}

TrigField TrigField::operator+(const TrigField& o) const {
    TrigField out = *this;
    for (const auto& [n, c] : o.fourier) add_to(out.fourier, n, c);
    return out;
}

TrigField TrigField::operator-(const TrigField& o) const {
    return *this + o.scale(GaussianRational(Rational(-1)));
}

TrigField TrigField::scale(const GaussianRational& c) const {
    TrigField out;
    if (c.is_zero()) return out;
    for (const auto& [n, v] : fourier) {
        GaussianRational w = v * c;
        if (!w.is_zero()) out.fourier[n] = w;
    }
    return out;
}

bool TrigField::operator==(const TrigField& o) const {
    return (*this - o).is_zero();
}

TrigField trig_bracket(const TrigField& a, const TrigField& b) {
    TrigField out;
    for (const auto& [n, an] : a.fourier) {
        for (const auto& [m, bm] : b.fourier) {
            // v1 v2' - v1' v2 contributes (im - in) a_n b_m e^{i(n+m)t}
            GaussianRational c =
                an * bm * GaussianRational(Rational(0), Rational(m - n));
            add_to(out.fourier, n + m, c);
        }
    }
    return out;
}

GaussianRational gelfand_fuchs_over_pi(const TrigField& a, const TrigField& b) {
    // zero mode of v1' v2'' - v2' v1'': pairs (n, -n) contribute
    // (in a_n)(-n^2 b_{-n}) - (in b_n)(-n^2 a_{-n}); integral = 2 pi zero-mode.
    GaussianRational zero_mode;
    for (const auto& [n, an] : a.fourier) {
        auto it = b.fourier.find(-n);
        if (it == b.fourier.end()) continue;
        long nl = n;
        GaussianRational in(Rational(0), Rational(nl));
        GaussianRational mn2(Rational(-nl * nl));
        zero_mode += in * an * mn2 * it->second;
    }
    for (const auto& [n, bn] : b.fourier) {
        auto it = a.fourier.find(-n);
        if (it == a.fourier.end()) continue;
        long nl = n;
        GaussianRational in(Rational(0), Rational(nl));
        GaussianRational mn2(Rational(-nl * nl));
        zero_mode -= in * bn * mn2 * it->second;
    }
    return zero_mode * GaussianRational(Rational(2));
}

GaussianRational cocycle_residual_over_pi(const TrigField& a, const TrigField& b,
                                          const TrigField& c) {
    return gelfand_fuchs_over_pi(trig_bracket(a, b), c) +
           gelfand_fuchs_over_pi(trig_bracket(b, c), a) +
           gelfand_fuchs_over_pi(trig_bracket(c, a), b);
}

VirasoroNormalization normalize_to_virasoro(const GaussianRational& alpha) {
    if (alpha.is_zero()) throw TrivialCocycleClass();
    // lambda alpha j^3 + 2 mu j = (j^3 - j)/12 for all j forces
    // lambda alpha = 1/12 and mu = -1/24.
    VirasoroNormalization out;
    out.lambda_over_inv_pi = GaussianRational(Rational(1, 12)) / alpha;
    out.mu = GaussianRational(Rational(-1, 24));
    for (long j = 1; j <= 6; ++j) {
        GaussianRational lhs = out.lambda_over_inv_pi * alpha * GaussianRational(Rational(j * j * j)) +
                               out.mu * GaussianRational(Rational(2 * j));
        if (lhs != GaussianRational(Rational(j * j * j - j, 12)))
            throw TrivialCocycleClass();
    }
    return out;
}

namespace {

// Decompose a real field into the {s_n, c_n, h} basis for printing.
std::string real_basis_string(const TrigField& v) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const GaussianRational& coef, const std::string& name) {
        if (coef.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << "(" << coef.str() << ")*" << name;
    };
    auto at = [&](int n) {
        auto it = v.fourier.find(n);
        return it == v.fourier.end() ? GaussianRational() : it->second;
    };
    emit(at(0), "h");
    int maxn = 0;
    for (const auto& [n, c] : v.fourier) maxn = std::max(maxn, std::abs(n));
    for (int n = 1; n <= maxn; ++n) {
        // a e^{int} + b e^{-int} = (a+b) cos(nt) + i(a-b) sin(nt)
        GaussianRational a = at(n), b = at(-n);
        emit(a + b, "c_" + std::to_string(n));
        emit(GaussianRational::i() * (a - b), "s_" + std::to_string(n));
    }
    if (first) return "0";
    return os.str();
}

int sgn_int(int x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

// Table prediction for the printed real-basis bracket lines.
TrigField table_prediction(char f1, int n, char f2, int m, ZeroModeConvention conv) {
    auto sym = [&](char kind, int idx) -> TrigField {
        if (kind == 'h') return TrigField::d_t();
        if (idx == 0) {
            if (kind == 's') return TrigField{};  // sin(0 t) = 0
            return conv == ZeroModeConvention::c0_as_h ? TrigField::d_t() : TrigField{};
        }
        return kind == 's' ? TrigField::sin_n(idx) : TrigField::cos_n(idx);
    };
    auto half = GaussianRational(Rational(1, 2));
    if (f1 == 'h') {
        // [h, s_n] = n c_n ; [h, c_n] = -n s_n
        if (f2 == 's') return TrigField::cos_n(m).scale(GaussianRational(Rational(m)));
        return TrigField::sin_n(m).scale(GaussianRational(Rational(-m)));
    }
    if (f1 == 's' && f2 == 's') {
        // 1/2 ((m-n) s_{n+m} + sgn(n-m)(n+m) s_|n-m|)
        TrigField out = sym('s', n + m).scale(half * GaussianRational(Rational(m - n)));
        out = out + sym('s', std::abs(n - m))
                        .scale(half * GaussianRational(Rational(sgn_int(n - m) * (n + m))));
        return out;
    }
    if (f1 == 'c' && f2 == 'c') {
        // 1/2 ((n-m) s_{n+m} + sgn(n-m)(n+m) s_|n-m|)
        TrigField out = sym('s', n + m).scale(half * GaussianRational(Rational(n - m)));
        out = out + sym('s', std::abs(n - m))
                        .scale(half * GaussianRational(Rational(sgn_int(n - m) * (n + m))));
        return out;
    }
    // [s_n, c_m] = 1/2 ((m-n) c_{n+m} - (m+n) c_|n-m|) - n delta_{nm} h
    TrigField out = sym('c', n + m).scale(half * GaussianRational(Rational(m - n)));
    out = out + sym('c', std::abs(n - m)).scale(half * GaussianRational(Rational(-(m + n))));
    if (n == m) out = out - TrigField::d_t().scale(GaussianRational(Rational(n)));
    return out;
}

TrigField oracle_bracket(char f1, int n, char f2, int m) {
    auto mk = [&](char kind, int idx) {
        if (kind == 'h') return TrigField::d_t();
        return kind == 's' ? TrigField::sin_n(idx) : TrigField::cos_n(idx);
    };
    return trig_bracket(mk(f1, n), mk(f2, m));
}

} // namespace

TableComparison compare_reference_table(int max_index, ZeroModeConvention conv) {
    TableComparison cmp;
    std::string conv_name = conv == ZeroModeConvention::drop ? "index0->0" : "c0->h";
    auto push = [&](char f1, int n, char f2, int m) {
        TrigField oracle = oracle_bracket(f1, n, f2, m);
        TrigField table = table_prediction(f1, n, f2, m, conv);
        TableComparison::Line line;
        std::ostringstream lhs;
        if (f1 == 'h')
            lhs << "[h," << f2 << "_" << m << "]";
        else
            lhs << "[" << f1 << "_" << n << "," << f2 << "_" << m << "]";
        line.lhs = lhs.str();
        line.convention = conv_name;
        line.match = oracle == table;
        line.oracle = real_basis_string(oracle);
        line.table = real_basis_string(table);
        if (!line.match) ++cmp.mismatches;
        cmp.lines.push_back(std::move(line));
    };
    for (int n = 1; n <= max_index; ++n) {
        push('h', 0, 's', n);
        push('h', 0, 'c', n);
        for (int m = 1; m <= max_index; ++m) {
            push('s', n, 's', m);
            push('c', n, 'c', m);
            push('s', n, 'c', m);
        }
    }
    return cmp;
}

std::string trig_to_string(const TrigField& v) { return real_basis_string(v); }

} // namespace qrsym
