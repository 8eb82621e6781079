#include "qrsym/verma.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qrsym {

Rational verma_norm_closed_form(const Rational& h, int n) {
    Rational g(1);
    for (int t = 1; t <= n; ++t) g *= Rational(t) * (Rational(2) * h + Rational(t - 1));
    return g;
}

VermaBasis verma_norms(const Rational& h, int count, int start) {
    VermaBasis b;
    b.h = h;
    b.start = start;
    b.norms.reserve(count);
    Rational g(1);
    for (int t = 1; t <= start; ++t) g *= Rational(t) * (Rational(2) * h + Rational(t - 1));
    for (int i = 0; i < count; ++i) {
        int n = start + i;
        if (i > 0) g *= Rational(n) * (Rational(n) + Rational(2) * h - Rational(1));
        b.norms.push_back(g);
    }
    b.unitarizable = h > Rational(0);
    for (const auto& v : b.norms)
        if (!(v > Rational(0))) b.unitarizable = false;
    return b;
}

int BandedMatrix::bandwidth() const {
    int b = 0;
    for (const auto& [d, v] : diag_) b = std::max(b, std::abs(d));
    return b;
}

Rational BandedMatrix::get(int row, int col) const {
    auto it = diag_.find(col - row);
    if (it == diag_.end()) return Rational(0);
    if (!in_window(row) || !in_window(col)) return Rational(0);
    return it->second[col - start_];
}

void BandedMatrix::set(int row, int col, const Rational& v) {
    if (!in_window(row) || !in_window(col)) throw BadInput("entry outside window");
    auto& vec = diag_[col - row];
    if (vec.empty()) vec.assign(size_, Rational(0));
    vec[col - start_] = v;
    prune(col - row);
}

void BandedMatrix::prune(int d) {
    auto it = diag_.find(d);
    if (it == diag_.end()) return;
    for (const auto& v : it->second)
        if (!v.is_zero()) return;
    diag_.erase(it);
}

BandedMatrix BandedMatrix::operator+(const BandedMatrix& o) const {
    if (o.start_ != start_ || o.size_ != size_) throw BadInput("window mismatch");
    BandedMatrix r = *this;
    for (const auto& [d, v] : o.diag_) {
        auto& dst = r.diag_[d];
        if (dst.empty()) dst.assign(size_, Rational(0));
        for (int i = 0; i < size_; ++i) dst[i] += v[i];
        r.prune(d);
    }
    return r;
}

BandedMatrix BandedMatrix::operator-(const BandedMatrix& o) const {
    return *this + o.scale(Rational(-1));
}

BandedMatrix BandedMatrix::scale(const Rational& c) const {
    BandedMatrix r(start_, size_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : diag_) {
        auto& dst = r.diag_[d];
        dst.assign(size_, Rational(0));
        for (int i = 0; i < size_; ++i) dst[i] = v[i] * c;
    }
    return r;
}

BandedMatrix BandedMatrix::operator*(const BandedMatrix& o) const {
    if (o.start_ != start_ || o.size_ != size_) throw BadInput("window mismatch");
    BandedMatrix r(start_, size_);
    for (const auto& [da, va] : diag_) {
        for (const auto& [db, vb] : o.diag_) {
            int d = da + db;
            std::vector<Rational>* dst = nullptr;
            for (int col = start_; col < start_ + size_; ++col) {
                // (this * o)(col - d, col) += this(k - da, k) o(k, col), k = col - db
                int k = col - db;
                if (!in_window(k) || !in_window(col - d)) continue;
                const Rational& x = va[k - start_];
                const Rational& y = vb[col - start_];
                if (x.is_zero() || y.is_zero()) continue;
                if (!dst) {
                    auto& vec = r.diag_[d];
                    if (vec.empty()) vec.assign(size_, Rational(0));
                    dst = &vec;
                }
                (*dst)[col - start_] += x * y;
            }
            if (dst) r.prune(d);
        }
    }
    return r;
}

BandedMatrix BandedMatrix::transpose() const {
    BandedMatrix r(start_, size_);
    for (const auto& [d, v] : diag_) {
        auto& dst = r.diag_[-d];
        dst.assign(size_, Rational(0));
        // entry (col-d, col) moves to (col, col-d): new col index is col-d.
        for (int col = start_; col < start_ + size_; ++col) {
            int nc = col - d;
            if (!in_window(nc)) continue;
            dst[nc - start_] = v[col - start_];
        }
        r.prune(-d);
    }
    return r;
}

BandedMatrix BandedMatrix::restrict_to(int new_size) const {
    if (new_size > size_) throw BadInput("cannot grow by restriction");
    BandedMatrix r(start_, new_size);
    for (const auto& [d, v] : diag_) {
        std::vector<Rational> dst(new_size, Rational(0));
        bool any = false;
        for (int col = start_; col < start_ + new_size; ++col) {
            int row = col - d;
            if (row < start_ || row >= start_ + new_size) continue;
            dst[col - start_] = v[col - start_];
            any = any || !dst[col - start_].is_zero();
        }
        if (any) r.diag_[d] = std::move(dst);
    }
    return r;
}

bool BandedMatrix::operator==(const BandedMatrix& o) const {
    return start_ == o.start_ && size_ == o.size_ && nonzeros() == o.nonzeros();
}

bool BandedMatrix::is_zero() const {
    for (const auto& [d, v] : diag_)
        for (const auto& x : v)
            if (!x.is_zero()) return false;
    return true;
}

Rational BandedMatrix::trace() const {
    Rational t(0);
    auto it = diag_.find(0);
    if (it == diag_.end()) return t;
    for (const auto& x : it->second) t += x;
    return t;
}

int BandedMatrix::rank() const {
    std::vector<std::vector<Rational>> m(size_, std::vector<Rational>(size_, Rational(0)));
    for (const auto& [row, col, v] : nonzeros()) m[row - start_][col - start_] = v;
    int rank = 0;
    int lead = 0;
    for (int col = 0; col < size_ && lead < size_; ++col) {
        int piv = -1;
        for (int r = lead; r < size_; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[lead]);
        Rational inv = m[lead][col].inv();
        for (int j = col; j < size_; ++j) m[lead][j] *= inv;
        for (int r = 0; r < size_; ++r) {
            if (r == lead || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int j = col; j < size_; ++j) m[r][j] -= f * m[lead][j];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

int BandedMatrix::support_bound() const {
    int b = start_ - 1;
    for (const auto& [row, col, v] : nonzeros()) b = std::max({b, row, col});
    return b;
}

std::vector<std::tuple<int, int, Rational>> BandedMatrix::nonzeros() const {
    std::vector<std::tuple<int, int, Rational>> out;
    for (const auto& [d, v] : diag_) {
        for (int col = start_; col < start_ + size_; ++col) {
            int row = col - d;
            if (!in_window(row)) continue;
            const Rational& x = v[col - start_];
            if (!x.is_zero()) out.emplace_back(row, col, x);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
}

BandedMatrix matrix_of(const GradedOp<Rational>& op, int size, int start) {
    BandedMatrix m(start, size);
    for (const auto& [d, s] : op.comp) {
        for (int col = start; col < start + size; ++col) {
            int row = col - d;
            if (row < start || row >= start + size) continue;
            Rational den = s.den().eval(Rational(col));
            if (den.is_zero()) throw ModuleUndefined(d, col);
            Rational v = s.num().eval(Rational(col)) / den;
            if (!v.is_zero()) m.set(row, col, v);
        }
    }
    return m;
}

namespace {

// Columns below `start` never contribute: the window starts at an invariant
// subspace boundary, so extension is only needed upward.
BandedMatrix L_ext(const Catalog<Rational>& cat, int k, int size, int start) {
    return matrix_of(cat.L(k), size, start);
}

} // namespace

BandedMatrix commutator_matrix(const Catalog<Rational>& cat, Family fam, int i, int j,
                               int size, int start) {
    int ext = size + std::abs(i) + std::abs(j);
    const GradedOp<Rational> a = fam == Family::L ? cat.L(i) : cat.J(i);
    const GradedOp<Rational> b = fam == Family::L ? cat.L(j) : cat.J(j);
    BandedMatrix A = matrix_of(a, ext, start), B = matrix_of(b, ext, start);
    return (A * B - B * A).restrict_to(size);
}

BandedMatrix defect_matrix(const Catalog<Rational>& cat, int i, int j, int size,
                           int start) {
    int ext = size + std::abs(i) + std::abs(j);
    BandedMatrix A = L_ext(cat, i, ext, start), B = L_ext(cat, j, ext, start);
    BandedMatrix C = L_ext(cat, i + j, ext, start);
    return (A * B - B * A - C.scale(Rational(i - j))).restrict_to(size);
}

BandedMatrix defect_matrix_J(const Catalog<Rational>& cat, int i, int j, int size,
                             int start) {
    return commutator_matrix(cat, Family::J, i, j, size, start);
}

BandedMatrix iterated_defect_matrix(const Catalog<Rational>& cat,
                                    std::span<const int> idx, int size, int start) {
    if (idx.size() < 2) throw BadInput("need at least two indices");
    int ext = size;
    for (int k : idx) ext += std::abs(k);
    BandedMatrix nested = L_ext(cat, idx[0], ext, start);
    std::map<int, Rational> abstract{{idx[0], Rational(1)}};
    for (size_t t = 1; t < idx.size(); ++t) {
        BandedMatrix m = L_ext(cat, idx[t], ext, start);
        nested = nested * m - m * nested;
        std::map<int, Rational> next;
        for (const auto& [k, c] : abstract) {
            Rational w = c * Rational(k - idx[t]);
            if (w.is_zero()) continue;
            next[k + idx[t]] += w;
            if (next[k + idx[t]].is_zero()) next.erase(k + idx[t]);
        }
        abstract = std::move(next);
    }
    BandedMatrix image(start, ext);
    for (const auto& [k, c] : abstract) image = image + L_ext(cat, k, ext, start).scale(c);
    return (nested - image).restrict_to(size);
}

BandedMatrix adjoint_residual(const Catalog<Rational>& cat, int k, int size, int start) {
    VermaBasis basis = verma_norms(cat.weight(), size, start);
    if (!basis.unitarizable) throw NonpositiveNorms();
    BandedMatrix G(start, size);
    for (int n = start; n < start + size; ++n) G.set(n, n, basis.norm(n));
    BandedMatrix X = matrix_of(cat.L(k), size, start);
    BandedMatrix Y = matrix_of(cat.L(-k), size, start);
    BandedMatrix R = G * X - Y.transpose() * G;
    int interior = start + size - std::abs(k);
    BandedMatrix out(start, size);
    for (const auto& [row, col, v] : R.nonzeros())
        if (row < interior && col < interior) out.set(row, col, v);
    return out;
}

HSReport hs_partial_norm(const BandedMatrix& a, const VermaBasis& basis,
                         const std::vector<int>& cutoffs) {
    if (!basis.unitarizable) throw NonpositiveNorms();
    if (basis.start != a.start() || basis.size() < a.size())
        throw BadInput("basis does not cover the matrix window");
    HSReport rep;
    // bucket[k]: total of squared orthonormalized entries with max index k.
    std::map<int, Rational> bucket;
    for (const auto& [row, col, v] : a.nonzeros()) {
        Rational w = v.square() * basis.norm(row) / basis.norm(col);
        bucket[std::max(row, col)] += w;
    }
    Rational run(0);
    auto it = bucket.begin();
    std::vector<int> sorted = cutoffs;
    std::sort(sorted.begin(), sorted.end());
    for (int n : sorted) {
        if (n > a.size() + a.start()) throw BadInput("cutoff beyond window");
        while (it != bucket.end() && it->first < n) {
            run += it->second;
            ++it;
        }
        rep.partial.emplace_back(n, run);
    }
    // Slope of the windowed average squared entry against the window edge.
    std::vector<double> xs, ys;
    for (size_t t = 1; t < rep.partial.size(); ++t) {
        Rational ds = rep.partial[t].second - rep.partial[t - 1].second;
        int dn = rep.partial[t].first - rep.partial[t - 1].first;
        if (ds.is_zero()) continue;
        xs.push_back(std::log(static_cast<double>(rep.partial[t].first)));
        ys.push_back(std::log(ds.to_double() / dn));
    }
    if (xs.empty()) {
        rep.slope = -std::numeric_limits<double>::infinity();
    } else if (xs.size() == 1) {
        rep.slope = 0.0;
    } else {
        double mx = 0, my = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= xs.size();
        my /= ys.size();
        double num = 0, den = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        rep.slope = den == 0 ? 0.0 : num / den;
    }
    if (rep.partial.size() >= 2) {
        const Rational& last = rep.partial.back().second;
        const Rational& prev = rep.partial[rep.partial.size() - 2].second;
        Rational diff = last - prev;
        rep.tail_estimate = diff.to_double();
        bool monotone = diff >= Rational(0);
        bool small_change = last.is_zero() ? diff.is_zero()
                                           : diff * Rational(1000000) < last;
        rep.converged = monotone && small_change &&
                        rep.slope <= -1.5;
    } else {
        rep.converged = false;
    }
    return rep;
}

RankReport finite_rank_scan(const std::function<BandedMatrix(int)>& build,
                            const std::vector<int>& truncations) {
    RankReport rep;
    for (int n : truncations) {
        BandedMatrix m = build(n);
        rep.rows.push_back({n, m.rank(), m.support_bound()});
    }
    rep.stable = !rep.rows.empty();
    for (const auto& r : rep.rows)
        if (r.rank != rep.rows[0].rank || r.support_bound != rep.rows[0].support_bound)
            rep.stable = false;
    return rep;
}

std::vector<int> matrix_vs_symbol_mismatch(const Catalog<Rational>& cat, int i, int j,
                                           int size, int start) {
    BandedMatrix exact = commutator_matrix(cat, Family::L, i, j, size, start);
    GradedOp<Rational> sym = op_commutator(cat.L(i), cat.L(j));
    std::vector<int> bad;
    for (int col = start; col < start + size; ++col) {
        bool mismatch = false;
        for (const auto& [d, s] : sym.comp) {
            int row = col - d;
            if (row < start || row >= start + size) continue;
            Rational den = s.den().eval(Rational(col));
            if (den.is_zero()) {
                mismatch = true;
                break;
            }
            if (exact.get(row, col) != s.num().eval(Rational(col)) / den) {
                mismatch = true;
                break;
            }
        }
        if (mismatch) bad.push_back(col);
    }
    return bad;
}

std::string matrix_to_csv(const BandedMatrix& m) {
    std::ostringstream os;
    os << "row,col,value\n";
    for (const auto& [row, col, v] : m.nonzeros())
        os << row << "," << col << "," << v.str() << "\n";
    return os.str();
}

} // namespace qrsym
