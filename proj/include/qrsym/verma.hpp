#ifndef QRSYM_VERMA_HPP
#define QRSYM_VERMA_HPP

#include <functional>
#include <optional>
#include <vector>

#include "qrsym/generators.hpp"

namespace qrsym {

// Squared norms of the monomial basis of the weight-h module, generated by
// the adjoint recursion g_n = n (n + 2h - 1) g_{n-1}, g_0 = 1. The closed
// form is n! (2h)(2h+1)...(2h+n-1). Positive for h > 0; otherwise the module
// carries no Hilbert space structure and HS analysis refuses to run.
struct VermaBasis {
    Rational h;
    int start = 0;                 // first basis exponent (quotient runs use 1)
    std::vector<Rational> norms;   // norms[i] = g_{start+i}
    bool unitarizable = false;

    int size() const { return static_cast<int>(norms.size()); }
    const Rational& norm(int n) const { return norms.at(n - start); }
};

VermaBasis verma_norms(const Rational& h, int count, int start = 0);
Rational verma_norm_closed_form(const Rational& h, int n);

// Exact banded matrix on the basis window [start, start + size). Entries are
// stored per diagonal: key d holds the entries (col - d, col), matching the
// operator grading (a degree-d symbol writes to row col - d).
class BandedMatrix {
  public:
    BandedMatrix(int start, int size) : start_(start), size_(size) {}

    int start() const { return start_; }
    int size() const { return size_; }
    int bandwidth() const;

    Rational get(int row, int col) const;
    void set(int row, int col, const Rational& v);
    bool in_window(int idx) const { return idx >= start_ && idx < start_ + size_; }

    BandedMatrix operator+(const BandedMatrix& o) const;
    BandedMatrix operator-(const BandedMatrix& o) const;
    BandedMatrix operator*(const BandedMatrix& o) const;  // window-local product
    BandedMatrix scale(const Rational& c) const;
    BandedMatrix transpose() const;
    BandedMatrix restrict_to(int new_size) const;
    bool operator==(const BandedMatrix& o) const;
    bool is_zero() const;

    Rational trace() const;
    int rank() const;                  // exact Gaussian elimination
    int support_bound() const;         // largest index on a nonzero row/col, start-1 if zero

    // (row, col, value), sorted by (row, col).
    std::vector<std::tuple<int, int, Rational>> nonzeros() const;

    const std::map<int, std::vector<Rational>>& diagonals() const { return diag_; }

  private:
    void prune(int d);
    int start_, size_;
    std::map<int, std::vector<Rational>> diag_;  // diag_[d][col - start]
};

// Exact truncation of the infinite matrix of a concrete-weight operator.
// Throws ModuleUndefined when a symbol denominator vanishes at a reachable
// basis index.
BandedMatrix matrix_of(const GradedOp<Rational>& op, int size, int start = 0);

// Composites are built from generator matrices on an extended window and
// restricted, so every retained entry equals the infinite-matrix entry.
BandedMatrix defect_matrix(const Catalog<Rational>& cat, int i, int j, int size,
                           int start = 0);
BandedMatrix defect_matrix_J(const Catalog<Rational>& cat, int i, int j, int size,
                             int start = 0);
BandedMatrix iterated_defect_matrix(const Catalog<Rational>& cat,
                                    std::span<const int> idx, int size, int start = 0);
BandedMatrix commutator_matrix(const Catalog<Rational>& cat, Family fam, int i, int j,
                               int size, int start = 0);

// G M(l_i) - M(l_{-i})^T G on the interior band (both indices below
// start + size - bandwidth); the truncation edge is excluded.
BandedMatrix adjoint_residual(const Catalog<Rational>& cat, int k, int size,
                              int start = 0);

struct HSReport {
    std::vector<std::pair<int, Rational>> partial;  // (N, S_N), exact
    double slope = 0.0;          // approx: log-log fit of windowed term density
    bool converged = false;
    double tail_estimate = 0.0;  // approx: last window increment
};

// S_N = sum_{m,n < N} A(m,n)^2 g_m / g_n in exact arithmetic; the slope and
// tail fields are diagnostic floats. Convergence requires slope <= -1.5 and
// relative change below 1e-6 between the two largest cutoffs.
HSReport hs_partial_norm(const BandedMatrix& a, const VermaBasis& basis,
                         const std::vector<int>& cutoffs);

struct RankReport {
    struct Row {
        int truncation;
        int rank;
        int support_bound;
    };
    std::vector<Row> rows;
    bool stable = false;
};

RankReport finite_rank_scan(const std::function<BandedMatrix(int)>& build,
                            const std::vector<int>& truncations);

// Basis indices where the reduced composite symbol of [L_i, L_j] disagrees
// with the true matrix action. Empty at generic weight; at the special
// weights the reduction crosses removable singularities.
std::vector<int> matrix_vs_symbol_mismatch(const Catalog<Rational>& cat, int i, int j,
                                           int size, int start = 0);

std::string matrix_to_csv(const BandedMatrix& m);

} // namespace qrsym

#endif
