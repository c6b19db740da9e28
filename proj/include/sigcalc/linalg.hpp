#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sigcalc/rational.hpp"

namespace sigcalc {

using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;
using IMat = std::vector<std::vector<Int>>;

inline QMat qmat_zero(int rows, int cols) { return QMat(rows, QVec(cols, Rat(0))); }

/**
 * In-place reduced row echelon form.  Deterministic pivoting (first nonzero
 * row per column, top to bottom) so every caller — orthocomplement bases,
 * nullspace parametrizations, report output — is reproducible bit for bit.
 * Returns the pivot column indices.
 */
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(QMat m) { return (int)rref(m).size(); }

/// Solve A·x = b exactly; nullopt when inconsistent.  Free variables are set
/// to zero, so the returned solution is the deterministic rref particular one.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    QMat aug = qmat_zero(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][cols];
    return x;
}

/// Basis of {x : A·x = 0}, one vector per free column of the rref.
inline std::vector<QVec> nullspace(const QMat& a) {
    std::vector<QVec> basis;
    if (a.empty()) return basis;
    QMat m = a;
    std::vector<int> piv = rref(m);
    int cols = (int)a[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    for (size_t k = 0; k < piv.size(); ++k) pivot_of_col[piv[k]] = (int)k;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (int pc = 0; pc < cols; ++pc) {
            int pr = pivot_of_col[pc];
            if (pr >= 0) v[pc] = -m[pr][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact sign of det(A): −1, 0, or +1.
inline int det_sign(QMat a) {
    int n = (int)a.size();
    int s = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            s = -s;
        }
        if (sgn(a[c][c]) < 0) s = -s;
        Rat inv = 1 / a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] * inv;
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return s;
}

/// Does v lie in the span of the given column vectors?
inline bool in_span(const std::vector<QVec>& columns, const QVec& v) {
    if (columns.empty()) {
        for (const Rat& x : v)
            if (x != 0) return false;
        return true;
    }
    int dim = (int)v.size();
    QMat a = qmat_zero(dim, (int)columns.size());
    for (int j = 0; j < (int)columns.size(); ++j)
        for (int i = 0; i < dim; ++i) a[i][j] = columns[j][i];
    return solve(a, v).has_value();
}

/**
 * Diagonalization of an integer matrix by unimodular row/column operations:
 * U·M·V = D with D diagonal (no divisor-chain normalization — none of the
 * lattice arguments below need it).  U is rows×rows, V is cols×cols.
 */
struct SmithForm {
    IMat d;  // diagonal form, same shape as the input
    IMat u;  // unimodular, rows×rows
    IMat v;  // unimodular, cols×cols
    int rank = 0;
};

inline SmithForm smith_diagonalize(IMat m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    IMat u(rows, std::vector<Int>(rows, 0)), v(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;
    for (int j = 0; j < cols; ++j) v[j][j] = 1;

    auto row_sub = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
        for (int j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
        for (int i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // find a pivot in the remaining block
        int pr = -1, pc = -1;
        for (int i = t; i < rows && pr < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(m[pr], m[t]);
        std::swap(u[pr], u[t]);
        if (pc != t) {
            for (int i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][t]);
            for (int i = 0; i < cols; ++i) std::swap(v[i][pc], v[i][t]);
        }
        // Euclidean clearing of row t and column t
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];  // truncated division is fine here
                row_sub(i, t, q);
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[i], m[t]);
                    std::swap(u[i], u[t]);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                col_sub(j, t, q);
                if (m[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    for (int i = 0; i < cols; ++i) std::swap(v[i][j], v[i][t]);
                    dirty = true;
                }
            }
        }
        ++t;
    }
    SmithForm out;
    out.rank = t;
    out.d = std::move(m);
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

/**
 * Solve M·s ≡ d (mod Z^rows) for real s (returned as exact rationals), or
 * nullopt when no solution exists.  This is the lattice-congruence workhorse
 * behind fixed-point witnesses and orbit deduplication.
 */
inline std::optional<QVec> lattice_solve_mod1(const IMat& m, const QVec& d) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    if ((int)d.size() != rows) throw ValueError("lattice_solve_mod1: shape mismatch");
    SmithForm sf = smith_diagonalize(m);
    // rhs in the diagonal basis: (U·d)
    QVec ud(rows, Rat(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            if (sf.u[i][j] != 0) ud[i] += Rat(sf.u[i][j]) * d[j];
    QVec y(cols, Rat(0));
    for (int i = 0; i < rows; ++i) {
        Int dia = (i < cols) ? sf.d[i][i] : Int(0);
        if (dia != 0) {
            y[i] = ud[i] / Rat(dia);
        } else if (!is_integer(ud[i])) {
            return std::nullopt;  // zero row demands an integral rhs
        }
    }
    QVec s(cols, Rat(0));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j)
            if (sf.v[i][j] != 0) s[i] += Rat(sf.v[i][j]) * y[j];
    return s;
}

/// Index [ {s : M·s ∈ Z^rows} : Z^cols ] … returned as the product of the
/// nonzero diagonal divisors (the covolume reciprocal); nullopt if
/// rank(M) < required_rank, i.e. the solution set has positive dimension.
inline std::optional<Int> lattice_index(const IMat& m, int required_rank) {
    SmithForm sf = smith_diagonalize(m);
    if (sf.rank < required_rank) return std::nullopt;
    Int prod = 1;
    for (int i = 0; i < sf.rank; ++i) prod *= abs(sf.d[i][i]);
    return prod;
}

} // namespace sigcalc
