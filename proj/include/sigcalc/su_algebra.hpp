#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigcalc/errors.hpp"
#include "sigcalc/linalg.hpp"
#include "sigcalc/rational.hpp"

namespace sigcalc {

/// Skew-hermitian traceless n×n matrix over Gaussian rationals.
using AlgebraElement = CMat;

// --- standard su(n) building blocks -------------------------------------

inline AlgebraElement alg_u(int n, int j, int k) {  // E_jk − E_kj
    AlgebraElement m = cmat_zero(n, n);
    m[j][k] = Gq(1);
    m[k][j] = Gq(-1);
    return m;
}

inline AlgebraElement alg_v(int n, int j, int k) {  // i(E_jk + E_kj)
    AlgebraElement m = cmat_zero(n, n);
    m[j][k] = Gq(0, 1);
    m[k][j] = Gq(0, 1);
    return m;
}

inline AlgebraElement alg_t(int n, int a) {  // i(E_aa − E_nn), a in 0..n−2
    AlgebraElement m = cmat_zero(n, n);
    m[a][a] = Gq(0, 1);
    m[n - 1][n - 1] = Gq(0, -1);
    return m;
}

/// i·diag(vals); the caller keeps the entries summing to zero for su(n).
inline AlgebraElement alg_idiag(const std::vector<Rat>& vals) {
    int n = (int)vals.size();
    AlgebraElement m = cmat_zero(n, n);
    for (int j = 0; j < n; ++j) m[j][j] = Gq(Rat(0), vals[j]);
    return m;
}

inline AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
    return cmat_add(a, b);
}

inline AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b) {
    return cmat_sub(a, b);
}

inline AlgebraElement alg_scale(const Rat& c, const AlgebraElement& a) {
    AlgebraElement out = a;
    for (auto& row : out)
        for (auto& x : row) x = Gq(c) * x;
    return out;
}

inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    return cmat_sub(cmat_mul(x, y), cmat_mul(y, x));
}

inline bool is_su_element(const AlgebraElement& x) {
    int n = (int)x.size();
    Gq tr(0);
    for (int i = 0; i < n; ++i) {
        tr = tr + x[i][i];
        for (int j = 0; j < n; ++j)
            if (!(x[i][j] + x[j][i].conj()).is_zero()) return false;
    }
    return tr.is_zero();
}

/// The coordinate root planes (j,k), j<k, in lexicographic order.
inline std::vector<std::pair<int, int>> planes(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) out.emplace_back(j, k);
    return out;
}

// --- group elements -------------------------------------------------------

/// Unitary n×n matrix over Gaussian rationals with determinant 1.
struct GroupElement {
    CMat mat;
    bool generalized_permutation = false;

    int n() const { return (int)mat.size(); }
};

inline GroupElement group_identity(int n) { return {cmat_identity(n), true}; }

inline GroupElement group_inverse(const GroupElement& g) {
    return {cmat_dagger(g.mat), g.generalized_permutation};  // unitary: g⁻¹ = g†
}

/// Ad_g X = g·X·g⁻¹ (= g X g† for unitary g), exact.
inline AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
    return cmat_mul(cmat_mul(g.mat, x), cmat_dagger(g.mat));
}

inline Rat frobenius(const AlgebraElement& x, const AlgebraElement& y) {
    int n = (int)x.size();
    Rat s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += (x[i][j].conj() * y[i][j]).re;
    return s;
}

/**
 * Generalized permutation g with g·e_j = e^{2πiφ_j}·e_{σ(j)}: a permutation σ
 * plus one rational phase per column, reduced mod 1.  Exact group arithmetic
 * for fixed-point scans, orbit merging, and group-level witnesses.
 */
struct PhasedPerm {
    std::vector<int> sigma;  // 0-based, column j -> row σ(j)
    std::vector<Rat> phi;    // phases in [0,1)

    static Rat mod1(Rat x) {
        Int num = x.get_num(), den = x.get_den();
        Int r = num % den;
        if (r < 0) r += den;
        return Rat(r, den);
    }

    PhasedPerm() = default;
    PhasedPerm(std::vector<int> s, std::vector<Rat> p) : sigma(std::move(s)), phi(std::move(p)) {
        for (Rat& x : phi) x = mod1(x);
    }

    int n() const { return (int)sigma.size(); }

    PhasedPerm operator*(const PhasedPerm& o) const {
        int m = n();
        std::vector<int> s(m);
        std::vector<Rat> p(m);
        for (int j = 0; j < m; ++j) {
            s[j] = sigma[o.sigma[j]];
            p[j] = mod1(o.phi[j] + phi[o.sigma[j]]);
        }
        return PhasedPerm(std::move(s), std::move(p));
    }

    PhasedPerm inverse() const {
        int m = n();
        std::vector<int> si(m);
        for (int j = 0; j < m; ++j) si[sigma[j]] = j;
        std::vector<Rat> p(m);
        for (int j = 0; j < m; ++j) p[j] = mod1(-phi[si[j]]);
        return PhasedPerm(std::move(si), std::move(p));
    }

    bool operator==(const PhasedPerm& o) const { return sigma == o.sigma && phi == o.phi; }

    /// Matrix form; only quarter-integer phases have Gaussian-rational entries.
    CMat to_matrix() const {
        int m = n();
        CMat out = cmat_zero(m, m);
        for (int j = 0; j < m; ++j) {
            Gq e;
            if (phi[j] == Rat(0)) e = Gq(1);
            else if (phi[j] == Rat(1, 4)) e = Gq(0, 1);
            else if (phi[j] == Rat(1, 2)) e = Gq(-1);
            else if (phi[j] == Rat(3, 4)) e = Gq(0, -1);
            else throw std::logic_error("phase is not a quarter integer");
            out[sigma[j]][j] = e;
        }
        return out;
    }
};

inline int perm_sign(const std::vector<int>& sigma) {
    int m = (int)sigma.size();
    std::vector<char> seen(m, 0);
    int s = 1;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int j = i, c = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = sigma[j];
            ++c;
        }
        if (c % 2 == 0) s = -s;
    }
    return s;
}

/// Det-corrected representative of a permutation shape: phase 1/2 on column 0
/// exactly when the permutation is odd, so the matrix lands in SU(n).
inline PhasedPerm canonical_phased_perm(const std::vector<int>& sigma) {
    std::vector<Rat> phi(sigma.size(), Rat(0));
    if (perm_sign(sigma) < 0) phi[0] = Rat(1, 2);
    return PhasedPerm(sigma, phi);
}

inline PhasedPerm phased_identity(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return PhasedPerm(std::move(s), std::vector<Rat>(n, Rat(0)));
}

/**
 * Build a GroupElement from 1-based entry triples [row, col, tag] with
 * tag ∈ {"1","-1","i","-i"}: a generalized permutation matrix, checked to
 * have exactly one entry per row and column and determinant 1.
 */
inline GroupElement group_from_triples(int n,
                                       const std::vector<std::tuple<int, int, std::string>>& entries) {
    if ((int)entries.size() != n)
        throw ValueError("generalized permutation needs exactly " + std::to_string(n) +
                         " entries, got " + std::to_string(entries.size()));
    CMat m = cmat_zero(n, n);
    std::vector<int> row_used(n, 0), col_used(n, 0);
    std::vector<int> sigma(n, -1);
    std::vector<Rat> phi(n, Rat(0));
    for (const auto& [row1, col1, tag] : entries) {
        int r = row1 - 1, c = col1 - 1;
        if (r < 0 || r >= n || c < 0 || c >= n)
            throw ValueError("entry position out of range: [" + std::to_string(row1) + "," +
                             std::to_string(col1) + "]");
        if (row_used[r]++ || col_used[c]++)
            throw ValueError("duplicate row or column in generalized permutation");
        Gq e;
        Rat ph;
        if (tag == "1") { e = Gq(1); ph = Rat(0); }
        else if (tag == "-1") { e = Gq(-1); ph = Rat(1, 2); }
        else if (tag == "i") { e = Gq(0, 1); ph = Rat(1, 4); }
        else if (tag == "-i") { e = Gq(0, -1); ph = Rat(3, 4); }
        else throw ValueError("entry value must be one of \"1\",\"-1\",\"i\",\"-i\", got \"" + tag + "\"");
        m[r][c] = e;
        sigma[c] = r;
        phi[c] = ph;
    }
    // det = sgn(σ) · e^{2πi·Σφ}
    Rat total(0);
    for (const Rat& p : phi) total += p;
    total = PhasedPerm::mod1(total + (perm_sign(sigma) < 0 ? Rat(1, 2) : Rat(0)));
    if (total != Rat(0)) throw ValueError("generalized permutation has determinant != 1");
    return {m, true};
}

inline PhasedPerm to_phased_perm(const GroupElement& g) {
    int n = g.n();
    std::vector<int> sigma(n, -1);
    std::vector<Rat> phi(n, Rat(0));
    for (int c = 0; c < n; ++c) {
        int found = 0;
        for (int r = 0; r < n; ++r) {
            const Gq& e = g.mat[r][c];
            if (e.is_zero()) continue;
            ++found;
            sigma[c] = r;
            if (e == Gq(1)) phi[c] = Rat(0);
            else if (e == Gq(-1)) phi[c] = Rat(1, 2);
            else if (e == Gq(0, 1)) phi[c] = Rat(1, 4);
            else if (e == Gq(0, -1)) phi[c] = Rat(3, 4);
            else throw ValueError("matrix entry is not in {1,-1,i,-i}");
        }
        if (found != 1) throw ValueError("matrix is not a generalized permutation");
    }
    return PhasedPerm(std::move(sigma), std::move(phi));
}

// --- orientation bookkeeping ----------------------------------------------

/**
 * The reference orientation of su(n): the ordered basis
 *   i(E_00−E_{n−1,n−1}), …, i(E_{n−2,n−2}−E_{n−1,n−1}),
 * then per plane (j,k) in lex order the pair (E_jk−E_kj, i(E_jk+E_kj)).
 * `swapped` exchanges the first two torus vectors (global orientation
 * reversal, used by the invariance checks).
 */
struct OrientationConvention {
    int n = 0;
    bool swapped = false;

    std::vector<AlgebraElement> basis() const {
        std::vector<AlgebraElement> out;
        for (int a = 0; a < n - 1; ++a) out.push_back(alg_t(n, a));
        for (auto [j, k] : planes(n)) {
            out.push_back(alg_u(n, j, k));
            out.push_back(alg_v(n, j, k));
        }
        if (swapped && n >= 3) std::swap(out[0], out[1]);
        return out;
    }

    /**
     * Coordinates of X in the reference basis: Im X_aa for a < n−1, then per
     * plane (Re X_jk, Im X_jk).  Exact read-off; X must be skew-hermitian
     * traceless with purely imaginary diagonal.
     */
    QVec realify(const AlgebraElement& x) const {
        QVec out;
        out.reserve((size_t)n * n - 1);
        for (int a = 0; a < n - 1; ++a) {
            if (x[a][a].re != 0) throw std::logic_error("diagonal is not purely imaginary");
            out.push_back(x[a][a].im);
        }
        for (auto [j, k] : planes(n)) {
            out.push_back(x[j][k].re);
            out.push_back(x[j][k].im);
        }
        if (swapped && n >= 3) std::swap(out[0], out[1]);
        return out;
    }
};

// --- subspaces --------------------------------------------------------------

/// Ordered real subspace of su(n); the basis order carries the orientation.
struct Subspace {
    int n = 0;
    std::vector<AlgebraElement> basis;

    int dim() const { return (int)basis.size(); }
};

namespace detail {

inline QMat realify_all(const OrientationConvention& conv,
                        const std::vector<AlgebraElement>& mats) {
    QMat rows;
    rows.reserve(mats.size());
    for (const AlgebraElement& m : mats) rows.push_back(conv.realify(m));
    return rows;
}

/// Columns of `realified` vectors (each a coordinate vector) as a matrix.
inline QMat as_columns(const QMat& vectors) {
    if (vectors.empty()) return {};
    size_t d = vectors[0].size();
    QMat cols(d, QVec(vectors.size()));
    for (size_t c = 0; c < vectors.size(); ++c)
        for (size_t r = 0; r < d; ++r) cols[r][c] = vectors[c][r];
    return cols;
}

} // namespace detail

/**
 * Exact Frobenius orthocomplement of S in su(n).  The basis is deterministic:
 * each reference-convention basis vector is projected onto S⊥ and kept when
 * it increases the span.
 */
inline Subspace orth_complement(const Subspace& s, const OrientationConvention& conv) {
    int n = conv.n;
    int ambient = n * n - 1;
    int target = ambient - s.dim();

    // Gram matrix of the S basis and its use for exact projection
    QMat gram(s.dim(), QVec(s.dim(), Rat(0)));
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) gram[i][j] = frobenius(s.basis[i], s.basis[j]);

    Subspace out;
    out.n = n;
    QMat kept;  // realified coordinates of accepted vectors, for rank tracking
    for (const AlgebraElement& cand : conv.basis()) {
        if ((int)out.basis.size() == target) break;
        AlgebraElement proj = cand;
        if (s.dim() > 0) {
            QVec rhs(s.dim());
            for (int i = 0; i < s.dim(); ++i) rhs[i] = frobenius(s.basis[i], cand);
            auto coeff = solve(gram, rhs);
            if (!coeff) throw std::logic_error("dependent subspace basis in orth_complement");
            for (int i = 0; i < s.dim(); ++i)
                proj = alg_sub(proj, alg_scale((*coeff)[i], s.basis[i]));
        }
        QVec coords = conv.realify(proj);
        bool zero = std::all_of(coords.begin(), coords.end(),
                                [](const Rat& x) { return x == 0; });
        if (zero) continue;
        QMat trial = kept;
        trial.push_back(coords);
        if ((int)rank(trial) == (int)trial.size()) {
            kept = std::move(trial);
            out.basis.push_back(proj);
        }
    }
    if ((int)out.basis.size() != target)
        throw std::logic_error("orthocomplement dimension mismatch");
    return out;
}

/**
 * Sign of the change-of-basis determinant between two ordered bases of the
 * same real subspace, computed in realified coordinates.
 */
inline int orientation_det(const std::vector<AlgebraElement>& basis_a,
                           const std::vector<AlgebraElement>& basis_b,
                           const OrientationConvention& conv) {
    if (basis_a.size() != basis_b.size())
        throw NotSameSpan("ordered bases have different lengths");
    QMat ra = detail::realify_all(conv, basis_a);
    QMat rb = detail::realify_all(conv, basis_b);
    size_t k = ra.size();
    QMat joint = ra;
    joint.insert(joint.end(), rb.begin(), rb.end());
    if (rank(ra) != k || rank(rb) != k || rank(joint) != k)
        throw NotSameSpan("ordered bases do not span the same subspace");

    QMat acols = detail::as_columns(ra);
    QMat change(k, QVec(k));
    for (size_t j = 0; j < k; ++j) {
        auto sol = solve(acols, rb[j]);
        if (!sol) throw NotSameSpan("basis vector outside the first span");
        for (size_t i = 0; i < k; ++i) change[i][j] = (*sol)[i];
    }
    int s = det_sign(change);
    if (s == 0) throw NotSameSpan("degenerate change of basis");
    return s;
}

} // namespace sigcalc
