#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sigcalc/errors.hpp"

namespace sigcalc {

/// Exact rational scalar.  mpq_class keeps values canonicalized after every
/// arithmetic operation, which the whole engine relies on for == tests.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Render "p" for integers and "p/q" otherwise (the only two forms the JSON
/// and text emitters are allowed to produce — never floats).
inline std::string rat_str(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    if (is_integer(c)) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline int sign_of(const Rat& q) { return sgn(q); }

/**
 * Gaussian rational a + b·i: the scalar field for all su(n) matrix work.
 * Exactness policy: no floating point anywhere in the engine, so unitary
 * matrices, adjoint actions and determinant signs are all computed here.
 */
struct Gq {
    Rat re{0};
    Rat im{0};

    Gq() = default;
    Gq(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit Gq(long v) : re(v), im(0) {}

    static Gq zero() { return Gq(); }
    static Gq one() { return Gq(Rat(1), Rat(0)); }
    static Gq i() { return Gq(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    Gq conj() const { return Gq(re, -im); }

    Gq operator+(const Gq& o) const { return Gq(re + o.re, im + o.im); }
    Gq operator-(const Gq& o) const { return Gq(re - o.re, im - o.im); }
    Gq operator-() const { return Gq(-re, -im); }
    Gq operator*(const Gq& o) const {
        return Gq(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gq operator*(const Rat& s) const { return Gq(re * s, im * s); }

    Gq& operator+=(const Gq& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gq& operator-=(const Gq& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    bool operator==(const Gq& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gq& o) const { return !(*this == o); }

    /// Multiplicative inverse; division by zero is a logic error upstream.
    Gq inverse() const {
        Rat n = re * re + im * im;
        if (n == 0) throw ValueError("division by zero Gaussian rational");
        return Gq(re / n, -im / n);
    }

    std::string str() const {
        if (im == 0) return rat_str(re);
        if (re == 0) return rat_str(im) + "i";
        return rat_str(re) + (sgn(im) < 0 ? "" : "+") + rat_str(im) + "i";
    }
};

/// Dense complex matrix; all su(n) work is small (n ≤ 8), so vectors of
/// vectors are plenty and keep the code readable.
using CMat = std::vector<std::vector<Gq>>;

inline CMat cmat_zero(int rows, int cols) {
    return CMat(rows, std::vector<Gq>(cols));
}

inline CMat cmat_identity(int n) {
    CMat m = cmat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = Gq::one();
    return m;
}

inline CMat cmat_mul(const CMat& a, const CMat& b) {
    int r = (int)a.size(), mid = (int)b.size(), c = (int)b[0].size();
    CMat out = cmat_zero(r, c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < mid; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline CMat cmat_add(const CMat& a, const CMat& b) {
    CMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

inline CMat cmat_sub(const CMat& a, const CMat& b) {
    CMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

inline CMat cmat_neg(const CMat& a) {
    CMat out = a;
    for (auto& row : out)
        for (auto& x : row) x = -x;
    return out;
}

/// Conjugate transpose.
inline CMat cmat_dagger(const CMat& a) {
    int r = (int)a.size(), c = (int)a[0].size();
    CMat out = cmat_zero(c, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out[j][i] = a[i][j].conj();
    return out;
}

inline bool cmat_equal(const CMat& a, const CMat& b) { return a == b; }

/// Exact determinant by fraction-full Gaussian elimination (tiny matrices).
inline Gq cmat_det(CMat a) {
    int n = (int)a.size();
    Gq det = Gq::one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Gq::zero();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        Gq inv = a[col][col].inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Gq f = a[r][col] * inv;
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace sigcalc
