#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigcalc/errors.hpp"
#include "sigcalc/su_algebra.hpp"

namespace sigcalc {

/**
 * One factor of H ⊂ G×G.  An SU(k) factor acts blockwise: its standard su(k)
 * basis is copied into every listed left block of the left G and every listed
 * right block of the right G (diagonally when a side lists several blocks).
 * A torus factor contributes circle subgroups s ↦ (diag(s^P), diag(s^Q)),
 * one per integer weight-row pair.
 */
struct FactorSpec {
    enum class Kind { SU, Torus };
    Kind kind = Kind::SU;
    int k = 0;                                        // SU(k) factors only
    std::vector<std::vector<int>> left_blocks;        // 0-based index lists of length k
    std::vector<std::vector<int>> right_blocks;
    std::vector<std::pair<Vec, Vec>> torus_weights;   // (P row, Q row), each length n
};

namespace detail {

inline void validate_blocks(int n, int k, const std::vector<std::vector<int>>& blocks,
                            const char* side) {
    std::vector<char> used(n, 0);
    for (const auto& b : blocks) {
        if ((int)b.size() != k)
            throw ValueError(std::string(side) + " block must list exactly " +
                             std::to_string(k) + " indices");
        for (int idx : b) {
            if (idx < 0 || idx >= n)
                throw ValueError(std::string(side) + " block index out of range");
            if (used[idx]++)
                throw ValueError(std::string(side) + " blocks of one factor must be disjoint");
        }
    }
}

/// Ordered oriented basis of su(k): torus part first, then (u, v) per plane.
inline std::vector<AlgebraElement> su_basis(int k) {
    std::vector<AlgebraElement> out;
    for (int a = 0; a < k - 1; ++a) out.push_back(alg_t(k, a));
    for (auto [j, kk] : planes(k)) {
        out.push_back(alg_u(k, j, kk));
        out.push_back(alg_v(k, j, kk));
    }
    return out;
}

inline AlgebraElement embed_block(int n, const std::vector<std::vector<int>>& blocks,
                                  const AlgebraElement& xk) {
    AlgebraElement m = cmat_zero(n, n);
    int k = (int)xk.size();
    for (const auto& b : blocks)
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) m[b[p]][b[q]] += xk[p][q];
    return m;
}

} // namespace detail

/**
 * Ordered oriented basis of 𝔥 ⊂ 𝔤⊕𝔤 as (X, Y) pairs of n×n matrices, factor
 * by factor, each SU(k) factor contributing its convention-ordered su(k)
 * basis.  The basis order defines the orientation of H.  Bracket
 * compatibility is verified on the generators: within a factor the embedding
 * must be a Lie algebra map, and distinct factors must commute.
 */
inline std::vector<std::pair<AlgebraElement, AlgebraElement>> embed_h(
    int n, const std::vector<FactorSpec>& factors) {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> basis;
    std::vector<size_t> factor_start;

    for (const FactorSpec& f : factors) {
        factor_start.push_back(basis.size());
        if (f.kind == FactorSpec::Kind::SU) {
            if (f.k < 2) throw ValueError("SU factor needs k >= 2");
            detail::validate_blocks(n, f.k, f.left_blocks, "left");
            detail::validate_blocks(n, f.k, f.right_blocks, "right");
            std::vector<AlgebraElement> small = detail::su_basis(f.k);
            for (const AlgebraElement& xk : small)
                basis.emplace_back(detail::embed_block(n, f.left_blocks, xk),
                                   detail::embed_block(n, f.right_blocks, xk));
            // homomorphism on this factor: embedding commutes with brackets
            for (size_t a = 0; a < small.size(); ++a)
                for (size_t b = a + 1; b < small.size(); ++b) {
                    AlgebraElement br = bracket(small[a], small[b]);
                    size_t ia = factor_start.back() + a, ib = factor_start.back() + b;
                    if (!cmat_equal(detail::embed_block(n, f.left_blocks, br),
                                    bracket(basis[ia].first, basis[ib].first)) ||
                        !cmat_equal(detail::embed_block(n, f.right_blocks, br),
                                    bracket(basis[ia].second, basis[ib].second)))
                        throw NotAHomomorphism("blockwise embedding is not a Lie algebra map");
                }
        } else {
            for (const auto& [p, q] : f.torus_weights) {
                if ((int)p.size() != n || (int)q.size() != n)
                    throw ValueError("torus weight rows must have length n");
                long long sp = 0, sq = 0;
                for (int x : p) sp += x;
                for (int x : q) sq += x;
                if (sp != 0 || sq != 0)
                    throw ValueError("torus weight rows must sum to zero (su(n) is traceless)");
                std::vector<Rat> pr(p.begin(), p.end()), qr(q.begin(), q.end());
                basis.emplace_back(alg_idiag(pr), alg_idiag(qr));
            }
        }
    }
    factor_start.push_back(basis.size());

    // distinct factors must commute in 𝔤⊕𝔤
    for (size_t f1 = 0; f1 + 1 < factor_start.size() - 1; ++f1)
        for (size_t f2 = f1 + 1; f2 + 1 < factor_start.size(); ++f2)
            for (size_t a = factor_start[f1]; a < factor_start[f1 + 1]; ++a)
                for (size_t b = factor_start[f2]; b < factor_start[f2 + 1]; ++b) {
                    AlgebraElement zl = bracket(basis[a].first, basis[b].first);
                    AlgebraElement zr = bracket(basis[a].second, basis[b].second);
                    bool ok = true;
                    for (const auto& row : zl)
                        for (const Gq& x : row) ok = ok && x.is_zero();
                    for (const auto& row : zr)
                        for (const Gq& x : row) ok = ok && x.is_zero();
                    if (!ok) throw NotAHomomorphism("factors of H do not commute");
                }
    return basis;
}

/**
 * Integer weight columns (L, R), each n×r, of the maximal torus of H: column
 * c is the pair of diagonal weight vectors of the c-th torus generator of H
 * in the factor order (SU(k) torus part first within each factor).
 */
inline std::pair<IMat, IMat> h_torus_columns(int n, const std::vector<FactorSpec>& factors) {
    std::vector<Vec> lc, rc;
    for (const FactorSpec& f : factors) {
        if (f.kind == FactorSpec::Kind::SU) {
            for (int a = 0; a < f.k - 1; ++a) {
                Vec l(n, 0), r(n, 0);
                for (const auto& b : f.left_blocks) {
                    l[b[a]] += 1;
                    l[b[f.k - 1]] -= 1;
                }
                for (const auto& b : f.right_blocks) {
                    r[b[a]] += 1;
                    r[b[f.k - 1]] -= 1;
                }
                lc.push_back(l);
                rc.push_back(r);
            }
        } else {
            for (const auto& [p, q] : f.torus_weights) {
                lc.push_back(p);
                rc.push_back(q);
            }
        }
    }
    int r = (int)lc.size();
    IMat L(n, std::vector<Int>(r)), R(n, std::vector<Int>(r));
    for (int c = 0; c < r; ++c)
        for (int j = 0; j < n; ++j) {
            L[j][c] = lc[c][j];
            R[j][c] = rc[c][j];
        }
    return {L, R};
}

namespace detail {

/// All det-corrected block permutation pairs of one SU(k) factor: the same
/// τ ∈ S_k applied to every block on both sides.
inline std::vector<std::pair<PhasedPerm, PhasedPerm>> su_factor_pairs(int n, const FactorSpec& f) {
    std::vector<std::pair<PhasedPerm, PhasedPerm>> out;
    std::vector<int> tau(f.k);
    for (int i = 0; i < f.k; ++i) tau[i] = i;
    do {
        std::vector<Rat> phi_k(f.k, Rat(0));
        if (perm_sign(tau) < 0) phi_k[0] = Rat(1, 2);
        auto embed = [&](const std::vector<std::vector<int>>& blocks) {
            std::vector<int> sig(n);
            std::vector<Rat> phi(n, Rat(0));
            for (int i = 0; i < n; ++i) sig[i] = i;
            for (const auto& b : blocks)
                for (int p = 0; p < f.k; ++p) {
                    sig[b[p]] = b[tau[p]];
                    phi[b[p]] = phi_k[p];
                }
            return PhasedPerm(std::move(sig), std::move(phi));
        };
        out.emplace_back(embed(f.left_blocks), embed(f.right_blocks));
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

} // namespace detail

/**
 * The exact (h₁, h₂) ∈ H pairs used for orbit deduplication: products over
 * factors of blockwise permutation representatives (torus factors contribute
 * only the identity; their phases are handled by the lattice solve).
 */
inline std::vector<std::pair<PhasedPerm, PhasedPerm>> symmetry_pairs(
    int n, const std::vector<FactorSpec>& factors) {
    std::vector<std::vector<std::pair<PhasedPerm, PhasedPerm>>> per_factor;
    for (const FactorSpec& f : factors) {
        if (f.kind == FactorSpec::Kind::SU)
            per_factor.push_back(detail::su_factor_pairs(n, f));
        else
            per_factor.push_back({{phased_identity(n), phased_identity(n)}});
    }
    std::vector<std::pair<PhasedPerm, PhasedPerm>> pairs{{phased_identity(n), phased_identity(n)}};
    for (const auto& options : per_factor) {
        std::vector<std::pair<PhasedPerm, PhasedPerm>> next;
        next.reserve(pairs.size() * options.size());
        for (const auto& [h1, h2] : pairs)
            for (const auto& [a, b] : options) next.emplace_back(h1 * a, h2 * b);
        pairs = std::move(next);
    }
    return pairs;
}

} // namespace sigcalc
