#pragma once

#include <optional>
#include <vector>

#include "sigcalc/errors.hpp"
#include "sigcalc/root_system.hpp"
#include "sigcalc/weyl.hpp"

namespace sigcalc {

/**
 * Input to the shared fixed-point signature kernel: one parity bit per
 * isolated fixed point (the parity of the number of negative rotation
 * numbers), optionally with the signed rotation numbers themselves.
 * Builders must not put a zero rotation number into m_lists.
 */
struct WeightSignSummary {
    std::vector<int> parities;  // 0 or 1 per fixed point
    std::optional<std::vector<std::vector<long long>>> m_lists;
};

/// σ = Σ over fixed points of (−1)^parity.
inline long long signature_kernel(const WeightSignSummary& summary) {
    long long sum = 0;
    for (int p : summary.parities) sum += (p % 2 == 0) ? 1 : -1;
    return sum;
}

struct HomogeneousReport {
    long long chi = 0;                 // number of fixed points, |W(G)|/|W(H)|
    long long signature = 0;           // raw signed sum; defined up to global sign
    std::vector<int> coset_signs;      // ±1 per coset representative (empty when dim ≢ 0 mod 4)
    long long outside_positive = 0;    // |Δ_G⁺ \ Δ_H| = half the real dimension of G/H
    bool parity_invariance = true;     // filled by the --check path
};

namespace detail {

inline long long count_outside_positive(const RootSystem& sys_G, const RootSystem& sys_H) {
    for (const Vec& r : sys_H.roots)
        if (!sys_G.contains(r)) throw NotASubsystem("Δ_H is not contained in Δ_G");
    long long count = 0;
    for (size_t i = 0; i < sys_G.roots.size(); ++i)
        if (sys_G.positive[i] && !sys_H.contains(sys_G.roots[i])) ++count;
    return count;
}

} // namespace detail

/**
 * Signature of the equal-rank homogeneous space attached to Δ_H ⊂ Δ_G, as the
 * signed coset sum Σ (−1)^{inversion_count_outside}.  The real dimension is
 * 2·|Δ_G⁺ \ Δ_H|; when that is ≡ 2 mod 4 the signature is 0 by convention and
 * the sum is skipped.  The result is defined up to one global sign.
 */
inline HomogeneousReport homogeneous_report(const RootSystem& sys_G, const RootSystem& sys_H) {
    HomogeneousReport rep;
    rep.outside_positive = detail::count_outside_positive(sys_G, sys_H);

    WeylGroup w_g = generate_weyl(sys_G);
    std::vector<Vec> h_gens;
    for (size_t i = 0; i < sys_H.roots.size(); ++i)
        if (sys_H.positive[i]) h_gens.push_back(sys_H.roots[i]);
    std::vector<WeylElement> w_h = generate_subgroup(sys_G, w_g, h_gens);
    rep.chi = (long long)(w_g.size() / w_h.size());

    if (rep.outside_positive % 2 != 0) {
        rep.signature = 0;  // dimension not divisible by four
        return rep;
    }

    CosetList cosets = left_cosets(sys_G, w_g, w_h);
    WeightSignSummary summary;
    for (const WeylElement& w : cosets.representatives) {
        int parity = inversion_count_outside(w, sys_G, sys_H) % 2;
        summary.parities.push_back(parity);
        rep.coset_signs.push_back(parity == 0 ? 1 : -1);
    }
    rep.signature = signature_kernel(summary);
    return rep;
}

inline long long homogeneous_signature(const RootSystem& sys_G, const RootSystem& sys_H) {
    return homogeneous_report(sys_G, sys_H).signature;
}

/// χ = |W(G)| / |W(H)| — the fixed-point count of a generic circle.
inline long long euler_characteristic_equal_rank(const RootSystem& sys_G,
                                                 const RootSystem& sys_H) {
    detail::count_outside_positive(sys_G, sys_H);  // containment validation
    WeylGroup w_g = generate_weyl(sys_G);
    std::vector<Vec> h_gens;
    for (size_t i = 0; i < sys_H.roots.size(); ++i)
        if (sys_H.positive[i]) h_gens.push_back(sys_H.roots[i]);
    std::vector<WeylElement> w_h = generate_subgroup(sys_G, w_g, h_gens);
    return (long long)(w_g.size() / w_h.size());
}

/**
 * Exhaustive check that the inverse-side inversion count has constant parity
 * on every class {h·w : h ∈ W(H)} — the well-definedness of the coset sum.
 */
inline bool coset_parity_invariance_check(const RootSystem& sys_G, const RootSystem& sys_H) {
    WeylGroup w_g = generate_weyl(sys_G);
    std::vector<Vec> h_gens;
    for (size_t i = 0; i < sys_H.roots.size(); ++i)
        if (sys_H.positive[i]) h_gens.push_back(sys_H.roots[i]);
    std::vector<WeylElement> w_h = generate_subgroup(sys_G, w_g, h_gens);
    for (const WeylElement& w : w_g.elements) {
        int base = inversion_count_outside(w, sys_G, sys_H) % 2;
        for (const WeylElement& h : w_h) {
            WeylElement hw = compose(h, w);
            if (inversion_count_outside(hw, sys_G, sys_H) % 2 != base) return false;
        }
    }
    return true;
}

} // namespace sigcalc
