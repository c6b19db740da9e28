#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sigcalc/errors.hpp"
#include "sigcalc/root_system.hpp"

namespace sigcalc {

/**
 * One Weyl group element.  The matrix acts on the root lattice in the
 * simple-root basis of its parent system, where it is integral for every
 * supported family (ambient-coordinate matrices are not integral for G2/F4).
 * The inverse is carried along so inverse-side inversion counts cost nothing,
 * and the word is a reduced expression in simple-reflection indices.
 */
struct WeylElement {
    int dim = 0;               // number of simple roots
    std::vector<int> mat;      // dim×dim, row-major
    std::vector<int> inv;      // inverse matrix
    std::vector<int> word;     // reduced word (empty for the identity)

    bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

struct WeylGroup {
    std::vector<WeylElement> elements;                 // BFS order: identity first
    std::unordered_map<Vec, int, VecHash> index;       // matrix -> position

    size_t size() const { return elements.size(); }
    bool contains_matrix(const std::vector<int>& m) const { return index.count(m) > 0; }
    const WeylElement& identity() const { return elements.front(); }
};

/// Ordered minimal-length coset representatives of W(H) in W(G).
struct CosetList {
    std::vector<WeylElement> representatives;
};

namespace detail {

inline std::vector<int> imat_identity(int n) {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

inline std::vector<int> imat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
    std::vector<int> out(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

inline std::vector<int> imat_apply(const std::vector<int>& m, const std::vector<int>& x, int n) {
    std::vector<int> y(n, 0);
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j) acc += m[i * n + j] * x[j];
        y[i] = acc;
    }
    return y;
}

inline long long weyl_cap_from_env() {
    const long long kDefault = 2000000;
    const char* s = std::getenv("SIGCALC_WEYL_CAP");
    if (!s || !*s) return kDefault;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0) return kDefault;
    return v;
}

} // namespace detail

/// Apply w to a root of sys (exact; the image is again a root).
inline Vec act(const RootSystem& sys, const WeylElement& w, const Vec& r) {
    int idx = sys.index_of(r);
    std::vector<int> y = detail::imat_apply(w.mat, sys.simple_coords[idx], w.dim);
    auto it = sys.simple_index.find(y);
    if (it == sys.simple_index.end())
        throw NotARoot("Weyl image is not a root (corrupt element)");
    return sys.roots[it->second];
}

/// Apply w⁻¹ to a root and report whether the image is positive.
inline bool inverse_image_positive(const RootSystem& sys, const WeylElement& w, int root_idx) {
    std::vector<int> y = detail::imat_apply(w.inv, sys.simple_coords[root_idx], w.dim);
    auto it = sys.simple_index.find(y);
    if (it == sys.simple_index.end())
        throw NotARoot("Weyl image is not a root (corrupt element)");
    return sys.positive[it->second] != 0;
}

/**
 * Full Weyl group by breadth-first closure over the simple reflections.
 * BFS depth equals word length, so every element's stored word is reduced.
 * Throws GroupTooLarge beyond the cap (default 2,000,000; override with the
 * SIGCALC_WEYL_CAP environment variable).
 */
inline WeylGroup generate_weyl(const RootSystem& sys) {
    const long long cap = detail::weyl_cap_from_env();
    int s = (int)sys.simples.size();
    WeylGroup group;

    WeylElement id;
    id.dim = s;
    id.mat = detail::imat_identity(s);
    id.inv = id.mat;
    group.index[id.mat] = 0;
    group.elements.push_back(id);
    if (s == 0) return group;

    // simple reflection matrices: s_i(α_j) = α_j − C(i,j) α_i
    std::vector<std::vector<int>> gens(s);
    for (int i = 0; i < s; ++i) {
        std::vector<int> m = detail::imat_identity(s);
        long long den = vdot(sys.simples[i], sys.simples[i]);
        for (int j = 0; j < s; ++j) {
            long long num = 2 * vdot(sys.simples[j], sys.simples[i]);
            m[i * s + j] -= (int)(num / den);
        }
        gens[i] = m;
    }

    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int at = frontier.front();
        frontier.pop_front();
        for (int i = 0; i < s; ++i) {
            std::vector<int> nm = detail::imat_mul(gens[i], group.elements[at].mat, s);
            if (group.index.count(nm)) continue;
            if ((long long)group.elements.size() >= cap)
                throw GroupTooLarge("Weyl enumeration exceeds the cap of " +
                                    std::to_string(cap) + " elements");
            WeylElement w;
            w.dim = s;
            w.inv = detail::imat_mul(group.elements[at].inv, gens[i], s);
            w.word.reserve(group.elements[at].word.size() + 1);
            w.word.push_back(i);
            w.word.insert(w.word.end(), group.elements[at].word.begin(),
                          group.elements[at].word.end());
            w.mat = std::move(nm);
            group.index[w.mat] = (int)group.elements.size();
            frontier.push_back((int)group.elements.size());
            group.elements.push_back(std::move(w));
        }
    }
    return group;
}

/// Compose two elements of the same group (v after w).
inline WeylElement compose(const WeylElement& v, const WeylElement& w) {
    WeylElement out;
    out.dim = v.dim;
    out.mat = detail::imat_mul(v.mat, w.mat, v.dim);
    out.inv = detail::imat_mul(w.inv, v.inv, v.dim);
    out.word = v.word;
    out.word.insert(out.word.end(), w.word.begin(), w.word.end());  // not reduced
    return out;
}

/// The reflection in a given root, as an element of W(sys_G); its canonical
/// reduced word is looked up in the enumerated group.
inline WeylElement reflection_of(const RootSystem& sys, const WeylGroup& group, const Vec& root) {
    int s = (int)sys.simples.size();
    WeylElement w;
    w.dim = s;
    w.mat.assign(s * s, 0);
    for (int j = 0; j < s; ++j) {
        Vec img = reflect(sys.simples[j], root);
        const std::vector<int>& coords = sys.simple_coords[sys.index_of(img)];
        for (int k = 0; k < s; ++k) w.mat[k * s + j] = coords[k];
    }
    w.inv = w.mat;  // reflections are involutions
    auto it = group.index.find(w.mat);
    if (it == group.index.end()) throw NotARoot("reflection is not in the Weyl group");
    w.word = group.elements[it->second].word;
    return w;
}

/**
 * Subgroup of W(G) generated by the reflections in the given roots, as
 * canonical elements of the enumerated parent group (so words stay reduced).
 */
inline std::vector<WeylElement> generate_subgroup(const RootSystem& sys, const WeylGroup& group,
                                                  const std::vector<Vec>& generator_roots) {
    std::unordered_set<int> seen;
    std::vector<int> order;
    std::vector<WeylElement> gens;
    for (const Vec& r : generator_roots) gens.push_back(reflection_of(sys, group, r));

    int id_pos = group.index.at(detail::imat_identity((int)sys.simples.size()));
    seen.insert(id_pos);
    order.push_back(id_pos);
    std::deque<int> frontier{id_pos};
    while (!frontier.empty()) {
        int at = frontier.front();
        frontier.pop_front();
        for (const WeylElement& g : gens) {
            std::vector<int> nm =
                detail::imat_mul(g.mat, group.elements[at].mat, g.dim);
            auto it = group.index.find(nm);
            if (it == group.index.end())
                throw NotASubgroup("generated element escapes the parent group");
            if (seen.insert(it->second).second) {
                order.push_back(it->second);
                frontier.push_back(it->second);
            }
        }
    }
    std::sort(order.begin(), order.end());  // parent BFS order: deterministic
    std::vector<WeylElement> out;
    out.reserve(order.size());
    for (int p : order) out.push_back(group.elements[p]);
    return out;
}

namespace detail {

/// Subgroup sanity: identity, inverses, and closure.  Exhaustive pairwise
/// closure for small subgroups; for large ones closure is checked against the
/// subgroup's own reflections (its Coxeter generators), which is what every
/// genuine reflection subgroup satisfies.
inline void check_subgroup(const RootSystem& sys, const WeylGroup& w_g,
                           const std::vector<WeylElement>& w_h,
                           const std::unordered_set<Vec, VecHash>& h_mats) {
    int s = (int)sys.simples.size();
    if (!h_mats.count(imat_identity(s)))
        throw NotASubgroup("W(H) does not contain the identity");
    for (const WeylElement& h : w_h) {
        if (!w_g.contains_matrix(h.mat))
            throw NotASubgroup("W(H) element outside W(G)");
        if (!h_mats.count(h.inv)) throw NotASubgroup("W(H) not closed under inverse");
    }
    if (w_h.size() <= 2000) {
        for (const WeylElement& a : w_h)
            for (const WeylElement& b : w_h)
                if (!h_mats.count(imat_mul(a.mat, b.mat, s)))
                    throw NotASubgroup("W(H) not closed under composition");
    } else {
        std::vector<const WeylElement*> refl;
        for (const WeylElement& h : w_h)
            if (!h.word.empty() && imat_mul(h.mat, h.mat, s) == imat_identity(s))
                refl.push_back(&h);
        for (const WeylElement& a : w_h)
            for (const WeylElement* r : refl)
                if (!h_mats.count(imat_mul(a.mat, r->mat, s)))
                    throw NotASubgroup("W(H) not closed under composition");
    }
}

} // namespace detail

/**
 * Minimal-length representatives, one per coset of W(H) in W(G).  The engine
 * clusters {h·w : h ∈ W(H)}; on those classes the inverse-side inversion
 * count below has constant parity, which is what makes the homogeneous
 * signature sum well-defined.  The minimal representative of a class is the
 * unique element mapping every H-simple root to a positive root under w⁻¹.
 */
inline CosetList left_cosets(const RootSystem& sys_G, const WeylGroup& w_g,
                             const std::vector<WeylElement>& w_h) {
    std::unordered_set<Vec, VecHash> h_mats;
    for (const WeylElement& h : w_h) h_mats.insert(h.mat);
    if (h_mats.size() != w_h.size()) throw NotASubgroup("duplicate W(H) elements");
    detail::check_subgroup(sys_G, w_g, w_h, h_mats);

    // Δ_H⁺ read off from the reflections contained in W(H)
    std::vector<Vec> h_positives;
    for (size_t i = 0; i < sys_G.roots.size(); ++i) {
        if (!sys_G.positive[i]) continue;
        WeylElement refl = reflection_of(sys_G, w_g, sys_G.roots[i]);
        if (h_mats.count(refl.mat)) h_positives.push_back(sys_G.roots[i]);
    }
    std::vector<Vec> h_simples = detail::minimal_positives(h_positives);

    CosetList out;
    for (const WeylElement& w : w_g.elements) {
        bool minimal = true;
        for (const Vec& alpha : h_simples) {
            if (!inverse_image_positive(sys_G, w, sys_G.index_of(alpha))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.representatives.push_back(w);
    }
    if (out.representatives.size() * w_h.size() != w_g.size())
        throw NotASubgroup("coset representative count does not tile the group");
    std::sort(out.representatives.begin(), out.representatives.end(),
              [](const WeylElement& a, const WeylElement& b) {
                  if (a.word.size() != b.word.size())
                      return a.word.size() < b.word.size();
                  return a.word < b.word;
              });
    return out;
}

/// #{α ∈ Δ_G⁺ \ Δ_H : w⁻¹(α) negative}.
inline int inversion_count_outside(const WeylElement& w, const RootSystem& sys_G,
                                   const RootSystem& sys_H) {
    for (const Vec& r : sys_H.roots)
        if (!sys_G.contains(r)) throw NotASubsystem("Δ_H is not contained in Δ_G");
    int count = 0;
    for (size_t i = 0; i < sys_G.roots.size(); ++i) {
        if (!sys_G.positive[i] || sys_H.contains(sys_G.roots[i])) continue;
        if (!inverse_image_positive(sys_G, w, (int)i)) ++count;
    }
    return count;
}

} // namespace sigcalc
