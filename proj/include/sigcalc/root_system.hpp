#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigcalc/errors.hpp"
#include "sigcalc/linalg.hpp"

namespace sigcalc {

/// Ambient integer coordinates of a root (type A lives in Z^{rank+1} with
/// coordinate sum zero; F4 is stored uniformly doubled so that every family
/// has integer ambient coordinates).
using Vec = std::vector<int>;

struct VecHash {
    size_t operator()(const Vec& v) const {
        uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= (uint64_t)(int64_t)x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

inline long long vdot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
    return s;
}

/// Reflection of v in the hyperplane orthogonal to root a (exact; the Cartan
/// ratio is integral whenever both vectors belong to one crystallographic
/// root system).
inline Vec reflect(const Vec& v, const Vec& a) {
    long long num = 2 * vdot(v, a), den = vdot(a, a);
    if (den == 0 || num % den != 0)
        throw NotARoot("reflection ratio is not integral");
    long long c = num / den;
    Vec out = v;
    for (size_t i = 0; i < v.size(); ++i) out[i] = (int)(v[i] - c * a[i]);
    return out;
}

/**
 * A root system (or an equal-rank subsystem of one) with a fixed positive
 * choice.  Construction precomputes, for every root, its integer coordinates
 * in the simple-root basis: the Weyl layer stores its matrices in that basis,
 * where they are integral for every supported family.
 */
struct RootSystem {
    std::string family;  // A, B, C, D, G2, F4
    int rank = 0;        // rank of the parent family label
    int ambient = 0;     // ambient coordinate dimension

    std::vector<Vec> roots;      // positives first, then their negatives
    std::vector<char> positive;  // flag per roots[] index
    std::vector<Vec> simples;    // ordered (lexicographically)

    std::unordered_map<Vec, int, VecHash> index;
    std::vector<std::vector<int>> simple_coords;  // per root, in simples basis
    std::unordered_map<Vec, int, VecHash> simple_index;  // simple-coords -> root

    bool contains(const Vec& r) const { return index.count(r) > 0; }

    int index_of(const Vec& r) const {
        auto it = index.find(r);
        if (it == index.end()) throw NotARoot("vector is not a root of this system");
        return it->second;
    }

    size_t positive_count() const {
        size_t c = 0;
        for (char f : positive) c += (f != 0);
        return c;
    }
};

namespace detail {

inline std::vector<Vec> minimal_positives(const std::vector<Vec>& positives) {
    std::set<Vec> pos(positives.begin(), positives.end());
    std::vector<Vec> simples;
    for (const Vec& p : positives) {
        bool is_sum = false;
        for (const Vec& a : positives) {
            Vec d(p.size());
            for (size_t i = 0; i < p.size(); ++i) d[i] = p[i] - a[i];
            if (d == a || !pos.count(d)) continue;
            is_sum = true;
            break;
        }
        if (!is_sum) simples.push_back(p);
    }
    std::sort(simples.begin(), simples.end());
    return simples;
}

inline void finalize(RootSystem& sys, std::vector<Vec> positives) {
    std::sort(positives.begin(), positives.end());
    sys.roots.clear();
    sys.positive.clear();
    sys.index.clear();
    for (const Vec& p : positives) {
        sys.index[p] = (int)sys.roots.size();
        sys.roots.push_back(p);
        sys.positive.push_back(1);
    }
    for (const Vec& p : positives) {
        Vec m(p.size());
        for (size_t i = 0; i < p.size(); ++i) m[i] = -p[i];
        sys.index[m] = (int)sys.roots.size();
        sys.roots.push_back(m);
        sys.positive.push_back(0);
    }
    sys.simples = minimal_positives(positives);

    // integer coordinates of every root in the simple basis
    sys.simple_coords.assign(sys.roots.size(), {});
    sys.simple_index.clear();
    if (sys.simples.empty()) return;
    int s = (int)sys.simples.size();
    QMat a = qmat_zero(sys.ambient, s);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < sys.ambient; ++i) a[i][j] = sys.simples[j][i];
    for (size_t r = 0; r < sys.roots.size(); ++r) {
        QVec b(sys.ambient);
        for (int i = 0; i < sys.ambient; ++i) b[i] = sys.roots[r][i];
        auto x = solve(a, b);
        if (!x) throw NotASubsystem("root outside the span of the simple roots");
        std::vector<int> coords(s);
        for (int j = 0; j < s; ++j) {
            if (!is_integer((*x)[j]))
                throw NotASubsystem("non-integral simple-root coordinates");
            coords[j] = (int)(*x)[j].get_num().get_si();
        }
        sys.simple_coords[r] = coords;
        sys.simple_index[Vec(coords.begin(), coords.end())] = (int)r;
    }
}

} // namespace detail

/**
 * Standard root system for one of the families A, B, C, D, G2, F4 with the
 * conventional positive choice (type A: e_i − e_j, i < j).  G2 is realized in
 * the sum-zero sublattice of Z^3; F4 coordinates are doubled to stay integral.
 */
inline RootSystem build_root_system(const std::string& family, int rank) {
    RootSystem sys;
    sys.family = family;
    sys.rank = rank;
    std::vector<Vec> pos;

    auto unit = [](int dim, int i, int s) {
        Vec v(dim, 0);
        v[i] = s;
        return v;
    };

    if (family == "A") {
        if (rank < 1) throw InvalidType("type A requires rank >= 1");
        sys.ambient = rank + 1;
        for (int i = 0; i < sys.ambient; ++i)
            for (int j = i + 1; j < sys.ambient; ++j) {
                Vec v(sys.ambient, 0);
                v[i] = 1;
                v[j] = -1;
                pos.push_back(v);
            }
    } else if (family == "B") {
        if (rank < 1) throw InvalidType("type B requires rank >= 1");
        sys.ambient = rank;
        for (int i = 0; i < rank; ++i) pos.push_back(unit(rank, i, 1));
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                for (int s : {1, -1}) {
                    Vec v(rank, 0);
                    v[i] = 1;
                    v[j] = s;
                    pos.push_back(v);
                }
    } else if (family == "C") {
        if (rank < 1) throw InvalidType("type C requires rank >= 1");
        sys.ambient = rank;
        for (int i = 0; i < rank; ++i) pos.push_back(unit(rank, i, 2));
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                for (int s : {1, -1}) {
                    Vec v(rank, 0);
                    v[i] = 1;
                    v[j] = s;
                    pos.push_back(v);
                }
    } else if (family == "D") {
        if (rank < 2) throw InvalidType("type D requires rank >= 2");
        sys.ambient = rank;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                for (int s : {1, -1}) {
                    Vec v(rank, 0);
                    v[i] = 1;
                    v[j] = s;
                    pos.push_back(v);
                }
    } else if (family == "G2") {
        if (rank != 2) throw InvalidType("G2 has rank 2");
        sys.ambient = 3;
        pos = {Vec{1, -1, 0}, Vec{-2, 1, 1}, Vec{-1, 0, 1},
               Vec{0, -1, 1}, Vec{1, -2, 1}, Vec{-1, -1, 2}};
    } else if (family == "F4") {
        if (rank != 4) throw InvalidType("F4 has rank 4");
        sys.ambient = 4;
        for (int i = 0; i < 4; ++i) pos.push_back(unit(4, i, 2));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int s : {1, -1}) {
                    Vec v(4, 0);
                    v[i] = 2;
                    v[j] = 2 * s;
                    pos.push_back(v);
                }
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) pos.push_back(Vec{1, s1, s2, s3});
    } else {
        throw InvalidType("unsupported family: " + family);
    }

    detail::finalize(sys, std::move(pos));
    return sys;
}

/**
 * Smallest subset of sys.roots containing the generators and closed under
 * negation and mutual reflection; positivity is inherited.  The result keeps
 * the parent's family label and ambient coordinates.
 */
inline RootSystem sub_root_system(const RootSystem& sys, const std::vector<Vec>& generators) {
    for (const Vec& g : generators)
        if (!sys.contains(g)) throw NotARoot("subsystem generator is not a root");
    std::set<Vec> closure;
    for (const Vec& g : generators) {
        closure.insert(g);
        Vec m(g.size());
        for (size_t i = 0; i < g.size(); ++i) m[i] = -g[i];
        closure.insert(m);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> cur(closure.begin(), closure.end());
        for (const Vec& a : cur)
            for (const Vec& b : cur) {
                Vec r = reflect(b, a);
                if (!sys.contains(r))
                    throw NotASubsystem("reflection closure escapes the parent system");
                if (closure.insert(r).second) grew = true;
            }
    }
    RootSystem sub;
    sub.family = sys.family;
    sub.rank = sys.rank;
    sub.ambient = sys.ambient;
    std::vector<Vec> positives;
    for (const Vec& r : closure)
        if (sys.positive[sys.index_of(r)]) positives.push_back(r);
    detail::finalize(sub, std::move(positives));
    return sub;
}

/// Positivity test; rejects vectors outside the system.
inline bool is_positive(const RootSystem& sys, const Vec& r) {
    return sys.positive[sys.index_of(r)] != 0;
}

} // namespace sigcalc
