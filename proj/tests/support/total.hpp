#ifndef TLMP_TEST_TOTAL_HPP
#define TLMP_TEST_TOTAL_HPP

// The total algebra (g ⋈ h) ⋉ (V ⊕ W) built straight from the bracket rules
// on typed basis elements, without going through the library's semidirect
// or bicrossed constructions.  Basis order: g, V, h, W.

#include "support/fixtures.hpp"

#include <map>

namespace fx {

enum Kind { KX = 0, KA = 1, KV = 2, KW = 3 };

struct Total {
    std::size_t n, m, dv, dw;
    ThreeLie T;
    std::vector<Kind> kind;
    std::vector<std::size_t> local;

    std::size_t off(Kind k) const {
        switch (k) {
        case KX: return 0;
        case KV: return n;
        case KA: return n + dv;
        default: return n + dv + m;
        }
    }
};

inline Total total_algebra(const MatchedPair& p, const MPRepresentation& r) {
    Total t{p.g.dim(), p.h.dim(), r.V_dim, r.W_dim, ThreeLie(), {}, {}};
    std::size_t N = t.n + t.dv + t.m + t.dw;
    t.T = ThreeLie(N);
    for (auto [k, d] : std::vector<std::pair<Kind, std::size_t>>{{KX, t.n}, {KV, t.dv}, {KA, t.m}, {KW, t.dw}})
        for (std::size_t i = 0; i < d; ++i) {
            t.kind.push_back(k);
            t.local.push_back(i);
        }
    auto emb = [&](Kind k, const Vector& v) {
        Vector out = zeros(N);
        for (std::size_t i = 0; i < v.size(); ++i) out[t.off(k) + i] = v[i];
        return out;
    };
    for (auto [i0, j0, k0] : increasing_triples(N)) {
        // sort the three by kind rank x < a < v < w, tracking the sign
        std::array<std::size_t, 3> s{i0, j0, k0};
        int sign = 1;
        auto rank = [&](std::size_t b) { return int(t.kind[b]); };
        for (int pass = 0; pass < 2; ++pass)
            for (int q = 0; q < 2; ++q)
                if (rank(s[q]) > rank(s[q + 1])) {
                    std::swap(s[q], s[q + 1]);
                    sign = -sign;
                }
        Kind k1 = t.kind[s[0]], k2 = t.kind[s[1]], k3 = t.kind[s[2]];
        std::size_t i = t.local[s[0]], j = t.local[s[1]], k = t.local[s[2]];
        Vector val = zeros(N);
        if (k1 == KX && k2 == KX && k3 == KX) val = emb(KX, p.g.bracket(i, j, k));
        else if (k1 == KA && k2 == KA && k3 == KA) val = emb(KA, p.h.bracket(i, j, k));
        else if (k1 == KX && k2 == KX && k3 == KA) val = emb(KA, p.rho.at(i, j, k));
        else if (k1 == KX && k2 == KA && k3 == KA) val = emb(KX, p.psi.at(j, k, i)); // [x,a1,a2] = psi(a1,a2)x
        else if (k1 == KX && k2 == KX && k3 == KV) val = emb(KV, r.rhoV.at(i, j, k));
        else if (k1 == KA && k2 == KA && k3 == KV) val = emb(KV, r.psiV.at(i, j, k));
        else if (k1 == KX && k2 == KA && k3 == KV) val = emb(KW, r.alpha.at(k, i, j)); // [x,a,v] = [v,x,a]
        else if (k1 == KX && k2 == KX && k3 == KW) val = emb(KW, r.rhoW.at(i, j, k));
        else if (k1 == KA && k2 == KA && k3 == KW) val = emb(KW, r.psiW.at(i, j, k));
        else if (k1 == KX && k2 == KA && k3 == KW) val = -emb(KV, r.beta.at(k, j, i)); // [x,a,w] = -[w,a,x]
        if (sign < 0) val = -val;
        t.T.set_bracket(i0, j0, k0, val);
    }
    return t;
}

// key: counts of (x, a, v, w) in a 5-tuple
using Pattern = std::array<int, 4>;

// Jacobi over all tuples x1<x2, y1<y2<y3 of the total basis; returns the set
// of patterns on which it fails.
inline std::map<Pattern, bool> jacobi_by_pattern(const Total& t) {
    std::map<Pattern, bool> ok;
    std::size_t N = t.T.dim();
    const auto& T = t.T;
    for (auto [i, j] : increasing_pairs(N))
        for (auto [a, b, c] : increasing_triples(N)) {
            Pattern pat{0, 0, 0, 0};
            for (auto e : {i, j, a, b, c}) pat[t.kind[e]]++;
            Vector x1 = unit(N, i), x2 = unit(N, j), y1 = unit(N, a), y2 = unit(N, b), y3 = unit(N, c);
            bool good = T(x1, x2, T(y1, y2, y3)) ==
                        T(T(x1, x2, y1), y2, y3) + T(y1, T(x1, x2, y2), y3) + T(y1, y2, T(x1, x2, y3));
            auto it = ok.find(pat);
            if (it == ok.end()) ok[pat] = good;
            else it->second = it->second && good;
        }
    return ok;
}

} // namespace fx

#endif
