#ifndef TLMP_TEST_GENERIC_HPP
#define TLMP_TEST_GENERIC_HPP

// Coordinate-free D1 / D2 over the total algebra: cochains are alternating
// maps on the base g ⊕ h with values in V ⊕ W, actions are brackets in the
// total algebra.

#include "support/total.hpp"

namespace fx {

struct Generic {
    Total t;
    std::size_t n, m, base, N;
    AltTrilinear C; // base^3 -> total
    Matrix F;       // base -> total (1-cochain)

    Generic(const MatchedPair& p, const MPRepresentation& r)
        : t(total_algebra(p, r)), n(p.g.dim()), m(p.h.dim()), base(n + m), N(t.T.dim()) {}

    // base index -> total basis vector
    Vector lift(std::size_t b) const { return b < n ? unit(N, b) : unit(N, t.off(KA) + (b - n)); }
    Vector lift(const Vector& u) const {
        Vector out = zeros(N);
        for (std::size_t b = 0; b < base; ++b)
            if (u[b] != 0) out += u[b] * lift(b);
        return out;
    }
    Vector proj(const Vector& T) const {
        Vector u = zeros(base);
        for (std::size_t i = 0; i < n; ++i) u[i] = T[i];
        for (std::size_t i = 0; i < m; ++i) u[n + i] = T[t.off(KA) + i];
        return u;
    }
    Vector embed(Kind k, const Vector& v) const {
        Vector out = zeros(N);
        for (std::size_t i = 0; i < v.size(); ++i) out[t.off(k) + i] = v[i];
        return out;
    }

    void load(const Cochain2& c) {
        C = AltTrilinear(base, N);
        for (auto [i, j, k] : increasing_triples(base)) {
            int na = (i >= n) + (j >= n) + (k >= n);
            Vector v;
            if (na == 0) v = embed(KV, c.omega.at(i, j, k));
            else if (na == 3) v = embed(KW, c.theta.at(i - n, j - n, k - n));
            else if (na == 1) v = embed(KW, c.nu.at(i, j, k - n));
            else v = embed(KV, c.phi.at(j - n, k - n, i)); // c(x,a1,a2) = c(a1,a2,x)
            C.set(i, j, k, v);
        }
    }
    void load(const Cochain1& c) {
        F = Matrix(N, base);
        for (std::size_t i = 0; i < n; ++i) F.set_column(i, embed(KV, c.N1.column(i)));
        for (std::size_t i = 0; i < m; ++i) F.set_column(n + i, embed(KW, c.N2.column(i)));
    }

    Vector br(const Vector& a, const Vector& b, const Vector& c) const { return t.T(a, b, c); }
    Vector c3(const Vector& a, const Vector& b, const Vector& c) const { return C(proj(a), proj(b), proj(c)); }
    Vector f1(const Vector& a) const { return F.apply(proj(a)); }

    // arguments are total vectors supported on the base
    Vector D1(const Vector& x1, const Vector& x2, const Vector& x3) const {
        return br(x1, x2, f1(x3)) + br(x2, x3, f1(x1)) + br(x3, x1, f1(x2)) - f1(br(x1, x2, x3));
    }
    Vector D2(const Vector& X1, const Vector& X2, const Vector& Y1, const Vector& Y2, const Vector& Y3) const {
        Vector t1 = c3(br(X1, X2, Y1), Y2, Y3) + br(Y2, Y3, c3(X1, X2, Y1));
        Vector t2 = c3(Y1, br(X1, X2, Y2), Y3) + br(Y3, Y1, c3(X1, X2, Y2));
        Vector t3 = c3(Y1, Y2, br(X1, X2, Y3)) + br(Y1, Y2, c3(X1, X2, Y3));
        Vector t4 = c3(X1, X2, br(Y1, Y2, Y3)) + br(X1, X2, c3(Y1, Y2, Y3));
        return t1 + t2 + t3 - t4;
    }
};

} // namespace fx

#endif
