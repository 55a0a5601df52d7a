#ifndef TLMP_TEST_FIXTURES_HPP
#define TLMP_TEST_FIXTURES_HPP

#include "tlmp/cohomology.hpp"

#include <random>

namespace fx {

using namespace tlmp;

inline Vector vec(std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs) v.push_back(x);
    return v;
}

// dim 4: [e1,e2,e3]=e4, [e1,e2,e4]=-e3, [e1,e3,e4]=e2, [e2,e3,e4]=-e1
inline ThreeLie a4() {
    ThreeLie g(4);
    g.set_bracket(0, 1, 2, vec({0, 0, 0, 1}));
    g.set_bracket(0, 1, 3, vec({0, 0, -1, 0}));
    g.set_bracket(0, 2, 3, vec({0, 1, 0, 0}));
    g.set_bracket(1, 2, 3, vec({-1, 0, 0, 0}));
    return g;
}

inline MatchedPair zero_pair(std::size_t n, std::size_t m) {
    return MatchedPair::trivial(ThreeLie::abelian(n, "e"), ThreeLie::abelian(m, "b"));
}

// g = h = Q^2 abelian, V = W = Q, everything zero
inline MatchedPair zero2() { return zero_pair(2, 2); }
inline MPRepresentation zero_rep(const MatchedPair& p, std::size_t dv = 1, std::size_t dw = 1) {
    return MPRepresentation::zero(p, dv, dw);
}

// unit nu-bar on the zero fixture: nu(e1,e2)b1 = w
inline Cochain2 unit_nu(const MatchedPair& p, const MPRepresentation& r) {
    Cochain2 c = Cochain2::zero(p, r);
    c.nu.set(0, 1, 0, unit(r.W_dim, 0));
    return c;
}

// (A4, Q^1, 0, 0)
inline MatchedPair a4_pair() { return MatchedPair::trivial(a4(), ThreeLie::abelian(1, "b")); }

// (A4, Q^1, 0, 0) with W = A4 under rhoW = ad, everything else zero
inline MPRepresentation a4_on_W(const MatchedPair& p) {
    MPRepresentation r = MPRepresentation::zero(p, 1, 4);
    ThreeLie A = a4();
    for (auto [i, j] : increasing_pairs(4))
        for (std::size_t w = 0; w < 4; ++w) r.rhoW.set(i, j, w, A(unit(4, i), unit(4, j), unit(4, w)));
    return r;
}

// Q^2 abelian acting nilpotently: rho(e1,e2) b1 = b2
inline MatchedPair nilpotent_pair() {
    MatchedPair p = zero2();
    p.rho.set(0, 1, 0, vec({0, 1}));
    return p;
}

inline Rational small(std::mt19937& rng, int density_pct = 30) {
    std::uniform_int_distribution<int> d(0, 99), v(-2, 2);
    if (d(rng) >= density_pct) return 0;
    int x = v(rng);
    return x == 0 ? 1 : x;
}

inline Vector random_vec(std::mt19937& rng, std::size_t n, int density = 100) {
    Vector v(n);
    for (auto& x : v) x = small(rng, density);
    return v;
}

inline void randomize(TriAction& t, std::mt19937& rng, int density) {
    for (auto [i, j] : increasing_pairs(t.pair_dim()))
        for (std::size_t s = 0; s < t.target_dim(); ++s) t.set(i, j, s, random_vec(rng, t.out_dim(), density));
}

inline void randomize(AltTrilinear& t, std::mt19937& rng, int density) {
    for (auto [i, j, k] : increasing_triples(t.in_dim())) t.set(i, j, k, random_vec(rng, t.out_dim(), density));
}

inline void randomize(Pairing& t, std::mt19937& rng, int density) {
    for (std::size_t i = 0; i < t.a_dim(); ++i)
        for (std::size_t j = 0; j < t.b_dim(); ++j)
            for (std::size_t k = 0; k < t.c_dim(); ++k) t.set(i, j, k, random_vec(rng, t.out_dim(), density));
}

inline Cochain2 random_cochain2(std::mt19937& rng, const MatchedPair& p, const MPRepresentation& r, int density = 60) {
    Cochain2 c = Cochain2::zero(p, r);
    randomize(c.omega, rng, density);
    randomize(c.theta, rng, density);
    randomize(c.nu, rng, density);
    randomize(c.phi, rng, density);
    return c;
}

inline Cochain1 random_cochain1(std::mt19937& rng, const MatchedPair& p, const MPRepresentation& r, int density = 60) {
    Cochain1 c = Cochain1::zero(p, r);
    for (Matrix* N : {&c.N1, &c.N2})
        for (std::size_t i = 0; i < N->rows(); ++i)
            for (std::size_t j = 0; j < N->cols(); ++j) (*N)(i, j) = small(rng, density);
    return c;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density = 60) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = small(rng, density);
    return m;
}

// dim <= 3 algebra: abelian, or a random bracket that may or may not be 3-Lie
inline ThreeLie random_algebra(std::mt19937& rng, std::size_t d, const std::string& prefix, int density = 40) {
    ThreeLie g = ThreeLie::abelian(d, prefix);
    if (rng() % 2) {
        AltTrilinear t(d, d);
        randomize(t, rng, density);
        for (auto [i, j, k] : increasing_triples(d)) g.set_bracket(i, j, k, t.at(i, j, k));
    }
    return g;
}

inline MatchedPair random_pair(std::mt19937& rng, std::size_t max_dim, int density) {
    std::size_t n = 1 + rng() % max_dim, m = 1 + rng() % max_dim;
    MatchedPair p = MatchedPair::trivial(random_algebra(rng, n, "e"), random_algebra(rng, m, "b"));
    if (rng() % 3) randomize(p.rho, rng, density);
    if (rng() % 3) randomize(p.psi, rng, density);
    return p;
}

inline MPRepresentation random_rep(std::mt19937& rng, const MatchedPair& p, std::size_t max_dim, int density) {
    std::size_t dv = 1 + rng() % max_dim, dw = 1 + rng() % max_dim;
    MPRepresentation r = MPRepresentation::zero(p, dv, dw);
    for (TriAction* t : {&r.rhoV, &r.psiV, &r.rhoW, &r.psiW})
        if (rng() % 2) randomize(*t, rng, density);
    if (rng() % 2) randomize(r.alpha, rng, density);
    if (rng() % 2) randomize(r.beta, rng, density);
    return r;
}

// rejection sampling for verified (pair, rep) at dims <= 2
inline std::pair<MatchedPair, MPRepresentation> random_verified(std::mt19937& rng, int density = 25) {
    while (true) {
        MatchedPair p = random_pair(rng, 2, density);
        if (!verify_matched_pair(p).passed()) continue;
        MPRepresentation r = random_rep(rng, p, 2, density);
        if (verify_mp_representation(p, r).passed()) return {p, r};
    }
}

// same, but insist on something nonzero in the representation
inline std::pair<MatchedPair, MPRepresentation> random_verified_nontrivial(std::mt19937& rng, int density = 25) {
    while (true) {
        auto pr = random_verified(rng, density);
        auto& r = pr.second;
        if (!(r.rhoV.is_zero() && r.psiV.is_zero() && r.rhoW.is_zero() && r.psiW.is_zero() && r.alpha.is_zero() &&
              r.beta.is_zero()))
            return pr;
    }
}

// A4 = P ⋈ P^perp for a random rational 2-plane P.  The A4 bracket is
// orthogonal to its arguments, so [P,P,Q] ⊂ Q and [Q,Q,P] ⊂ P.
inline MatchedPair a4_split(std::mt19937& rng) {
    ThreeLie A = a4();
    std::uniform_int_distribution<int> d(-2, 2);
    while (true) {
        Vector u1(4), u2(4);
        for (auto& x : u1) x = d(rng);
        for (auto& x : u2) x = d(rng);
        Matrix U = Matrix::from_rows({u1, u2}, 4);
        if (rank(U) < 2) continue;
        auto Q = kernel_basis(U).basis;
        Matrix B = Matrix::from_columns({u1, u2, Q[0], Q[1]}, 4);
        auto Binv = inverse(B);
        MatchedPair p = zero2();
        auto coords = [&](std::size_t i, std::size_t j, std::size_t k) {
            return Binv->apply(A(B.column(i), B.column(j), B.column(k)));
        };
        for (std::size_t t = 0; t < 2; ++t) {
            Vector r = coords(0, 1, 2 + t), s = coords(2, 3, t);
            p.rho.set(0, 1, t, slice(r, 2, 2));
            p.psi.set(0, 1, t, slice(s, 0, 2));
        }
        return p;
    }
}

// verified instances with real content: A4 splits and the nilpotent pair
// with adjoint coefficients, plus sampled small ones
inline std::pair<MatchedPair, MPRepresentation> rich_verified(std::mt19937& rng) {
    switch (rng() % 4) {
    case 0:
    case 1: {
        MatchedPair p = a4_split(rng);
        return {p, adjoint_representation(p)};
    }
    case 2: {
        MatchedPair p = nilpotent_pair();
        return {p, adjoint_representation(p)};
    }
    default: return random_verified_nontrivial(rng);
    }
}

} // namespace fx

#endif
