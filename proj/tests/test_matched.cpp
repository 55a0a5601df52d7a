#include <doctest.h>

#include "support/fixtures.hpp"

using namespace tlmp;
using fx::vec;

namespace {

bool jacobi_brute(const ThreeLie& g) {
    std::size_t d = g.dim();
    std::vector<Vector> e;
    for (std::size_t i = 0; i < d; ++i) e.push_back(unit(d, i));
    for (auto& x1 : e)
        for (auto& x2 : e)
            for (auto& y1 : e)
                for (auto& y2 : e)
                    for (auto& y3 : e)
                        if (g(x1, x2, g(y1, y2, y3)) !=
                            g(g(x1, x2, y1), y2, y3) + g(y1, g(x1, x2, y2), y3) + g(y1, y2, g(x1, x2, y3)))
                            return false;
    return true;
}

// D is a representation of alg on M iff alg (+) M with the semidirect
// bracket satisfies Jacobi; evaluate that directly with dense brackets
bool rep_brute(const ThreeLie& alg, std::size_t md, const TriAction& D) {
    std::size_t n = alg.dim(), N = n + md;
    ThreeLie s(N);
    auto top = [&](const Vector& u) { return slice(u, 0, n); };
    auto bot = [&](const Vector& u) { return slice(u, n, md); };
    std::vector<Vector> e;
    for (std::size_t i = 0; i < N; ++i) e.push_back(unit(N, i));
    auto br = [&](const Vector& u, const Vector& v, const Vector& w) {
        Vector m = D(top(u), top(v), bot(w)) + D(top(v), top(w), bot(u)) + D(top(w), top(u), bot(v));
        return concat(alg(top(u), top(v), top(w)), m);
    };
    for (auto& x1 : e)
        for (auto& x2 : e)
            for (auto& y1 : e)
                for (auto& y2 : e)
                    for (auto& y3 : e)
                        if (br(x1, x2, br(y1, y2, y3)) !=
                            br(br(x1, x2, y1), y2, y3) + br(y1, br(x1, x2, y2), y3) + br(y1, y2, br(x1, x2, y3)))
                            return false;
    return true;
}

// the six axioms written out on random dense vectors
std::array<bool, 6> mp_dense(const MatchedPair& p, std::mt19937& rng) {
    std::array<bool, 6> ok{true, true, true, true, true, true};
    auto run = [&](const MatchedPair& q, int off) {
        auto& G = q.g;
        auto& rho = q.rho;
        auto& psi = q.psi;
        std::size_t n = G.dim(), m = q.h.dim();
        for (int s = 0; s < 40; ++s) {
            Vector x1 = fx::random_vec(rng, n), x2 = fx::random_vec(rng, n), x3 = fx::random_vec(rng, n),
                   x4 = fx::random_vec(rng, n), x5 = fx::random_vec(rng, n);
            Vector a1 = fx::random_vec(rng, m), a2 = fx::random_vec(rng, m), a3 = fx::random_vec(rng, m);
            if (psi(a1, a2, G(x1, x2, x3)) !=
                G(psi(a1, a2, x1), x2, x3) + G(x1, psi(a1, a2, x2), x3) + G(x1, x2, psi(a1, a2, x3)))
                ok[off] = false;
            if (psi(rho(x1, x2, a1), a2, x3) !=
                psi(rho(x1, x3, a2), a1, x2) - psi(rho(x2, x3, a2), a1, x1) + G(x1, x2, psi(a1, a2, x3)))
                ok[off + 1] = false;
            if (G(psi(a1, a2, x1), x4, x5) !=
                psi(a1, a2, G(x1, x4, x5)) + psi(rho(x4, x5, a1), a2, x1) + psi(a1, rho(x4, x5, a2), x1))
                ok[off + 2] = false;
            (void)a3;
        }
    };
    run(p, 0);
    run(mirror(p), 3);
    return ok;
}

const char* MP[6] = {"MP1 (11)", "MP2 (22)", "MP3 (33)", "MP4 (44)", "MP5 (55)", "MP6 (66)"};

} // namespace

TEST_CASE("zero actions pass") {
    CHECK(verify_matched_pair(fx::zero_pair(3, 2)).passed());
    CHECK(verify_matched_pair(MatchedPair::trivial(fx::a4(), ThreeLie::abelian(2, "b"))).passed());
    auto r = verify_matched_pair(fx::zero2());
    for (auto l : MP) CHECK(r.find(l));
}

TEST_CASE("nilpotent action agrees with the dense oracle") {
    MatchedPair p = fx::nilpotent_pair();
    std::mt19937 rng(1);
    auto rep = verify_matched_pair(p);
    auto dense = mp_dense(p, rng);
    for (int k = 0; k < 6; ++k) CHECK(rep.find(MP[k])->passed == dense[k]);
    bool brute = jacobi_brute(bicrossed_product(p)) && rep_brute(p.g, 2, p.rho) && rep_brute(p.h, 2, p.psi);
    CHECK(rep.passed() == brute);
    CHECK(rep.passed());
}

TEST_CASE("bicrossed product") {
    MatchedPair z = fx::zero2();
    ThreeLie b = bicrossed_product(z);
    CHECK(b.dim() == 4);
    CHECK(b.structure().is_zero());

    MatchedPair a = fx::a4_pair();
    ThreeLie ba = bicrossed_product(a);
    for (auto [i, j, k] : increasing_triples(4)) CHECK(ba.bracket(i, j, k) == concat(a.g.bracket(i, j, k), zeros(1)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(is_zero(ba.bracket(i, j, 4)));

    MatchedPair p = fx::nilpotent_pair();
    ThreeLie bp = bicrossed_product(p);
    // ((e1,0),(e2,0),(0,b1)) -> (0, rho(e1,e2)b1) = (0, b2)
    CHECK(bp(unit(4, 0), unit(4, 1), unit(4, 2)) == vec({0, 0, 0, 1}));
    CHECK(bp(unit(4, 2), unit(4, 0), unit(4, 1)) == vec({0, 0, 0, 1}));
}

TEST_CASE("bicross restricted to pure triples reproduces g and h") {
    std::mt19937 rng(21);
    for (int it = 0; it < 20; ++it) {
        MatchedPair p = fx::random_pair(rng, 3, 40);
        ThreeLie b = bicrossed_product(p);
        std::size_t n = p.g.dim(), m = p.h.dim();
        for (auto [i, j, k] : increasing_triples(n)) CHECK(slice(b.bracket(i, j, k), 0, n) == p.g.bracket(i, j, k));
        for (auto [i, j, k] : increasing_triples(m))
            CHECK(slice(b.bracket(n + i, n + j, n + k), n, m) == p.h.bracket(i, j, k));
    }
}

TEST_CASE("matched pair axioms iff bicrossed Jacobi plus action representations") {
    std::mt19937 rng(2024);
    int pass = 0, fail = 0, discrepancies = 0;
    for (int it = 0; it < 150; ++it) {
        MatchedPair p = fx::random_pair(rng, 3, it % 2 ? 15 : 40);
        if (it % 7 == 1) {
            p = fx::a4_split(rng);
            if (rng() % 2) p.rho.set(0, 1, 0, p.rho.at(0, 1, 0) + vec({0, 1}));
        }
        if (it % 5 == 0) {
            // perturb a known-good one
            p = fx::nilpotent_pair();
            if (rng() % 2) p.psi.set(0, 1, rng() % 2, vec({1, 0}));
        }
        bool a = verify_matched_pair(p).passed();
        bool b = verify_jacobi(bicrossed_product(p)).passed() && verify_3lie_rep(p.g, p.h.dim(), p.rho).passed() &&
                 verify_3lie_rep(p.h, p.g.dim(), p.psi).passed();
        discrepancies += (a != b);
        (a ? pass : fail)++;
        if (p.g.dim() + p.h.dim() <= 4) {
            ThreeLie bp = bicrossed_product(p);
            CHECK(a == (jacobi_brute(bp) && rep_brute(p.g, p.h.dim(), p.rho) && rep_brute(p.h, p.g.dim(), p.psi)));
        }
    }
    CHECK(discrepancies == 0);
    CHECK(pass >= 10);
    CHECK(fail >= 10);
}

TEST_CASE("per-axiom labels agree with the dense oracle on random pairs") {
    std::mt19937 rng(99);
    for (int it = 0; it < 40; ++it) {
        MatchedPair p = fx::random_pair(rng, 3, 20);
        auto rep = verify_matched_pair(p);
        auto dense = mp_dense(p, rng);
        for (int k = 0; k < 6; ++k) CHECK(rep.find(MP[k])->passed == dense[k]);
    }
}

TEST_CASE("matched pair morphisms") {
    MatchedPair p = fx::nilpotent_pair();
    CHECK(verify_mp_morphism(Matrix::identity(2), Matrix::identity(2), p, p).passed());
    CHECK(verify_mp_morphism(Matrix(2, 2), Matrix(2, 2), p, p).passed());
    auto r = verify_mp_morphism(Rational(2) * Matrix::identity(2), Matrix::identity(2), p, p);
    CHECK_FALSE(r.passed());
    auto c = r.find("(mpl-mor-1)");
    REQUIRE_FALSE(c->passed);
    // g(rho(e1,e2)b1) = b2, rho'(2e1,2e2)b1 = 4 b2
    CHECK(c->witness->lhs == vec({0, 1}));
    CHECK(c->witness->rhs == vec({0, 4}));
    CHECK_THROWS_AS(verify_mp_morphism(Matrix::identity(3), Matrix::identity(2), p, p), DimensionError);
}

TEST_CASE("shape errors") {
    MatchedPair p = fx::zero2();
    p.rho = TriAction(2, 3, 3);
    CHECK_THROWS_AS(verify_matched_pair(p), DimensionError);
    CHECK_THROWS_AS(bicrossed_product(p), DimensionError);
}
