#include "tlmp/representation.hpp"

namespace tlmp {

MPRepresentation MPRepresentation::zero(const MatchedPair& p, std::size_t V_dim, std::size_t W_dim) {
    std::size_t n = p.g.dim(), m = p.h.dim();
    return MPRepresentation{V_dim,
                            W_dim,
                            TriAction(n, V_dim, V_dim),
                            TriAction(m, V_dim, V_dim),
                            TriAction(n, W_dim, W_dim),
                            TriAction(m, W_dim, W_dim),
                            Pairing(V_dim, n, m, W_dim),
                            Pairing(W_dim, m, n, V_dim)};
}

void MPRepresentation::check_shapes(const MatchedPair& p) const {
    p.check_shapes();
    std::size_t n = p.g.dim(), m = p.h.dim();
    auto act = [](const TriAction& t, std::size_t pair, std::size_t mod, const char* name) {
        if (t.pair_dim() != pair || t.target_dim() != mod || t.out_dim() != mod)
            throw DimensionError(std::string(name) + " shape does not match the matched pair / module");
    };
    act(rhoV, n, V_dim, "rhoV");
    act(psiV, m, V_dim, "psiV");
    act(rhoW, n, W_dim, "rhoW");
    act(psiW, m, W_dim, "psiW");
    if (alpha.a_dim() != V_dim || alpha.b_dim() != n || alpha.c_dim() != m || alpha.out_dim() != W_dim)
        throw DimensionError("alpha shape must be V x g x h -> W");
    if (beta.a_dim() != W_dim || beta.b_dim() != m || beta.c_dim() != n || beta.out_dim() != V_dim)
        throw DimensionError("beta shape must be W x h x g -> V");
}

MPRepresentation mirror(const MPRepresentation& r) {
    return MPRepresentation{r.W_dim, r.V_dim, r.psiW, r.rhoW, r.psiV, r.rhoV, r.beta, r.alpha};
}

namespace {

// Variable letters, so witnesses of mirrored identities read naturally.
struct Letters {
    std::string x, a, v, w;
};

// The twelve V-side identities.  Each is one module-variable component of
// the compatibility conditions for the semidirect pair; the pairing terms
// beta(alpha(..)..) are kept with the component of the v they contain.
struct VSide {
    const MatchedPair& p;
    const MPRepresentation& r;
    Letters L;
    std::size_t n, m, dv, dw;
    std::vector<std::string> gN, hN, vN, wwN;

    VSide(const MatchedPair& p_, const MPRepresentation& r_, Letters l)
        : p(p_), r(r_), L(std::move(l)), n(p.g.dim()), m(p.h.dim()), dv(r.V_dim), dw(r.W_dim), gN(p.g.names()),
          hN(p.h.names()), vN(default_names(L.v, dv)) {
        // one slot for the pair (w1, w2): index k < dw means w1 = e_k, w2 = 0
        for (auto& s : default_names(L.w, dw)) wwN.push_back("(" + s + ",0)");
        for (auto& s : default_names(L.w, dw)) wwN.push_back("(0," + s + ")");
    }

    Vector G(std::size_t i) const { return unit(n, i); }
    Vector H(std::size_t i) const { return unit(m, i); }
    Vector Vv(std::size_t i) const { return unit(dv, i); }
    std::pair<Vector, Vector> WW(std::size_t k) const {
        if (k < dw) return {unit(dw, k), zeros(dw)};
        return {zeros(dw), unit(dw, k - dw)};
    }
    Slot sx(int i, int grp = 0) const { return {L.x + std::to_string(i), &gN, grp}; }
    Slot sa(int i, int grp = 0) const { return {L.a + std::to_string(i), &hN, grp}; }
    Slot sv(int i) const { return {L.v + std::to_string(i), &vN, 0}; }
    Slot sww() const { return {"(" + L.w + "1," + L.w + "2)", &wwN, 0}; }

    Vector psi(const Vector& a1, const Vector& a2, const Vector& x) const { return p.psi(a1, a2, x); }
    Vector rho(const Vector& x1, const Vector& x2, const Vector& a) const { return p.rho(x1, x2, a); }
    Vector rhoV(const Vector& x1, const Vector& x2, const Vector& v) const { return r.rhoV(x1, x2, v); }
    Vector psiV(const Vector& a1, const Vector& a2, const Vector& v) const { return r.psiV(a1, a2, v); }
    Vector rhoW(const Vector& x1, const Vector& x2, const Vector& w) const { return r.rhoW(x1, x2, w); }
    Vector alpha(const Vector& v, const Vector& x, const Vector& a) const { return r.alpha(v, x, a); }
    Vector beta(const Vector& w, const Vector& a, const Vector& x) const { return r.beta(w, a, x); }
    // B(y) = beta(w1,a2)y - beta(w2,a1)y
    Vector B(const Vector& w1, const Vector& w2, const Vector& a1, const Vector& a2, const Vector& y) const {
        return beta(w1, a2, y) - beta(w2, a1, y);
    }

    // psiV(a1,a2) rhoV(x2,x3) v1 = rhoV(psi x2, x3)v1 + rhoV(x2, psi x3)v1 + rhoV(x2,x3) psiV v1
    // (1)-(3) share this shape with different variable names.
    Check derivation(const std::string& label, int i, int j, int k) const {
        return check_identity(label, {sa(1), sa(2), sx(i), sx(j), sv(k)}, [&](const Indices& t) {
            Vector a1 = H(t[0]), a2 = H(t[1]), xi = G(t[2]), xj = G(t[3]), v = Vv(t[4]);
            Vector lhs = psiV(a1, a2, rhoV(xi, xj, v));
            Vector rhs = rhoV(psi(a1, a2, xi), xj, v) + rhoV(xi, psi(a1, a2, xj), v) + rhoV(xi, xj, psiV(a1, a2, v));
            return std::pair{lhs, rhs};
        });
    }

    Check iden4(const std::string& label) const {
        return check_identity(label, {sx(1, 1), sx(2, 1), sx(3, 1), sa(1), sa(2), sww()}, [&](const Indices& t) {
            Vector x1 = G(t[0]), x2 = G(t[1]), x3 = G(t[2]), a1 = H(t[3]), a2 = H(t[4]);
            auto [w1, w2] = WW(t[5]);
            Vector lhs = B(w1, w2, a1, a2, p.g(x1, x2, x3));
            Vector rhs = rhoV(x2, x3, B(w1, w2, a1, a2, x1)) + rhoV(x3, x1, B(w1, w2, a1, a2, x2)) +
                         rhoV(x1, x2, B(w1, w2, a1, a2, x3));
            return std::pair{lhs, rhs};
        });
    }

    Check iden5(const std::string& label) const {
        // rhoV(x2, psi(a1,a2)x3)v1 = psiV(rho(x2,x3)a2, a1)v1 + beta(alpha(v1,x2)a1, a2)x3 - beta(alpha(v1,x3)a2, a1)x2
        return check_identity(label, {sx(2), sx(3), sa(1), sa(2), sv(1)}, [&](const Indices& t) {
            Vector x2 = G(t[0]), x3 = G(t[1]), a1 = H(t[2]), a2 = H(t[3]), v1 = Vv(t[4]);
            Vector lhs = rhoV(x2, psi(a1, a2, x3), v1);
            Vector rhs = psiV(rho(x2, x3, a2), a1, v1) + beta(alpha(v1, x2, a1), a2, x3) -
                         beta(alpha(v1, x3, a2), a1, x2);
            return std::pair{lhs, rhs};
        });
    }

    Check iden6(const std::string& label) const {
        // rhoV(x1, psi(a1,a2)x3)v2 = psiV(rho(x1,x3)a2, a1)v2 + beta(alpha(v2,x1)a1, a2)x3 - beta(alpha(v2,x3)a2, a1)x1
        return check_identity(label, {sx(1), sx(3), sa(1), sa(2), sv(2)}, [&](const Indices& t) {
            Vector x1 = G(t[0]), x3 = G(t[1]), a1 = H(t[2]), a2 = H(t[3]), v2 = Vv(t[4]);
            Vector lhs = rhoV(x1, psi(a1, a2, x3), v2);
            Vector rhs = psiV(rho(x1, x3, a2), a1, v2) + beta(alpha(v2, x1, a1), a2, x3) -
                         beta(alpha(v2, x3, a2), a1, x1);
            return std::pair{lhs, rhs};
        });
    }

    Check iden7(const std::string& label) const {
        // rhoV(x1,x2) psiV(a1,a2)v3 = psiV(rho(x1,x2)a1, a2)v3 - beta(alpha(v3,x2)a2, a1)x1 + beta(alpha(v3,x1)a2, a1)x2
        return check_identity(label, {sx(1), sx(2), sa(1), sa(2), sv(3)}, [&](const Indices& t) {
            Vector x1 = G(t[0]), x2 = G(t[1]), a1 = H(t[2]), a2 = H(t[3]), v3 = Vv(t[4]);
            Vector lhs = rhoV(x1, x2, psiV(a1, a2, v3));
            Vector rhs = psiV(rho(x1, x2, a1), a2, v3) - beta(alpha(v3, x2, a2), a1, x1) +
                         beta(alpha(v3, x1, a2), a1, x2);
            return std::pair{lhs, rhs};
        });
    }

    Check iden8(const std::string& label) const {
        return check_identity(label, {sx(1), sx(2), sx(3), sa(1), sa(2), sww()}, [&](const Indices& t) {
            Vector x1 = G(t[0]), x2 = G(t[1]), x3 = G(t[2]), a1 = H(t[3]), a2 = H(t[4]);
            auto [w1, w2] = WW(t[5]);
            Vector lhs = rhoV(x1, x2, B(w1, w2, a1, a2, x3));
            Vector rhs = beta(rhoW(x2, x3, w2), a1, x1) - beta(w1, rho(x2, x3, a2), x1) -
                         beta(rhoW(x1, x3, w2), a1, x2) + beta(w1, rho(x1, x3, a2), x2) +
                         beta(rhoW(x1, x2, w1), a2, x3) - beta(w2, rho(x1, x2, a1), x3);
            return std::pair{lhs, rhs};
        });
    }

    Check iden9(const std::string& label) const {
        // rhoV(x2,x3) psiV(a1,a2)v1 = psiV(a1,a2) rhoV(x2,x3)v1 + psiV(rho(x2,x3)a1, a2)v1 + psiV(a1, rho(x2,x3)a2)v1
        return check_identity(label, {sx(2, 1), sx(3, 1), sa(1, 2), sa(2, 2), sv(1)}, [&](const Indices& t) {
            Vector x2 = G(t[0]), x3 = G(t[1]), a1 = H(t[2]), a2 = H(t[3]), v1 = Vv(t[4]);
            Vector lhs = rhoV(x2, x3, psiV(a1, a2, v1));
            Vector rhs = psiV(a1, a2, rhoV(x2, x3, v1)) + psiV(rho(x2, x3, a1), a2, v1) + psiV(a1, rho(x2, x3, a2), v1);
            return std::pair{lhs, rhs};
        });
    }

    Check iden10(const std::string& label) const {
        return check_identity(label, {sx(1), sx(2, 1), sx(3, 1), sa(1), sa(2), sww()}, [&](const Indices& t) {
            Vector x1 = G(t[0]), x2 = G(t[1]), x3 = G(t[2]), a1 = H(t[3]), a2 = H(t[4]);
            auto [w1, w2] = WW(t[5]);
            Vector lhs = rhoV(x2, x3, B(w1, w2, a1, a2, x1));
            Vector rhs = B(w1, w2, a1, a2, p.g(x1, x2, x3)) - beta(w2, rho(x2, x3, a1), x1) +
                         beta(w1, rho(x2, x3, a2), x1) + beta(rhoW(x2, x3, w1), a2, x1) -
                         beta(rhoW(x2, x3, w2), a1, x1);
            return std::pair{lhs, rhs};
        });
    }

    // rhoV(psi(a1,a2)x1, xj)v = psiV(a1,a2) rhoV(x1,xj)v - beta(alpha(v,xj)a1, a2)x1 + beta(alpha(v,xj)a2, a1)x1
    // (11) with (xj,v) = (x3,v2), (12) with (x2,v3)
    Check iden11_12(const std::string& label, int j, int k) const {
        return check_identity(label, {sx(1), sx(j), sa(1, 1), sa(2, 1), sv(k)}, [&](const Indices& t) {
            Vector x1 = G(t[0]), xj = G(t[1]), a1 = H(t[2]), a2 = H(t[3]), v = Vv(t[4]);
            Vector lhs = rhoV(psi(a1, a2, x1), xj, v);
            Vector rhs = psiV(a1, a2, rhoV(x1, xj, v)) - beta(alpha(v, xj, a1), a2, x1) + beta(alpha(v, xj, a2), a1, x1);
            return std::pair{lhs, rhs};
        });
    }

    void run(Report& rep, int offset) const {
        auto lab = [&](int k) { return "(" + std::to_string(k + offset) + "-iden)"; };
        rep.add(derivation(lab(1), 2, 3, 1));
        rep.add(derivation(lab(2), 1, 3, 2));
        rep.add(derivation(lab(3), 1, 2, 3));
        rep.add(iden4(lab(4)));
        rep.add(iden5(lab(5)));
        rep.add(iden6(lab(6)));
        rep.add(iden7(lab(7)));
        rep.add(iden8(lab(8)));
        rep.add(iden9(lab(9)));
        rep.add(iden10(lab(10)));
        rep.add(iden11_12(lab(11), 3, 2));
        rep.add(iden11_12(lab(12), 2, 3));
    }
};

// the semidirect actions, as TriActions on the semidirect algebras
TriAction rho_ltimes_alpha(const MatchedPair& p, const MPRepresentation& r) {
    const std::size_t n = p.g.dim(), m = p.h.dim(), dv = r.V_dim, dw = r.W_dim;
    TriAction t(n + dv, m + dw, m + dw);
    for (auto [i, j] : increasing_pairs(n)) {
        for (std::size_t a = 0; a < m; ++a) t.set(i, j, a, concat(p.rho.at(i, j, a), zeros(dw)));
        for (std::size_t w = 0; w < dw; ++w) t.set(i, j, m + w, concat(zeros(m), r.rhoW.at(i, j, w)));
    }
    // ((0,v),(x,0)) on (a,0) -> (0, alpha(v,x)a)
    for (std::size_t v = 0; v < dv; ++v)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t a = 0; a < m; ++a) t.set(n + v, x, a, concat(zeros(m), r.alpha.at(v, x, a)));
    return t;
}

} // namespace

MatchedPair semidirect_product(const MatchedPair& p, const MPRepresentation& r) {
    r.check_shapes(p);
    MatchedPair q = mirror(p);
    MPRepresentation s = mirror(r);
    return MatchedPair{semidirect_sum(p.g, r.V_dim, r.rhoV, "v"), semidirect_sum(p.h, r.W_dim, r.psiW, "w"),
                       rho_ltimes_alpha(p, r), rho_ltimes_alpha(q, s)};
}

Report verify_mp_representation(const MatchedPair& p, const MPRepresentation& r) {
    r.check_shapes(p);
    Report rep{"matched pair representation", {}};
    VSide(p, r, {"x", "a", "v", "w"}).run(rep, 0);
    MatchedPair q = mirror(p);
    MPRepresentation s = mirror(r);
    VSide(q, s, {"a", "x", "w", "v"}).run(rep, 12);

    auto module = [&](const ThreeLie& alg, std::size_t dim, const TriAction& act, const std::string& label) {
        auto c = verify_3lie_rep(alg, dim, act).checks.front();
        c.label = label;
        rep.add(c);
    };
    module(p.g, r.V_dim, r.rhoV, "rhoV is a representation of g on V");
    module(p.h, r.V_dim, r.psiV, "psiV is a representation of h on V");
    module(p.g, r.W_dim, r.rhoW, "rhoW is a representation of g on W");
    module(p.h, r.W_dim, r.psiW, "psiW is a representation of h on W");
    MatchedPair sd = semidirect_product(p, r);
    module(sd.g, sd.h.dim(), sd.rho, "rho x alpha is a representation of g x V on h + W");
    module(sd.h, sd.g.dim(), sd.psi, "psi x beta is a representation of h x W on g + V");
    return rep;
}

MPRepresentation adjoint_representation(const MatchedPair& p, bool check) {
    p.check_shapes();
    if (check) {
        Report v = verify_matched_pair(p);
        if (!v.passed()) throw InputError("adjoint representation: matched pair fails " + v.first_failure()->label);
    }
    const std::size_t n = p.g.dim(), m = p.h.dim();
    MPRepresentation r = MPRepresentation::zero(p, n, m);
    for (auto [i, j] : increasing_pairs(n)) {
        for (std::size_t t = 0; t < n; ++t) r.rhoV.set(i, j, t, p.g.bracket(i, j, t));
        for (std::size_t t = 0; t < m; ++t) r.rhoW.set(i, j, t, p.rho.at(i, j, t));
    }
    for (auto [i, j] : increasing_pairs(m)) {
        for (std::size_t t = 0; t < m; ++t) r.psiW.set(i, j, t, p.h.bracket(i, j, t));
        for (std::size_t t = 0; t < n; ++t) r.psiV.set(i, j, t, p.psi.at(i, j, t));
    }
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t a = 0; a < m; ++a) {
                if (v != x) r.alpha.set(v, x, a, p.rho.at(v, x, a));
            }
    for (std::size_t w = 0; w < m; ++w)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t x = 0; x < n; ++x) {
                if (w != a) r.beta.set(w, a, x, p.psi.at(w, a, x));
            }
    return r;
}

} // namespace tlmp
