#include "tlmp/matched.hpp"

namespace tlmp {

MatchedPair MatchedPair::trivial(ThreeLie g, ThreeLie h) {
    std::size_t n = g.dim(), m = h.dim();
    return MatchedPair{std::move(g), std::move(h), TriAction(n, m, m), TriAction(m, n, n)};
}

void MatchedPair::check_shapes() const {
    std::size_t n = g.dim(), m = h.dim();
    if (rho.pair_dim() != n || rho.target_dim() != m || rho.out_dim() != m)
        throw DimensionError("rho shape does not match (g, h)");
    if (psi.pair_dim() != m || psi.target_dim() != n || psi.out_dim() != n)
        throw DimensionError("psi shape does not match (g, h)");
}

MatchedPair mirror(const MatchedPair& p) { return MatchedPair{p.h, p.g, p.psi, p.rho}; }

namespace {

// The three g-side axioms; the h-side ones are these on mirror(p).
// v = variable names in display order.

Check derivation_axiom(const MatchedPair& p, const std::string& label, const std::array<std::string, 5>& v) {
    // psi(a4,a5)[x1,x2,x3] = [psi x1,x2,x3] + [x1,psi x2,x3] + [x1,x2,psi x3]
    const auto &G = p.g, &H = p.h;
    const std::size_t n = G.dim(), m = H.dim();
    std::vector<Slot> s{{v[0], &G.names(), 1}, {v[1], &G.names(), 1}, {v[2], &G.names(), 1},
                        {v[3], &H.names(), 2}, {v[4], &H.names(), 2}};
    return check_identity(label, s, [&](const Indices& t) {
        Vector x1 = unit(n, t[0]), x2 = unit(n, t[1]), x3 = unit(n, t[2]), a4 = unit(m, t[3]), a5 = unit(m, t[4]);
        Vector lhs = p.psi(a4, a5, G(x1, x2, x3));
        Vector rhs = G(p.psi(a4, a5, x1), x2, x3);
        rhs += G(x1, p.psi(a4, a5, x2), x3);
        rhs += G(x1, x2, p.psi(a4, a5, x3));
        return std::pair{lhs, rhs};
    });
}

Check cross_axiom(const MatchedPair& p, const std::string& label, const std::array<std::string, 5>& v) {
    // psi(rho(x1,x2)a3,a5)x4 = psi(rho(x1,x4)a5,a3)x2 - psi(rho(x2,x4)a5,a3)x1 + [x1,x2,psi(a3,a5)x4]
    const auto &G = p.g, &H = p.h;
    const std::size_t n = G.dim(), m = H.dim();
    std::vector<Slot> s{{v[0], &G.names(), 1}, {v[1], &G.names(), 1}, {v[2], &G.names(), 0},
                        {v[3], &H.names(), 0}, {v[4], &H.names(), 0}};
    return check_identity(label, s, [&](const Indices& t) {
        Vector x1 = unit(n, t[0]), x2 = unit(n, t[1]), x4 = unit(n, t[2]), a3 = unit(m, t[3]), a5 = unit(m, t[4]);
        Vector lhs = p.psi(p.rho(x1, x2, a3), a5, x4);
        Vector rhs = p.psi(p.rho(x1, x4, a5), a3, x2);
        rhs -= p.psi(p.rho(x2, x4, a5), a3, x1);
        rhs += G(x1, x2, p.psi(a3, a5, x4));
        return std::pair{lhs, rhs};
    });
}

Check twisted_axiom(const MatchedPair& p, const std::string& label, const std::array<std::string, 5>& v) {
    // [psi(a2,a3)x1,x4,x5] = psi(a2,a3)[x1,x4,x5] + psi(rho(x4,x5)a2,a3)x1 + psi(a2,rho(x4,x5)a3)x1
    const auto &G = p.g, &H = p.h;
    const std::size_t n = G.dim(), m = H.dim();
    std::vector<Slot> s{{v[0], &G.names(), 0}, {v[1], &G.names(), 1}, {v[2], &G.names(), 1},
                        {v[3], &H.names(), 2}, {v[4], &H.names(), 2}};
    return check_identity(label, s, [&](const Indices& t) {
        Vector x1 = unit(n, t[0]), x4 = unit(n, t[1]), x5 = unit(n, t[2]), a2 = unit(m, t[3]), a3 = unit(m, t[4]);
        Vector lhs = G(p.psi(a2, a3, x1), x4, x5);
        Vector rhs = p.psi(a2, a3, G(x1, x4, x5));
        rhs += p.psi(p.rho(x4, x5, a2), a3, x1);
        rhs += p.psi(a2, p.rho(x4, x5, a3), x1);
        return std::pair{lhs, rhs};
    });
}

} // namespace

Report verify_matched_pair(const MatchedPair& p) {
    p.check_shapes();
    Report r{"matched pair", {}};
    r.add(jacobi_check(p.g, "jacobi g"));
    r.add(jacobi_check(p.h, "jacobi h"));
    {
        auto c = verify_3lie_rep(p.g, p.h.dim(), p.rho).checks.front();
        c.label = "rho is a representation of g on h";
        r.add(c);
        c = verify_3lie_rep(p.h, p.g.dim(), p.psi).checks.front();
        c.label = "psi is a representation of h on g";
        r.add(c);
    }
    MatchedPair q = mirror(p);
    r.add(derivation_axiom(p, "MP1 (11)", {"x1", "x2", "x3", "a4", "a5"}));
    r.add(cross_axiom(p, "MP2 (22)", {"x1", "x2", "x4", "a3", "a5"}));
    r.add(twisted_axiom(p, "MP3 (33)", {"x1", "x4", "x5", "a2", "a3"}));
    r.add(derivation_axiom(q, "MP4 (44)", {"a1", "a2", "a3", "x4", "x5"}));
    r.add(cross_axiom(q, "MP5 (55)", {"a1", "a2", "a4", "x3", "x5"}));
    r.add(twisted_axiom(q, "MP6 (66)", {"a1", "a4", "a5", "x2", "x3"}));
    return r;
}

ThreeLie bicrossed_product(const MatchedPair& p) {
    p.check_shapes();
    const std::size_t n = p.g.dim(), m = p.h.dim();
    auto names = p.g.names();
    for (auto& s : p.h.names()) names.push_back(s);
    ThreeLie b(n + m, names);
    for (auto [i, j, k] : increasing_triples(n)) b.set_bracket(i, j, k, concat(p.g.bracket(i, j, k), zeros(m)));
    for (auto [i, j, k] : increasing_triples(m)) b.set_bracket(n + i, n + j, n + k, concat(zeros(n), p.h.bracket(i, j, k)));
    // [x_i, x_j, a_t] = rho(x_i,x_j) a_t ;  [a_i, a_j, x_t] = psi(a_i,a_j) x_t
    for (auto [i, j] : increasing_pairs(n))
        for (std::size_t t = 0; t < m; ++t) b.set_bracket(i, j, n + t, concat(zeros(n), p.rho.at(i, j, t)));
    for (auto [i, j] : increasing_pairs(m))
        for (std::size_t t = 0; t < n; ++t) b.set_bracket(n + i, n + j, t, concat(p.psi.at(i, j, t), zeros(m)));
    return b;
}

Report verify_mp_morphism(const Matrix& f, const Matrix& gm, const MatchedPair& p, const MatchedPair& q) {
    p.check_shapes();
    q.check_shapes();
    if (f.cols() != p.g.dim() || f.rows() != q.g.dim() || gm.cols() != p.h.dim() || gm.rows() != q.h.dim())
        throw DimensionError("matched pair morphism shape mismatch");
    Report r{"matched pair morphism", {}};
    auto c = verify_morphism(f, p.g, q.g).checks.front();
    c.label = "f is a 3-Lie morphism";
    r.add(c);
    c = verify_morphism(gm, p.h, q.h).checks.front();
    c.label = "g is a 3-Lie morphism";
    r.add(c);
    const std::size_t n = p.g.dim(), m = p.h.dim();
    r.add(check_identity("(mpl-mor-1)", {{"x1", &p.g.names(), 1}, {"x2", &p.g.names(), 1}, {"a", &p.h.names(), 0}},
                         [&](const Indices& t) {
                             Vector x1 = unit(n, t[0]), x2 = unit(n, t[1]), a = unit(m, t[2]);
                             return std::pair{gm.apply(p.rho(x1, x2, a)),
                                              q.rho(f.apply(x1), f.apply(x2), gm.apply(a))};
                         }));
    r.add(check_identity("(mpl-mor-2)", {{"a1", &p.h.names(), 1}, {"a2", &p.h.names(), 1}, {"x", &p.g.names(), 0}},
                         [&](const Indices& t) {
                             Vector a1 = unit(m, t[0]), a2 = unit(m, t[1]), x = unit(n, t[2]);
                             return std::pair{f.apply(p.psi(a1, a2, x)),
                                              q.psi(gm.apply(a1), gm.apply(a2), f.apply(x))};
                         }));
    return r;
}

} // namespace tlmp
