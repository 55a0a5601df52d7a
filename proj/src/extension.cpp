#include "tlmp/extension.hpp"

namespace tlmp {

namespace {

Check matrix_check(const std::string& label, const Matrix& lhs, const Matrix& rhs) {
    Check c;
    c.label = label;
    c.passed = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs == rhs;
    c.tuples = 1;
    if (!c.passed && lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols()) {
        // first differing column as witness
        for (std::size_t k = 0; k < lhs.cols(); ++k)
            if (lhs.column(k) != rhs.column(k)) {
                c.witness = Witness{{"column=" + std::to_string(k + 1)}, lhs.column(k), rhs.column(k)};
                break;
            }
    }
    return c;
}

Check flag(const std::string& label, bool ok, const std::string& note = {}) {
    Check c;
    c.label = label;
    c.passed = ok;
    c.tuples = 1;
    if (!ok) c.note = note;
    return c;
}

bool is_block(const Matrix& i, const Matrix& j, std::size_t base, std::size_t fib) {
    Matrix ci = vstack(Matrix(base, fib), Matrix::identity(fib));
    Matrix cj = hstack(Matrix::identity(base), Matrix(base, fib));
    return i == ci && j == cj;
}

void check_extension_shapes(const AbelianExtension& e) {
    e.base.check_shapes();
    e.total.check_shapes();
    std::size_t n = e.base.g.dim(), m = e.base.h.dim(), G = e.total.g.dim(), H = e.total.h.dim();
    if (G != n + e.V_dim || H != m + e.W_dim) throw DimensionError("extension: total dims must be base + fiber");
    auto want = [](const Matrix& a, std::size_t r, std::size_t c, const char* name) {
        if (a.rows() != r || a.cols() != c) throw DimensionError(std::string("extension: ") + name + " has the wrong shape");
    };
    want(e.i1, G, e.V_dim, "i1");
    want(e.i2, H, e.W_dim, "i2");
    want(e.j1, n, G, "j1");
    want(e.j2, m, H, "j2");
}

} // namespace

Report validate(const AbelianExtension& e) {
    check_extension_shapes(e);
    Report r{"abelian extension", {}};
    std::size_t n = e.base.g.dim(), m = e.base.h.dim(), G = e.total.g.dim(), H = e.total.h.dim();
    r.add(matrix_check("j1 i1 = 0", e.j1 * e.i1, Matrix(n, e.V_dim)));
    r.add(matrix_check("j2 i2 = 0", e.j2 * e.i2, Matrix(m, e.W_dim)));
    r.add(flag("i1, i2 injective", rank(e.i1) == e.V_dim && rank(e.i2) == e.W_dim));
    r.add(flag("j1, j2 surjective", rank(e.j1) == n && rank(e.j2) == m));

    // fiber F = i1(V) + i2(W) inside the bicrossed total
    ThreeLie T = bicrossed_product(e.total);
    std::size_t N = G + H;
    std::vector<Vector> F;
    for (std::size_t k = 0; k < e.V_dim; ++k) F.push_back(concat(e.i1.column(k), zeros(H)));
    for (std::size_t k = 0; k < e.W_dim; ++k) F.push_back(concat(zeros(G), e.i2.column(k)));
    Subspace Fs = span(N, F);
    Check abel{"fiber brackets with two fiber arguments vanish", true, 0, {}, {}};
    Check ideal{"fiber is an ideal", true, 0, {}, {}};
    for (std::size_t a = 0; a < F.size(); ++a)
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l) {
                Vector y = unit(N, k), z = unit(N, l);
                if (abel.passed && l == 0) {
                    for (std::size_t b = a + 1; b < F.size() && abel.passed; ++b) {
                        ++abel.tuples;
                        Vector v = T(F[a], F[b], y);
                        if (!is_zero(v)) {
                            abel.passed = false;
                            abel.witness = Witness{{"u=f" + std::to_string(a + 1), "u'=f" + std::to_string(b + 1),
                                                    "y=" + std::to_string(k + 1)},
                                                   v, zeros(N)};
                        }
                    }
                }
                if (ideal.passed && k < l) {
                    ++ideal.tuples;
                    Vector v = T(F[a], y, z);
                    if (!member(v, Fs)) {
                        ideal.passed = false;
                        ideal.note = "bracket leaves the fiber";
                        ideal.witness = Witness{{"u=f" + std::to_string(a + 1), "y=" + std::to_string(k + 1),
                                                 "z=" + std::to_string(l + 1)},
                                                v, v};
                    }
                }
            }
    r.add(abel);
    r.add(ideal);
    r.absorb(verify_matched_pair(e.total), "total");
    r.absorb(verify_mp_morphism(e.j1, e.j2, e.total, e.base), "j");
    return r;
}

Report validate(const AbelianExtension& e, const Section& s) {
    check_extension_shapes(e);
    std::size_t n = e.base.g.dim(), m = e.base.h.dim();
    if (s.s1.rows() != e.total.g.dim() || s.s1.cols() != n || s.s2.rows() != e.total.h.dim() || s.s2.cols() != m)
        throw DimensionError("section has the wrong shape");
    Report r{"section", {}};
    r.add(matrix_check("j1 s1 = id", e.j1 * s.s1, Matrix::identity(n)));
    r.add(matrix_check("j2 s2 = id", e.j2 * s.s2, Matrix::identity(m)));
    return r;
}

AbelianExtension build_extension_unchecked(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c) {
    r.check_shapes(p);
    c.check_shapes(p, r);
    const std::size_t n = p.g.dim(), m = p.h.dim(), dv = r.V_dim, dw = r.W_dim;
    MatchedPair t = semidirect_product(p, r);
    for (auto [i, j, k] : increasing_triples(n))
        t.g.set_bracket(i, j, k, t.g.bracket(i, j, k) + concat(zeros(n), c.omega.at(i, j, k)));
    for (auto [i, j, k] : increasing_triples(m))
        t.h.set_bracket(i, j, k, t.h.bracket(i, j, k) + concat(zeros(m), c.theta.at(i, j, k)));
    for (auto [i, j] : increasing_pairs(n))
        for (std::size_t a = 0; a < m; ++a) t.rho.add(i, j, a, concat(zeros(m), c.nu.at(i, j, a)));
    for (auto [i, j] : increasing_pairs(m))
        for (std::size_t x = 0; x < n; ++x) t.psi.add(i, j, x, concat(zeros(n), c.phi.at(i, j, x)));
    AbelianExtension e;
    e.base = p;
    e.V_dim = dv;
    e.W_dim = dw;
    e.total = std::move(t);
    e.i1 = vstack(Matrix(n, dv), Matrix::identity(dv));
    e.i2 = vstack(Matrix(m, dw), Matrix::identity(dw));
    e.j1 = hstack(Matrix::identity(n), Matrix(n, dv));
    e.j2 = hstack(Matrix::identity(m), Matrix(m, dw));
    return e;
}

AbelianExtension build_extension(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c) {
    Report rep = is_cocycle2(p, r, c);
    if (!rep.passed()) throw AxiomError("not a 2-cocycle: fails " + rep.first_failure()->label, rep);
    return build_extension_unchecked(p, r, c);
}

Section canonical_section(const AbelianExtension& e) {
    check_extension_shapes(e);
    std::size_t n = e.base.g.dim(), m = e.base.h.dim();
    if (is_block(e.i1, e.j1, n, e.V_dim) && is_block(e.i2, e.j2, m, e.W_dim))
        return {vstack(Matrix::identity(n), Matrix(e.V_dim, n)), vstack(Matrix::identity(m), Matrix(e.W_dim, m))};
    auto s1 = right_inverse(e.j1), s2 = right_inverse(e.j2);
    if (!s1 || !s2) throw InputError("extension: j is not surjective, no section exists");
    return {*s1, *s2};
}

namespace {

Vector fiber_coords(const Matrix& i, const Vector& u, const char* what) {
    auto v = solve(i, u);
    if (!v) throw ContainmentError(std::string("value not in the fiber ") + what, u);
    return *v;
}

// cached left inverses, since extraction reads many fiber values
struct Reader {
    Matrix i, L;
    const char* what;
    Reader(const Matrix& i_, const char* w) : i(i_), what(w) {
        auto l = left_inverse(i);
        if (!l) throw InputError(std::string("extension: injection into ") + w + " is not injective");
        L = *l;
    }
    Vector operator()(const Vector& u) const {
        Vector v = L.apply(u);
        if (i.apply(v) != u) throw ContainmentError(std::string("value not in the fiber ") + what, u);
        return v;
    }
};

} // namespace

Vector fiber_coords_V(const AbelianExtension& e, const Vector& u) { return fiber_coords(e.i1, u, "V"); }
Vector fiber_coords_W(const AbelianExtension& e, const Vector& u) { return fiber_coords(e.i2, u, "W"); }

Cochain2 extract_cocycle(const AbelianExtension& e, const Section& s) {
    if (!validate(e, s).passed()) throw InputError("section is not a right inverse of j");
    const MatchedPair& p = e.base;
    const std::size_t n = p.g.dim(), m = p.h.dim();
    Reader inV(e.i1, "V"), inW(e.i2, "W");
    Cochain2 c{AltTrilinear(n, e.V_dim), AltTrilinear(m, e.W_dim), TriAction(n, m, e.W_dim),
               TriAction(m, n, e.V_dim)};
    auto S1 = [&](std::size_t i) { return s.s1.column(i); };
    auto S2 = [&](std::size_t i) { return s.s2.column(i); };
    const auto &G = e.total.g, &H = e.total.h;
    for (auto [i, j, k] : increasing_triples(n))
        c.omega.set(i, j, k, inV(G(S1(i), S1(j), S1(k)) - s.s1.apply(p.g.bracket(i, j, k))));
    for (auto [i, j, k] : increasing_triples(m))
        c.theta.set(i, j, k, inW(H(S2(i), S2(j), S2(k)) - s.s2.apply(p.h.bracket(i, j, k))));
    for (auto [i, j] : increasing_pairs(n))
        for (std::size_t a = 0; a < m; ++a)
            c.nu.set(i, j, a, inW(e.total.rho(S1(i), S1(j), S2(a)) - s.s2.apply(p.rho.at(i, j, a))));
    for (auto [i, j] : increasing_pairs(m))
        for (std::size_t x = 0; x < n; ++x)
            c.phi.set(i, j, x, inV(e.total.psi(S2(i), S2(j), S1(x)) - s.s1.apply(p.psi.at(i, j, x))));
    return c;
}

MPRepresentation induced_representation(const AbelianExtension& e, const Section& s) {
    if (!validate(e, s).passed()) throw InputError("section is not a right inverse of j");
    const MatchedPair& p = e.base;
    const std::size_t n = p.g.dim(), m = p.h.dim(), dv = e.V_dim, dw = e.W_dim;
    Reader inV(e.i1, "V"), inW(e.i2, "W");
    MPRepresentation r = MPRepresentation::zero(p, dv, dw);
    auto S1 = [&](std::size_t i) { return s.s1.column(i); };
    auto S2 = [&](std::size_t i) { return s.s2.column(i); };
    auto I1 = [&](std::size_t i) { return e.i1.column(i); };
    auto I2 = [&](std::size_t i) { return e.i2.column(i); };
    const auto &G = e.total.g, &H = e.total.h;
    for (auto [i, j] : increasing_pairs(n)) {
        for (std::size_t v = 0; v < dv; ++v) r.rhoV.set(i, j, v, inV(G(S1(i), S1(j), I1(v))));
        for (std::size_t w = 0; w < dw; ++w) r.rhoW.set(i, j, w, inW(e.total.rho(S1(i), S1(j), I2(w))));
    }
    for (auto [i, j] : increasing_pairs(m)) {
        for (std::size_t w = 0; w < dw; ++w) r.psiW.set(i, j, w, inW(H(S2(i), S2(j), I2(w))));
        for (std::size_t v = 0; v < dv; ++v) r.psiV.set(i, j, v, inV(e.total.psi(S2(i), S2(j), I1(v))));
    }
    for (std::size_t v = 0; v < dv; ++v)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t a = 0; a < m; ++a) r.alpha.set(v, x, a, inW(e.total.rho(I1(v), S1(x), S2(a))));
    for (std::size_t w = 0; w < dw; ++w)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t x = 0; x < n; ++x) r.beta.set(w, a, x, inV(e.total.psi(I2(w), S2(a), S1(x))));
    return r;
}

Section shift_section(const AbelianExtension& e, const Section& s, const Cochain1& T) {
    return {s.s1 + e.i1 * T.N1, s.s2 + e.i2 * T.N2};
}

// ---- deformations ----

namespace {

// adjoint-coefficient evaluation context
struct Def {
    const MatchedPair& p;
    const Cochain2& d;
    std::size_t n, m;
    Def(const MatchedPair& p_, const Cochain2& d_) : p(p_), d(d_), n(p.g.dim()), m(p.h.dim()) {}
    Vector X(std::size_t i) const { return unit(n, i); }
    Vector A(std::size_t i) const { return unit(m, i); }
    Vector g(const Vector& a, const Vector& b, const Vector& c) const { return p.g(a, b, c); }
    Vector h(const Vector& a, const Vector& b, const Vector& c) const { return p.h(a, b, c); }
    Vector rho(const Vector& a, const Vector& b, const Vector& c) const { return p.rho(a, b, c); }
    Vector psi(const Vector& a, const Vector& b, const Vector& c) const { return p.psi(a, b, c); }
    Vector om(const Vector& a, const Vector& b, const Vector& c) const { return d.omega(a, b, c); }
    Vector th(const Vector& a, const Vector& b, const Vector& c) const { return d.theta(a, b, c); }
    Vector nu(const Vector& a, const Vector& b, const Vector& c) const { return d.nu(a, b, c); }
    Vector phi(const Vector& a, const Vector& b, const Vector& c) const { return d.phi(a, b, c); }
};

using Sides = std::pair<Vector, Vector>;

Sides inf1(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), x3 = k.X(t[2]), x4 = k.X(t[3]), x5 = k.X(t[4]);
    Vector lhs = k.g(x1, x2, k.om(x3, x4, x5)) + k.om(x1, x2, k.g(x3, x4, x5));
    Vector rhs = k.g(k.om(x1, x2, x3), x4, x5) + k.g(x3, k.om(x1, x2, x4), x5) + k.g(x3, x4, k.om(x1, x2, x5)) +
                 k.om(k.g(x1, x2, x3), x4, x5) + k.om(x3, k.g(x1, x2, x4), x5) + k.om(x3, x4, k.g(x1, x2, x5));
    return {lhs, rhs};
}

Sides inf2(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector a1 = k.A(t[0]), a2 = k.A(t[1]), a3 = k.A(t[2]), a4 = k.A(t[3]), a5 = k.A(t[4]);
    Vector lhs = k.h(a1, a2, k.th(a3, a4, a5)) + k.th(a1, a2, k.h(a3, a4, a5));
    Vector rhs = k.h(k.th(a1, a2, a3), a4, a5) + k.h(a3, k.th(a1, a2, a4), a5) + k.h(a3, a4, k.th(a1, a2, a5)) +
                 k.th(k.h(a1, a2, a3), a4, a5) + k.th(a3, k.h(a1, a2, a4), a5) + k.th(a3, a4, k.h(a1, a2, a5));
    return {lhs, rhs};
}

Sides inf3(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), a1 = k.A(t[2]), a2 = k.A(t[3]), a3 = k.A(t[4]);
    Vector lhs = k.rho(x1, x2, k.th(a1, a2, a3)) + k.nu(x1, x2, k.h(a1, a2, a3));
    Vector rhs = k.h(k.nu(x1, x2, a1), a2, a3) + k.h(a1, k.nu(x1, x2, a2), a3) + k.h(a1, a2, k.nu(x1, x2, a3)) +
                 k.th(k.rho(x1, x2, a1), a2, a3) + k.th(a1, k.rho(x1, x2, a2), a3) + k.th(a1, a2, k.rho(x1, x2, a3));
    return {lhs, rhs};
}

Sides inf4(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector a1 = k.A(t[0]), a2 = k.A(t[1]), x1 = k.X(t[2]), x2 = k.X(t[3]), x3 = k.X(t[4]);
    Vector lhs = k.psi(a1, a2, k.om(x1, x2, x3)) + k.phi(a1, a2, k.g(x1, x2, x3));
    Vector rhs = k.g(k.phi(a1, a2, x1), x2, x3) + k.g(x1, k.phi(a1, a2, x2), x3) + k.g(x1, x2, k.phi(a1, a2, x3)) +
                 k.om(k.psi(a1, a2, x1), x2, x3) + k.om(x1, k.psi(a1, a2, x2), x3) + k.om(x1, x2, k.psi(a1, a2, x3));
    return {lhs, rhs};
}

Sides inf5(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), x3 = k.X(t[2]), a1 = k.A(t[3]), a2 = k.A(t[4]);
    Vector lhs = k.psi(k.nu(x1, x2, a1), a2, x3) + k.phi(k.rho(x1, x2, a1), a2, x3);
    Vector rhs = k.psi(k.nu(x1, x3, a2), a1, x2) + k.phi(k.rho(x1, x3, a2), a1, x2) -
                 k.psi(k.nu(x2, x3, a2), a1, x1) - k.phi(k.rho(x2, x3, a2), a1, x1) +
                 k.g(x1, x2, k.phi(a1, a2, x3)) + k.om(x1, x2, k.psi(a1, a2, x3));
    return {lhs, rhs};
}

Sides inf6(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector a1 = k.A(t[0]), a2 = k.A(t[1]), a3 = k.A(t[2]), x1 = k.X(t[3]), x2 = k.X(t[4]);
    Vector lhs = k.rho(k.phi(a1, a2, x1), x2, a3) + k.nu(k.psi(a1, a2, x1), x2, a3);
    Vector rhs = k.rho(k.phi(a1, a3, x2), x1, a2) + k.nu(k.psi(a1, a3, x2), x1, a2) -
                 k.rho(k.phi(a2, a3, x2), x1, a1) - k.nu(k.psi(a2, a3, x2), x1, a1) +
                 k.h(a1, a2, k.nu(x1, x2, a3)) + k.th(a1, a2, k.rho(x1, x2, a3));
    return {lhs, rhs};
}

Sides inf7(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector a1 = k.A(t[0]), a2 = k.A(t[1]), x1 = k.X(t[2]), x2 = k.X(t[3]), x3 = k.X(t[4]);
    Vector lhs = k.om(k.psi(a1, a2, x1), x2, x3) + k.g(k.phi(a1, a2, x1), x2, x3);
    Vector rhs = k.psi(a1, a2, k.om(x1, x2, x3)) + k.phi(a1, a2, k.g(x1, x2, x3)) +
                 k.phi(k.rho(x2, x3, a1), a2, x1) + k.psi(k.nu(x2, x3, a1), a2, x1) +
                 k.phi(a1, k.rho(x2, x3, a2), x1) + k.psi(a1, k.nu(x2, x3, a2), x1);
    return {lhs, rhs};
}

Sides inf8(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), a1 = k.A(t[2]), a2 = k.A(t[3]), a3 = k.A(t[4]);
    Vector lhs = k.th(k.rho(x1, x2, a1), a2, a3) + k.h(k.nu(x1, x2, a1), a2, a3);
    Vector rhs = k.rho(x1, x2, k.th(a1, a2, a3)) + k.nu(x1, x2, k.h(a1, a2, a3)) +
                 k.nu(k.psi(a2, a3, x1), x2, a1) + k.rho(k.phi(a2, a3, x1), x2, a1) +
                 k.nu(x1, k.psi(a2, a3, x2), a1) + k.rho(x1, k.phi(a2, a3, x2), a1);
    return {lhs, rhs};
}

// t-part of [rho_t(x1,x2), rho_t(x3,x4)] = rho_t(mu_t(x1,x2,x3),x4) + rho_t(x3,mu_t(x1,x2,x4))
Sides infr1(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), x3 = k.X(t[2]), x4 = k.X(t[3]), a = k.A(t[4]);
    Vector lhs = k.nu(x1, x2, k.rho(x3, x4, a)) + k.rho(x1, x2, k.nu(x3, x4, a)) - k.nu(x3, x4, k.rho(x1, x2, a)) -
                 k.rho(x3, x4, k.nu(x1, x2, a));
    Vector rhs = k.nu(k.g(x1, x2, x3), x4, a) + k.rho(k.om(x1, x2, x3), x4, a) + k.nu(x3, k.g(x1, x2, x4), a) +
                 k.rho(x3, k.om(x1, x2, x4), a);
    return {lhs, rhs};
}

// t-part of rho_t(mu_t(x2,x3,x4),x1) = sum over cyclic (x2,x3,x4) of rho_t(x3,x4) rho_t(x2,x1)
Sides infr2(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    Def k(p, d);
    Vector x1 = k.X(t[0]), a = k.A(t[1]), x2 = k.X(t[2]), x3 = k.X(t[3]), x4 = k.X(t[4]);
    Vector lhs = k.nu(k.g(x2, x3, x4), x1, a) + k.rho(k.om(x2, x3, x4), x1, a);
    Vector rhs = zeros(k.m);
    for (auto [u, v, w] : {std::array<const Vector*, 3>{&x2, &x3, &x4}, {&x3, &x4, &x2}, {&x4, &x2, &x3}})
        rhs += k.nu(*v, *w, k.rho(*u, x1, a)) + k.rho(*v, *w, k.nu(*u, x1, a));
    return {lhs, rhs};
}

template <Sides (*F)(const MatchedPair&, const Cochain2&, const Indices&)>
Sides mirrored(const MatchedPair& p, const Cochain2& d, const Indices& t) {
    return F(mirror(p), mirror(d), t);
}

} // namespace

const std::vector<DeformationEquation>& deformation_equations() {
    static const std::vector<DeformationEquation> E{
        {"(inf-1-eqn)", {"x1", "x2", "x3", "x4", "x5"}, {1, 1, 2, 2, 2}, inf1},
        {"(inf-2-eqn)", {"a1", "a2", "a3", "a4", "a5"}, {1, 1, 2, 2, 2}, inf2},
        {"(inf-3-eqn)", {"x1", "x2", "a1", "a2", "a3"}, {1, 1, 2, 2, 2}, inf3},
        {"(inf-4-eqn)", {"a1", "a2", "x1", "x2", "x3"}, {1, 1, 2, 2, 2}, inf4},
        {"(inf-5-eqn)", {"x1", "x2", "x3", "a1", "a2"}, {1, 1, 0, 0, 0}, inf5},
        {"(inf-6-eqn)", {"a1", "a2", "a3", "x1", "x2"}, {1, 1, 0, 0, 0}, inf6},
        {"(inf-7-eqn)", {"a1", "a2", "x1", "x2", "x3"}, {1, 1, 0, 2, 2}, inf7},
        {"(inf-8-eqn)", {"x1", "x2", "a1", "a2", "a3"}, {1, 1, 0, 2, 2}, inf8},
        {"(inf-rho-1)", {"x1", "x2", "x3", "x4", "a"}, {1, 1, 2, 2, 0}, infr1},
        {"(inf-rho-2)", {"x1", "a", "x2", "x3", "x4"}, {0, 0, 1, 1, 1}, infr2},
        {"(inf-psi-1)", {"a1", "a2", "a3", "a4", "x"}, {1, 1, 2, 2, 0}, mirrored<infr1>},
        {"(inf-psi-2)", {"a1", "x", "a2", "a3", "a4"}, {0, 0, 1, 1, 1}, mirrored<infr2>},
    };
    return E;
}

namespace {

void check_deformation_shapes(const MatchedPair& p, const Cochain2& d) {
    p.check_shapes();
    std::size_t n = p.g.dim(), m = p.h.dim();
    if (d.omega.in_dim() != n || d.omega.out_dim() != n || d.theta.in_dim() != m || d.theta.out_dim() != m ||
        d.nu.pair_dim() != n || d.nu.target_dim() != m || d.nu.out_dim() != m || d.phi.pair_dim() != m ||
        d.phi.target_dim() != n || d.phi.out_dim() != n)
        throw DimensionError("deformation shapes must be g^3->g, h^3->h, g^2 h->h, h^2 g->g");
}

} // namespace

Report verify_deformation(const MatchedPair& p, const Cochain2& d) {
    check_deformation_shapes(p, d);
    Report r{"infinitesimal deformation", {}};
    for (auto& eq : deformation_equations()) {
        std::vector<Slot> slots;
        for (std::size_t i = 0; i < eq.vars.size(); ++i)
            slots.push_back({eq.vars[i], eq.vars[i][0] == 'x' ? &p.g.names() : &p.h.names(), eq.groups[i]});
        // mirrored equations evaluate on swapped data; precompute once
        bool swapped = eq.label.find("psi") != std::string::npos;
        MatchedPair q = swapped ? mirror(p) : MatchedPair{};
        Cochain2 dd = swapped ? mirror(d) : Cochain2{};
        if (swapped) {
            r.add(check_identity(eq.label, slots, [&](const Indices& t) {
                return eq.label == "(inf-psi-1)" ? infr1(q, dd, t) : infr2(q, dd, t);
            }));
        } else {
            r.add(check_identity(eq.label, slots, [&](const Indices& t) { return eq.sides(p, d, t); }));
        }
    }
    return r;
}

Report deformations_equivalent(const MatchedPair& p, const Cochain2& d, const Cochain2& d2, const Matrix& f,
                               const Matrix& gm) {
    check_deformation_shapes(p, d);
    check_deformation_shapes(p, d2);
    const std::size_t n = p.g.dim(), m = p.h.dim();
    if (f.rows() != n || f.cols() != n || gm.rows() != m || gm.cols() != m)
        throw DimensionError("equivalence maps must be g -> g and h -> h");
    Report r{"deformation equivalence", {}};
    auto G = [&](std::size_t i) { return unit(n, i); };
    auto H = [&](std::size_t i) { return unit(m, i); };
    r.add(check_identity("(inf-7-eqn) omega", {{"x1", &p.g.names(), 1}, {"x2", &p.g.names(), 1}, {"x3", &p.g.names(), 1}},
                         [&](const Indices& t) {
                             Vector x1 = G(t[0]), x2 = G(t[1]), x3 = G(t[2]);
                             Vector lhs = d.omega(x1, x2, x3) - d2.omega(x1, x2, x3);
                             Vector rhs = p.g(x1, f.apply(x2), x3) - f.apply(p.g(x1, x2, x3)) +
                                          p.g(f.apply(x1), x2, x3) + p.g(x1, x2, f.apply(x3));
                             return std::pair{lhs, rhs};
                         }));
    r.add(check_identity("(inf-8-eqn) theta", {{"a1", &p.h.names(), 1}, {"a2", &p.h.names(), 1}, {"a3", &p.h.names(), 1}},
                         [&](const Indices& t) {
                             Vector a1 = H(t[0]), a2 = H(t[1]), a3 = H(t[2]);
                             Vector lhs = d.theta(a1, a2, a3) - d2.theta(a1, a2, a3);
                             Vector rhs = p.h(a1, gm.apply(a2), a3) - gm.apply(p.h(a1, a2, a3)) +
                                          p.h(gm.apply(a1), a2, a3) + p.h(a1, a2, gm.apply(a3));
                             return std::pair{lhs, rhs};
                         }));
    // the f(x1), f(x2) term enters linearly: rho(f x1, x2) + rho(x1, f x2)
    r.add(check_identity("(inf-9-eqn) nu", {{"x1", &p.g.names(), 1}, {"x2", &p.g.names(), 1}, {"a", &p.h.names(), 0}},
                         [&](const Indices& t) {
                             Vector x1 = G(t[0]), x2 = G(t[1]), a = H(t[2]);
                             Vector lhs = d.nu(x1, x2, a) - d2.nu(x1, x2, a);
                             Vector rhs = p.rho(x1, x2, gm.apply(a)) - gm.apply(p.rho(x1, x2, a)) +
                                          p.rho(f.apply(x1), x2, a) + p.rho(x1, f.apply(x2), a);
                             return std::pair{lhs, rhs};
                         }));
    r.add(check_identity("(inf-10-eqn) phi", {{"a1", &p.h.names(), 1}, {"a2", &p.h.names(), 1}, {"x", &p.g.names(), 0}},
                         [&](const Indices& t) {
                             Vector a1 = H(t[0]), a2 = H(t[1]), x = G(t[2]);
                             Vector lhs = d.phi(a1, a2, x) - d2.phi(a1, a2, x);
                             Vector rhs = p.psi(a1, a2, f.apply(x)) - f.apply(p.psi(a1, a2, x)) +
                                          p.psi(gm.apply(a1), a2, x) + p.psi(a1, gm.apply(a2), x);
                             return std::pair{lhs, rhs};
                         }));
    return r;
}

Report extensions_isomorphic(const AbelianExtension& e, const AbelianExtension& e2, const Matrix& f,
                             const Matrix& gm) {
    check_extension_shapes(e);
    check_extension_shapes(e2);
    if (e.base.g.dim() != e2.base.g.dim() || e.base.h.dim() != e2.base.h.dim() || e.V_dim != e2.V_dim ||
        e.W_dim != e2.W_dim)
        throw DimensionError("extensions must share base and fiber dimensions");
    std::size_t G = e.total.g.dim(), H = e.total.h.dim();
    if (f.rows() != G || f.cols() != G || gm.rows() != H || gm.cols() != H)
        throw DimensionError("isomorphism candidate has the wrong shape");
    Report r{"extension isomorphism", {}};
    r.add(flag("f, g invertible", rank(f) == G && rank(gm) == H));
    r.absorb(verify_mp_morphism(f, gm, e.total, e2.total), "f x g");
    r.add(matrix_check("f i1 = i1'", f * e.i1, e2.i1));
    r.add(matrix_check("g i2 = i2'", gm * e.i2, e2.i2));
    r.add(matrix_check("j1' f = j1", e2.j1 * f, e.j1));
    r.add(matrix_check("j2' g = j2", e2.j2 * gm, e.j2));
    return r;
}

} // namespace tlmp
