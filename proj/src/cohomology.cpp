#include "tlmp/cohomology.hpp"

namespace tlmp {

Cochain1 Cochain1::zero(const MatchedPair& p, const MPRepresentation& r) {
    return Cochain1{Matrix(r.V_dim, p.g.dim()), Matrix(r.W_dim, p.h.dim())};
}

Cochain2 Cochain2::zero(const MatchedPair& p, const MPRepresentation& r) {
    std::size_t n = p.g.dim(), m = p.h.dim();
    return Cochain2{AltTrilinear(n, r.V_dim), AltTrilinear(m, r.W_dim), TriAction(n, m, r.W_dim),
                    TriAction(m, n, r.V_dim)};
}

void Cochain2::check_shapes(const MatchedPair& p, const MPRepresentation& r) const {
    std::size_t n = p.g.dim(), m = p.h.dim();
    if (omega.in_dim() != n || omega.out_dim() != r.V_dim) throw DimensionError("omega must map /\\^3 g -> V");
    if (theta.in_dim() != m || theta.out_dim() != r.W_dim) throw DimensionError("theta must map /\\^3 h -> W");
    if (nu.pair_dim() != n || nu.target_dim() != m || nu.out_dim() != r.W_dim)
        throw DimensionError("nu must map /\\^2 g (x) h -> W");
    if (phi.pair_dim() != m || phi.target_dim() != n || phi.out_dim() != r.V_dim)
        throw DimensionError("phi must map /\\^2 h (x) g -> V");
}

bool Cochain2::is_zero() const { return omega.is_zero() && theta.is_zero() && nu.is_zero() && phi.is_zero(); }

Cochain1 operator+(const Cochain1& a, const Cochain1& b) { return {a.N1 + b.N1, a.N2 + b.N2}; }
Cochain1 operator*(const Rational& s, const Cochain1& a) { return {s * a.N1, s * a.N2}; }
Cochain2 operator+(const Cochain2& a, const Cochain2& b) {
    return {a.omega + b.omega, a.theta + b.theta, a.nu + b.nu, a.phi + b.phi};
}
Cochain2 operator-(const Cochain2& a, const Cochain2& b) { return a + Rational(-1) * b; }
Cochain2 operator*(const Rational& s, const Cochain2& a) { return {s * a.omega, s * a.theta, s * a.nu, s * a.phi}; }

Cochain1 mirror(const Cochain1& c) { return {c.N2, c.N1}; }
Cochain2 mirror(const Cochain2& c) { return {c.theta, c.omega, c.phi, c.nu}; }

Vector Cochain3Image::flatten() const {
    Vector v;
    for (auto& c : components)
        for (auto& x : c.values) v.insert(v.end(), x.begin(), x.end());
    return v;
}

bool Cochain3Image::is_zero() const {
    for (auto& c : components)
        for (auto& x : c.values)
            if (!tlmp::is_zero(x)) return false;
    return true;
}

CochainDims cochain_dims(const MatchedPair& p, const MPRepresentation& r) {
    std::size_t n = p.g.dim(), m = p.h.dim(), dv = r.V_dim, dw = r.W_dim;
    return CochainDims{n * dv + m * dw,
                       {binomial(n, 3) * dv, binomial(m, 3) * dw, binomial(n, 2) * m * dw, binomial(m, 2) * n * dv}};
}

// --- serialization ---

Vector serialize(const Cochain1& c) {
    Vector v;
    for (const Matrix* N : {&c.N1, &c.N2})
        for (std::size_t x = 0; x < N->cols(); ++x)
            for (std::size_t o = 0; o < N->rows(); ++o) v.push_back((*N)(o, x));
    return v;
}

Vector serialize(const Cochain2& c) {
    Vector v;
    for (const AltTrilinear* t : {&c.omega, &c.theta})
        for (auto [i, j, k] : increasing_triples(t->in_dim())) {
            auto e = t->at(i, j, k);
            v.insert(v.end(), e.begin(), e.end());
        }
    for (const TriAction* t : {&c.nu, &c.phi})
        for (auto [i, j] : increasing_pairs(t->pair_dim()))
            for (std::size_t s = 0; s < t->target_dim(); ++s) {
                auto e = t->at(i, j, s);
                v.insert(v.end(), e.begin(), e.end());
            }
    return v;
}

Cochain1 deserialize_cochain1(const MatchedPair& p, const MPRepresentation& r, const Vector& x) {
    Cochain1 c = Cochain1::zero(p, r);
    if (x.size() != cochain_dims(p, r).c1) throw DimensionError("1-cochain coordinate vector has wrong length");
    std::size_t pos = 0;
    for (Matrix* N : {&c.N1, &c.N2})
        for (std::size_t col = 0; col < N->cols(); ++col)
            for (std::size_t o = 0; o < N->rows(); ++o) (*N)(o, col) = x[pos++];
    return c;
}

Cochain2 deserialize_cochain2(const MatchedPair& p, const MPRepresentation& r, const Vector& x) {
    Cochain2 c = Cochain2::zero(p, r);
    if (x.size() != cochain_dims(p, r).c2_total()) throw DimensionError("2-cochain coordinate vector has wrong length");
    std::size_t pos = 0;
    auto take = [&](std::size_t len) {
        Vector e = slice(x, pos, len);
        pos += len;
        return e;
    };
    for (AltTrilinear* t : {&c.omega, &c.theta})
        for (auto [i, j, k] : increasing_triples(t->in_dim())) t->set(i, j, k, take(t->out_dim()));
    for (TriAction* t : {&c.nu, &c.phi})
        for (auto [i, j] : increasing_pairs(t->pair_dim()))
            for (std::size_t s = 0; s < t->target_dim(); ++s) t->set(i, j, s, take(t->out_dim()));
    return c;
}

// --- D1 ---

namespace {

// omega and nu parts of D1; theta and phi come from the mirrored data
void d1_half(const MatchedPair& p, const MPRepresentation& r, const Cochain1& c, AltTrilinear& omega,
             TriAction& nu) {
    const std::size_t n = p.g.dim(), m = p.h.dim();
    auto N1 = [&](const Vector& x) { return c.N1.apply(x); };
    auto N2 = [&](const Vector& a) { return c.N2.apply(a); };
    for (auto [i, j, k] : increasing_triples(n)) {
        Vector x1 = unit(n, i), x2 = unit(n, j), x3 = unit(n, k);
        // [x1, N1 x2, x3] - N1[x1,x2,x3] + [N1 x1, x2, x3] + [x1, x2, N1 x3]
        Vector v = r.rhoV(x3, x1, N1(x2)) - N1(p.g(x1, x2, x3)) + r.rhoV(x2, x3, N1(x1)) + r.rhoV(x1, x2, N1(x3));
        omega.set(i, j, k, v);
    }
    for (auto [i, j] : increasing_pairs(n))
        for (std::size_t t = 0; t < m; ++t) {
            Vector x1 = unit(n, i), x2 = unit(n, j), a = unit(m, t);
            Vector w = r.rhoW(x1, x2, N2(a)) - N2(p.rho(x1, x2, a)) + r.alpha(N1(x1), x2, a) - r.alpha(N1(x2), x1, a);
            nu.set(i, j, t, w);
        }
}

} // namespace

Cochain2 d1(const MatchedPair& p, const MPRepresentation& r, const Cochain1& c) {
    r.check_shapes(p);
    if (c.N1.rows() != r.V_dim || c.N1.cols() != p.g.dim() || c.N2.rows() != r.W_dim || c.N2.cols() != p.h.dim())
        throw DimensionError("1-cochain shape mismatch");
    Cochain2 out = Cochain2::zero(p, r);
    d1_half(p, r, c, out.omega, out.nu);
    d1_half(mirror(p), mirror(r), mirror(c), out.theta, out.phi);
    return out;
}

// --- D2 ---

namespace {

struct Ctx {
    const MatchedPair& p;
    const MPRepresentation& r;
    const Cochain2& c;
    std::size_t n, m;
    Ctx(const MatchedPair& p_, const MPRepresentation& r_, const Cochain2& c_)
        : p(p_), r(r_), c(c_), n(p.g.dim()), m(p.h.dim()) {}
    Vector X(std::size_t i) const { return unit(n, i); }
    Vector A(std::size_t i) const { return unit(m, i); }
    Vector gb(const Vector& x, const Vector& y, const Vector& z) const { return p.g(x, y, z); }
    Vector hb(const Vector& x, const Vector& y, const Vector& z) const { return p.h(x, y, z); }
    Vector rho(const Vector& x, const Vector& y, const Vector& a) const { return p.rho(x, y, a); }
    Vector psi(const Vector& a, const Vector& b, const Vector& x) const { return p.psi(a, b, x); }
    Vector rhoV(const Vector& x, const Vector& y, const Vector& v) const { return r.rhoV(x, y, v); }
    Vector rhoW(const Vector& x, const Vector& y, const Vector& w) const { return r.rhoW(x, y, w); }
    Vector psiV(const Vector& a, const Vector& b, const Vector& v) const { return r.psiV(a, b, v); }
    Vector psiW(const Vector& a, const Vector& b, const Vector& w) const { return r.psiW(a, b, w); }
    Vector alpha(const Vector& v, const Vector& x, const Vector& a) const { return r.alpha(v, x, a); }
    Vector beta(const Vector& w, const Vector& a, const Vector& x) const { return r.beta(w, a, x); }
    Vector omega(const Vector& x, const Vector& y, const Vector& z) const { return c.omega(x, y, z); }
    Vector theta(const Vector& x, const Vector& y, const Vector& z) const { return c.theta(x, y, z); }
    Vector nu(const Vector& x, const Vector& y, const Vector& a) const { return c.nu(x, y, a); }
    Vector phi(const Vector& a, const Vector& b, const Vector& x) const { return c.phi(a, b, x); }
};

// (2co-1): x1<x2, x3<x4<x5, values in V
Vector co1(const Ctx& k, const Indices& t) {
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), x3 = k.X(t[2]), x4 = k.X(t[3]), x5 = k.X(t[4]);
    Vector v = k.rhoV(x4, x5, k.omega(x1, x2, x3)) + k.rhoV(x5, x3, k.omega(x1, x2, x4)) +
               k.rhoV(x3, x4, k.omega(x1, x2, x5));
    v += k.omega(k.gb(x1, x2, x3), x4, x5) + k.omega(x3, k.gb(x1, x2, x4), x5) + k.omega(x3, x4, k.gb(x1, x2, x5));
    v -= k.rhoV(x1, x2, k.omega(x3, x4, x5)) + k.omega(x1, x2, k.gb(x3, x4, x5));
    return v;
}

// (2co-2): (x1,x2,a1,a2,a3) -> W
Vector co2(const Ctx& k, const Indices& t) {
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), a1 = k.A(t[2]), a2 = k.A(t[3]), a3 = k.A(t[4]);
    Vector w = k.psiW(a2, a3, k.nu(x1, x2, a1)) + k.psiW(a3, a1, k.nu(x1, x2, a2)) + k.psiW(a1, a2, k.nu(x1, x2, a3));
    w += k.theta(k.rho(x1, x2, a1), a2, a3) + k.theta(a1, k.rho(x1, x2, a2), a3) + k.theta(a1, a2, k.rho(x1, x2, a3));
    w -= k.rhoW(x1, x2, k.theta(a1, a2, a3)) + k.nu(x1, x2, k.hb(a1, a2, a3));
    return w;
}

// (2co-4): (x1,x2,x3,a1,a2) -> V
Vector co4(const Ctx& k, const Indices& t) {
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), x3 = k.X(t[2]), a1 = k.A(t[3]), a2 = k.A(t[4]);
    Vector v = k.beta(k.nu(x1, x3, a2), a1, x2) + k.phi(k.rho(x1, x3, a2), a1, x2);
    v -= k.beta(k.nu(x2, x3, a2), a1, x1) + k.phi(k.rho(x2, x3, a2), a1, x1);
    v += k.rhoV(x1, x2, k.phi(a1, a2, x3)) + k.omega(x1, x2, k.psi(a1, a2, x3));
    v -= k.beta(k.nu(x1, x2, a1), a2, x3) + k.phi(k.rho(x1, x2, a1), a2, x3);
    return v;
}

// (2co-6): (a1,a2,x1,x2,x3) -> V
Vector co6(const Ctx& k, const Indices& t) {
    Vector a1 = k.A(t[0]), a2 = k.A(t[1]), x1 = k.X(t[2]), x2 = k.X(t[3]), x3 = k.X(t[4]);
    Vector v = k.psiV(a1, a2, k.omega(x1, x2, x3)) + k.phi(a1, a2, k.gb(x1, x2, x3));
    v += k.phi(k.rho(x2, x3, a1), a2, x1) + k.beta(k.nu(x2, x3, a1), a2, x1);
    v += k.phi(a1, k.rho(x2, x3, a2), x1) - k.beta(k.nu(x2, x3, a2), a1, x1);
    v -= k.omega(k.psi(a1, a2, x1), x2, x3) + k.rhoV(x2, x3, k.phi(a1, a2, x1));
    return v;
}

// rep-rho-1: (x1,x2,x3,x4,a) -> W, the deformation of
// [rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4])
Vector rep1(const Ctx& k, const Indices& t) {
    Vector x1 = k.X(t[0]), x2 = k.X(t[1]), x3 = k.X(t[2]), x4 = k.X(t[3]), a = k.A(t[4]);
    Vector w = k.nu(k.gb(x1, x2, x3), x4, a) + k.alpha(k.omega(x1, x2, x3), x4, a);
    w += k.nu(x3, k.gb(x1, x2, x4), a) - k.alpha(k.omega(x1, x2, x4), x3, a);
    w += k.nu(x3, x4, k.rho(x1, x2, a)) + k.rhoW(x3, x4, k.nu(x1, x2, a));
    w -= k.nu(x1, x2, k.rho(x3, x4, a)) + k.rhoW(x1, x2, k.nu(x3, x4, a));
    return w;
}

// rep-rho-2: (x1,a,x2,x3,x4) -> W, the deformation of
// rho([x2,x3,x4],x1) = rho(x3,x4)rho(x2,x1) + rho(x4,x2)rho(x3,x1) + rho(x2,x3)rho(x4,x1)
Vector rep2(const Ctx& k, const Indices& t) {
    Vector x1 = k.X(t[0]), a = k.A(t[1]), x2 = k.X(t[2]), x3 = k.X(t[3]), x4 = k.X(t[4]);
    Vector w = k.nu(x3, x4, k.rho(x2, x1, a)) + k.rhoW(x3, x4, k.nu(x2, x1, a));
    w += k.nu(x4, x2, k.rho(x3, x1, a)) + k.rhoW(x4, x2, k.nu(x3, x1, a));
    w += k.nu(x2, x3, k.rho(x4, x1, a)) + k.rhoW(x2, x3, k.nu(x4, x1, a));
    w -= k.nu(k.gb(x2, x3, x4), x1, a) + k.alpha(k.omega(x2, x3, x4), x1, a);
    return w;
}

struct Half {
    std::string label;
    std::vector<std::string> vars; // g-side names: x.., a..
    std::string spaces;            // 'g' / 'h' per slot, g-side
    std::vector<int> groups;
    Vector (*eval)(const Ctx&, const Indices&);
    std::string mirror_label;
};

// The twelve components, in image order.  Mirrored ones swap x<->a, g<->h.
const std::vector<std::pair<const Half*, bool>>& layout() {
    static const Half h1{"(2co-1)", {"x1", "x2", "x3", "x4", "x5"}, "ggggg", {1, 1, 2, 2, 2}, co1, "(2co-8)"};
    static const Half h2{"(2co-2)", {"x1", "x2", "a1", "a2", "a3"}, "gghhh", {1, 1, 2, 2, 2}, co2, "(2co-3)"};
    static const Half h4{"(2co-4)", {"x1", "x2", "x3", "a1", "a2"}, "ggghh", {1, 1, 0, 0, 0}, co4, "(2co-5)"};
    static const Half h6{"(2co-6)", {"a1", "a2", "x1", "x2", "x3"}, "hhggg", {1, 1, 0, 2, 2}, co6, "(2co-7)"};
    static const Half r1{"rep-rho-1", {"x1", "x2", "x3", "x4", "a"}, "ggggh", {1, 1, 2, 2, 0}, rep1, "rep-psi-1"};
    static const Half r2{"rep-rho-2", {"x1", "a", "x2", "x3", "x4"}, "ghggg", {0, 0, 1, 1, 1}, rep2, "rep-psi-2"};
    static const std::vector<std::pair<const Half*, bool>> L{
        {&h1, false}, {&h2, false}, {&h2, true}, {&h4, false}, {&h4, true}, {&h6, false},
        {&h6, true},  {&h1, true},  {&r1, false}, {&r2, false}, {&r1, true}, {&r2, true}};
    return L;
}

std::string swap_letter(const std::string& v) {
    if (v.empty()) return v;
    std::string s = v;
    s[0] = s[0] == 'x' ? 'a' : (s[0] == 'a' ? 'x' : s[0]);
    return s;
}

ImageComponent compute_component(const Half& h, bool mirrored, const MatchedPair& p, const MPRepresentation& r,
                                 const Cochain2& c) {
    ImageComponent out;
    out.label = mirrored ? h.mirror_label : h.label;
    MatchedPair mp;
    MPRepresentation mr;
    Cochain2 mc;
    if (mirrored) {
        mp = mirror(p);
        mr = mirror(r);
        mc = mirror(c);
    }
    const MatchedPair& q = mirrored ? mp : p;
    const MPRepresentation& s = mirrored ? mr : r;
    const Cochain2& cc = mirrored ? mc : c;
    Ctx k(q, s, cc);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < h.vars.size(); ++i) {
        out.vars.push_back(mirrored ? swap_letter(h.vars[i]) : h.vars[i]);
        dims.push_back(h.spaces[i] == 'g' ? q.g.dim() : q.h.dim());
    }
    for_each_tuple(dims, h.groups, [&](const Indices& t) {
        out.tuples.push_back(t);
        out.values.push_back(h.eval(k, t));
        return true;
    });
    return out;
}

} // namespace

Cochain3Image d2(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c) {
    r.check_shapes(p);
    c.check_shapes(p, r);
    Cochain3Image img;
    for (auto [h, mirrored] : layout()) img.components.push_back(compute_component(*h, mirrored, p, r, c));
    return img;
}

Matrix d1_matrix(const MatchedPair& p, const MPRepresentation& r) {
    auto dims = cochain_dims(p, r);
    Matrix m(dims.c2_total(), dims.c1);
    for (std::size_t j = 0; j < dims.c1; ++j)
        m.set_column(j, serialize(d1(p, r, deserialize_cochain1(p, r, unit(dims.c1, j)))));
    return m;
}

Matrix d2_matrix(const MatchedPair& p, const MPRepresentation& r) {
    auto dims = cochain_dims(p, r);
    std::size_t rows = d2(p, r, Cochain2::zero(p, r)).flatten().size();
    Matrix m(rows, dims.c2_total());
    for (std::size_t j = 0; j < dims.c2_total(); ++j)
        m.set_column(j, d2(p, r, deserialize_cochain2(p, r, unit(dims.c2_total(), j))).flatten());
    return m;
}

Report is_cocycle2(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c) {
    Report rep{"2-cocycle", {}};
    Cochain3Image img = d2(p, r, c);
    auto gN = p.g.names(), hN = p.h.names();
    for (auto& comp : img.components) {
        Check ch;
        ch.label = comp.label;
        for (std::size_t i = 0; i < comp.tuples.size(); ++i) {
            ++ch.tuples;
            if (tlmp::is_zero(comp.values[i])) continue;
            ch.passed = false;
            Witness w;
            for (std::size_t s = 0; s < comp.vars.size(); ++s) {
                bool in_g = comp.vars[s][0] == 'x';
                w.args.push_back(comp.vars[s] + "=" + (in_g ? gN : hN)[comp.tuples[i][s]]);
            }
            w.lhs = comp.values[i];
            w.rhs = zeros(w.lhs.size());
            ch.witness = std::move(w);
            break;
        }
        rep.add(std::move(ch));
    }
    return rep;
}

Subspace z1_basis(const MatchedPair& p, const MPRepresentation& r) { return kernel_basis(d1_matrix(p, r)); }
Subspace z2_basis(const MatchedPair& p, const MPRepresentation& r) { return kernel_basis(d2_matrix(p, r)); }
Subspace b2_basis(const MatchedPair& p, const MPRepresentation& r) { return image_basis(d1_matrix(p, r)); }

H2 h2(const MatchedPair& p, const MPRepresentation& r) {
    H2 out{0, z2_basis(p, r), b2_basis(p, r), {}};
    try {
        out.dim = quotient_dim(out.z2, out.b2);
    } catch (const ContainmentError& e) {
        throw ConsistencyError("internal: a 2-coboundary is not a 2-cocycle " + to_string(e.vector));
    }
    out.representatives = quotient_representatives(out.z2, out.b2);
    return out;
}

std::size_t h2_dim(const MatchedPair& p, const MPRepresentation& r) { return h2(p, r).dim; }

std::optional<Cochain1> is_coboundary2(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c) {
    c.check_shapes(p, r);
    auto x = solve(d1_matrix(p, r), serialize(c));
    if (!x) return std::nullopt;
    return deserialize_cochain1(p, r, *x);
}

std::optional<Cochain1> cohomologous(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c,
                                     const Cochain2& c2) {
    return is_coboundary2(p, r, c - c2);
}

} // namespace tlmp
