#include "tlmp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tlmp {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t count(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t index(const json& j, std::size_t bound, const char* what) {
    std::size_t i = count(j, what);
    if (i >= bound) throw DimensionError(std::string(what) + " index out of range");
    return i;
}

const json& array(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    return j;
}

// optional sparse entry list
const json& entries(const json& j, const char* key) {
    static const json empty = json::array();
    if (!j.is_object()) throw InputError("expected an object");
    auto it = j.find(key);
    if (it == j.end()) return empty;
    return array(*it, key);
}

template <class Key>
void unique(std::set<Key>& seen, const Key& k, const char* what) {
    if (!seen.insert(k).second) throw InputError(std::string("duplicate entry in ") + what);
}

json triples_json(const AltTrilinear& t) {
    json out = json::array();
    for (auto [i, j, k] : increasing_triples(t.in_dim())) {
        Vector v = t.at(i, j, k);
        if (!is_zero(v)) out.push_back({{"on", {i, j, k}}, {"value", to_json(v)}});
    }
    return out;
}

void triples_from(const json& list, AltTrilinear& t, const char* what) {
    std::set<std::array<std::size_t, 3>> seen;
    for (auto& e : array(list, what)) {
        auto& on = array(field(e, "on"), "on");
        if (on.size() != 3) throw InputError(std::string(what) + ": \"on\" needs three indices");
        std::array<std::size_t, 3> ix{index(on[0], t.in_dim(), what), index(on[1], t.in_dim(), what),
                                      index(on[2], t.in_dim(), what)};
        Vector v = vector_from_json(field(e, "value"), t.out_dim());
        auto key = ix;
        std::sort(key.begin(), key.end());
        unique(seen, key, what);
        t.set(ix[0], ix[1], ix[2], v);
    }
}

json actions_json(const TriAction& t) {
    json out = json::array();
    for (auto [i, j] : increasing_pairs(t.pair_dim()))
        for (std::size_t k = 0; k < t.target_dim(); ++k) {
            Vector v = t.at(i, j, k);
            if (!is_zero(v)) out.push_back({{"pair", {i, j}}, {"on", k}, {"value", to_json(v)}});
        }
    return out;
}

void actions_from(const json& list, TriAction& t, const char* what) {
    std::set<std::array<std::size_t, 3>> seen;
    for (auto& e : array(list, what)) {
        auto& pr = array(field(e, "pair"), "pair");
        if (pr.size() != 2) throw InputError(std::string(what) + ": \"pair\" needs two indices");
        std::size_t i = index(pr[0], t.pair_dim(), what), j = index(pr[1], t.pair_dim(), what);
        std::size_t k = index(field(e, "on"), t.target_dim(), what);
        Vector v = vector_from_json(field(e, "value"), t.out_dim());
        unique(seen, {std::min(i, j), std::max(i, j), k}, what);
        t.set(i, j, k, v);
    }
}

json pairing_json(const Pairing& t, const char* a, const char* b, const char* c) {
    json out = json::array();
    for (std::size_t i = 0; i < t.a_dim(); ++i)
        for (std::size_t j = 0; j < t.b_dim(); ++j)
            for (std::size_t k = 0; k < t.c_dim(); ++k) {
                Vector v = t.at(i, j, k);
                if (!is_zero(v)) out.push_back({{a, i}, {b, j}, {c, k}, {"value", to_json(v)}});
            }
    return out;
}

void pairing_from(const json& list, Pairing& t, const char* a, const char* b, const char* c, const char* what) {
    std::set<std::array<std::size_t, 3>> seen;
    for (auto& e : array(list, what)) {
        std::array<std::size_t, 3> k{index(field(e, a), t.a_dim(), a), index(field(e, b), t.b_dim(), b),
                                     index(field(e, c), t.c_dim(), c)};
        unique(seen, k, what);
        t.set(k[0], k[1], k[2], vector_from_json(field(e, "value"), t.out_dim()));
    }
}

struct Dims {
    std::size_t g, h, V, W;
};

json dims_json(const Dims& d) { return {{"g", d.g}, {"h", d.h}, {"V", d.V}, {"W", d.W}}; }

Dims dims_from(const json& j) {
    const json& d = field(j, "dims");
    return {count(field(d, "g"), "dims.g"), count(field(d, "h"), "dims.h"), count(field(d, "V"), "dims.V"),
            count(field(d, "W"), "dims.W")};
}

} // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("rational must be a string \"p/q\" or an integer");
}

json to_json(const Vector& v) {
    json out = json::array();
    for (auto& q : v) out.push_back(to_json(q));
    return out;
}

Vector vector_from_json(const json& j, std::size_t len) {
    array(j, "vector");
    if (j.size() != len)
        throw DimensionError("vector of length " + std::to_string(j.size()) + ", expected " + std::to_string(len));
    Vector v;
    for (auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    array(j, "matrix");
    if (j.size() != rows)
        throw DimensionError("matrix with " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    std::vector<Vector> rs;
    for (auto& r : j) rs.push_back(vector_from_json(r, cols));
    return Matrix::from_rows(rs, cols);
}

Matrix matrix_from_json(const json& j) {
    array(j, "matrix");
    if (j.empty()) return Matrix(0, 0);
    return matrix_from_json(j, j.size(), array(j[0], "matrix row").size());
}

json to_json(const ThreeLie& g) {
    return {{"dim", g.dim()}, {"basis", g.names()}, {"brackets", triples_json(g.structure())}};
}

ThreeLie algebra_from_json(const json& j) {
    std::size_t n = count(field(j, "dim"), "dim");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        for (auto& s : array(j["basis"], "basis")) {
            if (!s.is_string()) throw InputError("basis labels must be strings");
            names.push_back(s.get<std::string>());
        }
        if (names.size() != n) throw DimensionError("basis has " + std::to_string(names.size()) + " labels, dim is " +
                                                    std::to_string(n));
    }
    ThreeLie g(n, names);
    AltTrilinear t(n, n);
    triples_from(entries(j, "brackets"), t, "brackets");
    for (auto [a, b, c] : increasing_triples(n)) g.set_bracket(a, b, c, t.at(a, b, c));
    return g;
}

json to_json(const MatchedPair& p) {
    return {{"g", to_json(p.g)}, {"h", to_json(p.h)}, {"rho", actions_json(p.rho)}, {"psi", actions_json(p.psi)}};
}

MatchedPair pair_from_json(const json& j) {
    MatchedPair p = MatchedPair::trivial(algebra_from_json(field(j, "g")), algebra_from_json(field(j, "h")));
    actions_from(entries(j, "rho"), p.rho, "rho");
    actions_from(entries(j, "psi"), p.psi, "psi");
    return p;
}

json to_json(const MPRepresentation& r) {
    return {{"V_dim", r.V_dim},
            {"W_dim", r.W_dim},
            {"rhoV", actions_json(r.rhoV)},
            {"rhoW", actions_json(r.rhoW)},
            {"psiV", actions_json(r.psiV)},
            {"psiW", actions_json(r.psiW)},
            {"alpha", pairing_json(r.alpha, "v", "x", "a")},
            {"beta", pairing_json(r.beta, "w", "a", "x")}};
}

MPRepresentation representation_from_json(const json& j, const MatchedPair& p) {
    MPRepresentation r =
        MPRepresentation::zero(p, count(field(j, "V_dim"), "V_dim"), count(field(j, "W_dim"), "W_dim"));
    actions_from(entries(j, "rhoV"), r.rhoV, "rhoV");
    actions_from(entries(j, "rhoW"), r.rhoW, "rhoW");
    actions_from(entries(j, "psiV"), r.psiV, "psiV");
    actions_from(entries(j, "psiW"), r.psiW, "psiW");
    pairing_from(entries(j, "alpha"), r.alpha, "v", "x", "a", "alpha");
    pairing_from(entries(j, "beta"), r.beta, "w", "a", "x", "beta");
    return r;
}

json to_json(const Cochain1& c) {
    return {{"dims", dims_json({c.N1.cols(), c.N2.cols(), c.N1.rows(), c.N2.rows()})},
            {"N1", to_json(c.N1)},
            {"N2", to_json(c.N2)}};
}

Cochain1 cochain1_from_json(const json& j) {
    Dims d = dims_from(j);
    return {matrix_from_json(field(j, "N1"), d.V, d.g), matrix_from_json(field(j, "N2"), d.W, d.h)};
}

json to_json(const Cochain2& c) {
    return {{"dims", dims_json({c.omega.in_dim(), c.theta.in_dim(), c.omega.out_dim(), c.theta.out_dim()})},
            {"omega", triples_json(c.omega)},
            {"theta", triples_json(c.theta)},
            {"nu", actions_json(c.nu)},
            {"phi", actions_json(c.phi)}};
}

Cochain2 cochain2_from_json(const json& j) {
    Dims d = dims_from(j);
    Cochain2 c{AltTrilinear(d.g, d.V), AltTrilinear(d.h, d.W), TriAction(d.g, d.h, d.W), TriAction(d.h, d.g, d.V)};
    triples_from(entries(j, "omega"), c.omega, "omega");
    triples_from(entries(j, "theta"), c.theta, "theta");
    actions_from(entries(j, "nu"), c.nu, "nu");
    actions_from(entries(j, "phi"), c.phi, "phi");
    return c;
}

void check_cochain_dims(const Cochain2& c, const MatchedPair& p, const MPRepresentation& r) {
    if (c.omega.in_dim() != p.g.dim() || c.theta.in_dim() != p.h.dim() || c.omega.out_dim() != r.V_dim ||
        c.theta.out_dim() != r.W_dim)
        throw DimensionError("cochain dims do not match the pair and representation");
}

json to_json(const AbelianExtension& e) {
    return {{"base", to_json(e.base)}, {"total", to_json(e.total)}, {"i1", to_json(e.i1)},
            {"i2", to_json(e.i2)},     {"j1", to_json(e.j1)},       {"j2", to_json(e.j2)}};
}

AbelianExtension extension_from_json(const json& j) {
    AbelianExtension e;
    e.base = pair_from_json(field(j, "base"));
    e.total = pair_from_json(field(j, "total"));
    std::size_t n = e.base.g.dim(), m = e.base.h.dim(), G = e.total.g.dim(), H = e.total.h.dim();
    if (G < n || H < m) throw DimensionError("total is smaller than the base");
    e.V_dim = G - n;
    e.W_dim = H - m;
    e.i1 = matrix_from_json(field(j, "i1"), G, e.V_dim);
    e.i2 = matrix_from_json(field(j, "i2"), H, e.W_dim);
    e.j1 = matrix_from_json(field(j, "j1"), n, G);
    e.j2 = matrix_from_json(field(j, "j2"), m, H);
    return e;
}

json to_json(const Section& s) { return {{"s1", to_json(s.s1)}, {"s2", to_json(s.s2)}}; }

Section section_from_json(const json& j, const AbelianExtension& e) {
    return {matrix_from_json(field(j, "s1"), e.total.g.dim(), e.base.g.dim()),
            matrix_from_json(field(j, "s2"), e.total.h.dim(), e.base.h.dim())};
}

json to_json(const AutPair& a) {
    return {{"alpha1", to_json(a.alpha1)},
            {"alpha2", to_json(a.alpha2)},
            {"beta1", to_json(a.beta1)},
            {"beta2", to_json(a.beta2)}};
}

AutPair aut_pair_from_json(const json& j, const AbelianExtension& e) {
    std::size_t n = e.base.g.dim(), m = e.base.h.dim();
    return {matrix_from_json(field(j, "alpha1"), n, n), matrix_from_json(field(j, "alpha2"), m, m),
            matrix_from_json(field(j, "beta1"), e.V_dim, e.V_dim),
            matrix_from_json(field(j, "beta2"), e.W_dim, e.W_dim)};
}

json to_json(const TotalAut& u) { return {{"gamma1", to_json(u.gamma1)}, {"gamma2", to_json(u.gamma2)}}; }

TotalAut total_aut_from_json(const json& j, const AbelianExtension& e) {
    std::size_t G = e.total.g.dim(), H = e.total.h.dim();
    return {matrix_from_json(field(j, "gamma1"), G, G), matrix_from_json(field(j, "gamma2"), H, H)};
}

json to_json(const Report& r) {
    json checks = json::array();
    for (auto& c : r.checks) {
        json x{{"label", c.label}, {"passed", c.passed}, {"tuples", c.tuples}};
        if (!c.note.empty()) x["note"] = c.note;
        if (c.witness)
            x["witness"] = {{"args", c.witness->args}, {"lhs", to_json(c.witness->lhs)}, {"rhs", to_json(c.witness->rhs)}};
        checks.push_back(std::move(x));
    }
    return {{"title", r.title}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

json to_json(const WellsClass& w) {
    json out{{"representative", to_json(w.representative)}, {"is_zero", w.is_zero}};
    if (w.witness) out["witness"] = to_json(*w.witness);
    return out;
}

json to_json(const Inducibility& d) {
    json out{{"verdict", to_string(d.verdict)}, {"compatibility", to_json(d.compatibility)}};
    if (d.zeta) out["zeta"] = to_json(*d.zeta);
    if (d.eta) out["eta"] = to_json(*d.eta);
    if (d.obstruction) {
        out["obstruction"] = to_json(d.obstruction->representative);
        out["rank_gap"] = d.rank_gap;
    }
    return out;
}

json to_json(const ExactSequenceReport& r) {
    json probes = json::array();
    for (auto& p : r.probes)
        probes.push_back({{"name", p.name},
                          {"compatible", p.compatible},
                          {"wells_zero", p.wells_zero},
                          {"inducible", p.inducible},
                          {"lift_ok", p.lift_ok}});
    return {{"z1_dim", r.z1_dim}, {"ker_phi_dim", r.ker_phi_dim}, {"probes", probes}, {"report", to_json(r.checks)}};
}

json to_json(const Subspace& s) {
    json b = json::array();
    for (auto& v : s.basis) b.push_back(to_json(v));
    return {{"ambient", s.ambient}, {"dim", s.basis.size()}, {"basis", b}};
}

const std::vector<std::string>& bundle_kinds() {
    static const std::vector<std::string> K{"algebra",   "matched_pair", "representation", "cochain1",
                                            "cochain2",  "extension",    "section",        "aut_pair",
                                            "deformation", "total_aut",  "morphism"};
    return K;
}

json make_bundle(const std::string& kind, json payload, const std::string& meta) {
    if (std::find(bundle_kinds().begin(), bundle_kinds().end(), kind) == bundle_kinds().end())
        throw InputError("unknown bundle kind \"" + kind + "\"");
    json b{{"kind", kind}, {"payload", std::move(payload)}};
    if (!meta.empty()) b["meta"] = meta;
    return b;
}

Bundle bundle_from_json(const json& j) {
    const json& k = field(j, "kind");
    if (!k.is_string()) throw InputError("bundle kind must be a string");
    Bundle b{k.get<std::string>(), field(j, "payload"), {}};
    if (std::find(bundle_kinds().begin(), bundle_kinds().end(), b.kind) == bundle_kinds().end())
        throw InputError("unknown bundle kind \"" + b.kind + "\"");
    if (j.contains("meta")) {
        if (!j["meta"].is_string()) throw InputError("bundle meta must be a string");
        b.meta = j["meta"].get<std::string>();
    }
    return b;
}

Bundle read_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return bundle_from_json(j);
}

json expect(const Bundle& b, const std::string& kind) {
    if (b.kind != kind) throw InputError("expected a " + kind + " bundle, got " + b.kind);
    return b.payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace tlmp
