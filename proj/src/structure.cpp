#include "tlmp/structure.hpp"

namespace tlmp {

ThreeLie::ThreeLie(std::size_t dim, std::vector<std::string> names) : names_(std::move(names)), br_(dim, dim) {
    if (names_.empty()) names_ = default_names("e", dim);
    if (names_.size() != dim) throw DimensionError("basis name count does not match dimension");
}

ThreeLie ThreeLie::abelian(std::size_t dim, const std::string& prefix) {
    return ThreeLie(dim, default_names(prefix, dim));
}

Vector bracket_eval(const ThreeLie& alg, const Vector& x, const Vector& y, const Vector& z) { return alg(x, y, z); }

Check jacobi_check(const ThreeLie& alg, const std::string& label) {
    const auto* n = &alg.names();
    const std::size_t d = alg.dim();
    std::vector<Slot> slots{{"x1", n, 1}, {"x2", n, 1}, {"y1", n, 2}, {"y2", n, 2}, {"y3", n, 2}};
    return check_identity(label, slots, [&](const Indices& t) {
        Vector x1 = unit(d, t[0]), x2 = unit(d, t[1]), y1 = unit(d, t[2]), y2 = unit(d, t[3]), y3 = unit(d, t[4]);
        Vector lhs = alg(x1, x2, alg(y1, y2, y3));
        Vector rhs = alg(alg(x1, x2, y1), y2, y3);
        rhs += alg(y1, alg(x1, x2, y2), y3);
        rhs += alg(y1, y2, alg(x1, x2, y3));
        return std::pair{lhs, rhs};
    });
}

Report verify_jacobi(const ThreeLie& alg) {
    Report r{"jacobi", {}};
    r.add(jacobi_check(alg, "fundamental identity"));
    return r;
}

ThreeLie semidirect_sum(const ThreeLie& alg, std::size_t module_dim, const TriAction& action,
                        const std::string& module_prefix) {
    const std::size_t n = alg.dim(), m = module_dim;
    if (action.pair_dim() != n || action.target_dim() != m || action.out_dim() != m)
        throw DimensionError("action shape does not match algebra/module");
    auto names = alg.names();
    for (auto& s : default_names(module_prefix, m)) names.push_back(s);
    ThreeLie s(n + m, names);
    for (auto [i, j, k] : increasing_triples(n)) s.set_bracket(i, j, k, concat(alg.bracket(i, j, k), zeros(m)));
    // [x_i, x_j, m_t] = D(x_i, x_j) m_t
    for (auto [i, j] : increasing_pairs(n))
        for (std::size_t t = 0; t < m; ++t) s.set_bracket(i, j, n + t, concat(zeros(n), action.at(i, j, t)));
    return s;
}

Report verify_3lie_rep(const ThreeLie& alg, std::size_t module_dim, const TriAction& action) {
    Report r{"representation", {}};
    r.add(jacobi_check(semidirect_sum(alg, module_dim, action), "semidirect sum fundamental identity"));
    return r;
}

Report verify_morphism(const Matrix& f, const ThreeLie& a, const ThreeLie& b) {
    if (f.cols() != a.dim() || f.rows() != b.dim()) throw DimensionError("morphism shape mismatch");
    Report r{"morphism", {}};
    const auto* n = &a.names();
    const std::size_t d = a.dim();
    r.add(check_identity("f[x,y,z] = [fx,fy,fz]", {{"x", n, 1}, {"y", n, 1}, {"z", n, 1}}, [&](const Indices& t) {
        Vector x = unit(d, t[0]), y = unit(d, t[1]), z = unit(d, t[2]);
        return std::pair{f.apply(a(x, y, z)), b(f.apply(x), f.apply(y), f.apply(z))};
    }));
    return r;
}

} // namespace tlmp
