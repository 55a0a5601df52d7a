#ifndef TLMP_EXTENSION_HPP
#define TLMP_EXTENSION_HPP

#include "tlmp/cohomology.hpp"

namespace tlmp {

// 0 -> V ⋈ W --i--> ĝ ⋈ ĥ --j--> g ⋈ h -> 0
struct AbelianExtension {
    MatchedPair base;
    std::size_t V_dim = 0, W_dim = 0;
    MatchedPair total;
    Matrix i1, i2; // V -> ĝ, W -> ĥ
    Matrix j1, j2; // ĝ -> g, ĥ -> h
};

struct Section {
    Matrix s1, s2; // g -> ĝ, h -> ĥ
};

// All structural invariants: shapes, exactness, abelian ideals, total pair
// axioms, j a matched pair morphism.
Report validate(const AbelianExtension& e);
Report validate(const AbelianExtension& e, const Section& s);

// Throws AxiomError (with the cocycle report) when c is not a 2-cocycle.
AbelianExtension build_extension(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c);
// same construction without the cocycle gate
AbelianExtension build_extension_unchecked(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c);

// (x,0), (a,0) when the coordinates are split; otherwise a right inverse of j
Section canonical_section(const AbelianExtension& e);

// the extension's fiber coordinates of a vector in i1(V) / i2(W); throws
// ContainmentError otherwise
Vector fiber_coords_V(const AbelianExtension& e, const Vector& u);
Vector fiber_coords_W(const AbelianExtension& e, const Vector& u);

Cochain2 extract_cocycle(const AbelianExtension& e, const Section& s);
MPRepresentation induced_representation(const AbelianExtension& e, const Section& s);

// s' = s + i∘T, for T: g -> V, h -> W
Section shift_section(const AbelianExtension& e, const Section& s, const Cochain1& T);

// ---- infinitesimal deformations (adjoint coefficients) ----

// The first-order equations, each as lhs/rhs on basis tuples:
// "(inf-1-eqn)".."(inf-8-eqn)" as printed, plus "(inf-rho-1)", "(inf-rho-2)",
// "(inf-psi-1)", "(inf-psi-2)": the t-linear parts of rho_t, psi_t being
// representations, which the printed eight leave out.
struct DeformationEquation {
    std::string label;
    std::vector<std::string> vars; // "x.." in g, "a.." in h
    std::vector<int> groups;
    // residual rhs - lhs at the given basis indices
    std::function<std::pair<Vector, Vector>(const MatchedPair&, const Cochain2&, const Indices&)> sides;
};
const std::vector<DeformationEquation>& deformation_equations();

Report verify_deformation(const MatchedPair& p, const Cochain2& d);
// d - d' = D1((f, g_map)) written out: "(inf-7-eqn) omega", "(inf-8-eqn) theta",
// "(inf-9-eqn) nu", "(inf-10-eqn) phi"
Report deformations_equivalent(const MatchedPair& p, const Cochain2& d, const Cochain2& d2, const Matrix& f,
                               const Matrix& g_map);

Report extensions_isomorphic(const AbelianExtension& e, const AbelianExtension& e2, const Matrix& f,
                             const Matrix& g_map);

} // namespace tlmp

#endif
