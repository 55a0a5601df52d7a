#ifndef TLMP_WELLS_HPP
#define TLMP_WELLS_HPP

#include "tlmp/extension.hpp"

namespace tlmp {

// (α, β) = ((α1, α2), (β1, β2)) in Aut(g ⋈ h) x Aut(V ⋈ W)
struct AutPair {
    Matrix alpha1, alpha2, beta1, beta2;

    static AutPair identity(std::size_t n, std::size_t m, std::size_t dv, std::size_t dw);
    friend bool operator==(const AutPair&, const AutPair&) = default;
};

// a ∘ b
AutPair compose(const AutPair& a, const AutPair& b);

struct TotalAut {
    Matrix gamma1, gamma2;
    friend bool operator==(const TotalAut&, const TotalAut&) = default;
};

TotalAut compose(const TotalAut& a, const TotalAut& b);

// invertible, base morphism; throws DimensionError on shape mismatch
Report validate(const MatchedPair& base, std::size_t dv, std::size_t dw, const AutPair& ap);
// invertible, total morphism, fiber preserved
Report validate(const AbelianExtension& e, const TotalAut& u);

// Φ(u) = ((j1 γ1 s1, j2 γ2 s2), (γ1|V, γ2|W)).  Throws ContainmentError if
// u does not preserve the fiber.
AutPair restrict_aut(const AbelianExtension& e, const Section& s, const TotalAut& u);

// the representation transported by (α, β):
// rhoV -> β1 rhoV(α1⁻¹·, α1⁻¹·) β1⁻¹, alpha -> β2 alpha(β1⁻¹·, α1⁻¹·) α2⁻¹, ...
MPRepresentation transform_representation(const MPRepresentation& r, const AutPair& ap);

// transported structures equal the originals, one check per tensor:
// "compat rhoV", "compat psiV", "compat rhoW", "compat psiW", "compat alpha", "compat beta"
Report in_compatible_set(const AbelianExtension& e, const Section& s, const AutPair& ap);

// ω -> β1 ω(α1⁻¹·, α1⁻¹·, α1⁻¹·), θ -> β2 θ(α2⁻¹·, ...),
// ν(x1,x2)a -> β2 ν(α1⁻¹x1, α1⁻¹x2) α2⁻¹a, φ likewise.  Throws InputError if singular.
Cochain2 transform_cocycle(const Cochain2& c, const AutPair& ap);

struct WellsClass {
    Cochain2 representative;
    bool is_zero = false;
    std::optional<Cochain1> witness; // d1(witness) = representative
};

// throws AxiomError when ap is not compatible
WellsClass wells_map(const AbelianExtension& e, const Section& s, const AutPair& ap);

enum class Verdict { inducible, obstructed, not_compatible };
std::string to_string(Verdict v);

struct Inducibility {
    Verdict verdict = Verdict::not_compatible;
    std::optional<Matrix> zeta, eta;      // inducible
    std::optional<WellsClass> obstruction; // obstructed
    std::size_t rank_gap = 0;              // rank [M | b] - rank M of the (Iam) system
    Report compatibility;
};

// solves (Iam1)-(Iam4) for (ζ, η), with the structures induced through s
Inducibility decide_inducible(const AbelianExtension& e, const Section& s, const AutPair& ap);

// The (Iam) residuals for given (ζ, η): "(Iam1)".."(Iam4)"
Report check_iam(const AbelianExtension& e, const Section& s, const AutPair& ap, const Matrix& zeta,
                 const Matrix& eta);

// γ1 = i1 β1 P1 + i1 ζ j1 + s1 α1 j1 with P1 = i1⁺(I - s1 j1), γ2 alike.
// Throws AxiomError if the result is not a valid TotalAut.
TotalAut lift_automorphism(const AbelianExtension& e, const Section& s, const AutPair& ap, const Matrix& zeta,
                           const Matrix& eta);

// Z¹ <-> ker Φ: γ = I + i N j, and back N = i⁺(γ s - s).  Both check their
// preconditions (AxiomError).
TotalAut z1_to_aut(const AbelianExtension& e, const Section& s, const Cochain1& z);
Cochain1 aut_to_z1(const AbelianExtension& e, const Section& s, const TotalAut& u);

// ker Φ as a linear space: the N with I + i N j a total morphism, in
// Cochain1 serialization coordinates.
// Computed independently of Z¹ from the morphism defect.
Subspace ker_phi_basis(const AbelianExtension& e);

struct Probe {
    std::string name;
    AutPair ap;
};
// identity, base permutations (β = id), fiber permutations (α = id), and
// λ·id on each of α1, α2, β1, β2 and on all four, λ ∈ {-1, 2, 1/2};
// only valid AutPairs are kept
std::vector<Probe> probe_set(const AbelianExtension& e);

struct ProbeOutcome {
    std::string name;
    bool compatible = false, wells_zero = false, inducible = false, lift_ok = false;
};

struct ExactSequenceReport {
    std::size_t z1_dim = 0, ker_phi_dim = 0;
    std::vector<ProbeOutcome> probes;
    Report checks;
};

ExactSequenceReport exact_sequence_report(const AbelianExtension& e, const Section& s);

} // namespace tlmp

#endif
