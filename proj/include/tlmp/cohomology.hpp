#ifndef TLMP_COHOMOLOGY_HPP
#define TLMP_COHOMOLOGY_HPP

#include "tlmp/representation.hpp"

namespace tlmp {

struct Cochain1 {
    Matrix N1; // g -> V  (V_dim x dim g)
    Matrix N2; // h -> W

    static Cochain1 zero(const MatchedPair& p, const MPRepresentation& r);
    friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

struct Cochain2 {
    AltTrilinear omega; // /\^3 g -> V
    AltTrilinear theta; // /\^3 h -> W
    TriAction nu;       // /\^2 g (x) h -> W
    TriAction phi;      // /\^2 h (x) g -> V

    static Cochain2 zero(const MatchedPair& p, const MPRepresentation& r);
    void check_shapes(const MatchedPair& p, const MPRepresentation& r) const;
    bool is_zero() const;
    friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

Cochain1 operator+(const Cochain1& a, const Cochain1& b);
Cochain1 operator*(const Rational& s, const Cochain1& a);
Cochain2 operator+(const Cochain2& a, const Cochain2& b);
Cochain2 operator-(const Cochain2& a, const Cochain2& b);
Cochain2 operator*(const Rational& s, const Cochain2& a);

Cochain1 mirror(const Cochain1& c);
Cochain2 mirror(const Cochain2& c);

// One component of D2: a map on a fixed argument pattern, sampled on the
// canonical basis tuples of that pattern.
struct ImageComponent {
    std::string label;
    std::vector<std::string> vars;
    std::vector<Indices> tuples;
    std::vector<Vector> values;
};

struct Cochain3Image {
    std::vector<ImageComponent> components;
    Vector flatten() const;
    bool is_zero() const;
};

struct CochainDims {
    std::size_t c1;
    std::array<std::size_t, 4> c2; // omega, theta, nu, phi
    std::size_t c2_total() const { return c2[0] + c2[1] + c2[2] + c2[3]; }
};

CochainDims cochain_dims(const MatchedPair& p, const MPRepresentation& r);

// coordinates: (component, sorted tuple, coefficient index), lexicographic
Vector serialize(const Cochain1& c);
Vector serialize(const Cochain2& c);
Cochain1 deserialize_cochain1(const MatchedPair& p, const MPRepresentation& r, const Vector& x);
Cochain2 deserialize_cochain2(const MatchedPair& p, const MPRepresentation& r, const Vector& x);

Cochain2 d1(const MatchedPair& p, const MPRepresentation& r, const Cochain1& c);
Cochain3Image d2(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c);

Matrix d1_matrix(const MatchedPair& p, const MPRepresentation& r);
Matrix d2_matrix(const MatchedPair& p, const MPRepresentation& r);

// per-component "(2co-1)".."(2co-8)", then "rep-rho-1/2", "rep-psi-1/2":
// the deformations of the two action-representation axioms, which the
// eight displayed components do not cover
Report is_cocycle2(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c);
Subspace z1_basis(const MatchedPair& p, const MPRepresentation& r);
Subspace z2_basis(const MatchedPair& p, const MPRepresentation& r);
Subspace b2_basis(const MatchedPair& p, const MPRepresentation& r);

struct H2 {
    std::size_t dim;
    Subspace z2, b2;
    std::vector<Vector> representatives; // coset representatives in Z2
};
H2 h2(const MatchedPair& p, const MPRepresentation& r);
std::size_t h2_dim(const MatchedPair& p, const MPRepresentation& r);

std::optional<Cochain1> is_coboundary2(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c);
// x with c - c' = d1(x)
std::optional<Cochain1> cohomologous(const MatchedPair& p, const MPRepresentation& r, const Cochain2& c,
                                     const Cochain2& c2);

} // namespace tlmp

#endif
