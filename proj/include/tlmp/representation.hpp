#ifndef TLMP_REPRESENTATION_HPP
#define TLMP_REPRESENTATION_HPP

#include "tlmp/matched.hpp"

namespace tlmp {

struct MPRepresentation {
    std::size_t V_dim = 0, W_dim = 0;
    TriAction rhoV; // g-pairs on V
    TriAction psiV; // h-pairs on V
    TriAction rhoW; // g-pairs on W
    TriAction psiW; // h-pairs on W
    Pairing alpha;  // (v, x, a) -> W
    Pairing beta;   // (w, a, x) -> V

    static MPRepresentation zero(const MatchedPair& p, std::size_t V_dim, std::size_t W_dim);
    void check_shapes(const MatchedPair& p) const;

    friend bool operator==(const MPRepresentation&, const MPRepresentation&) = default;
};

// swap the roles of (g,V) and (h,W); pairs with mirror(MatchedPair)
MPRepresentation mirror(const MPRepresentation& r);

// "(1-iden)".."(24-iden)", the four module actions as representations, and
// the two semidirect actions (rho x alpha, psi x beta) as representations.
Report verify_mp_representation(const MatchedPair& p, const MPRepresentation& r);

// (g x V, h x W, rho x alpha, psi x beta)
MatchedPair semidirect_product(const MatchedPair& p, const MPRepresentation& r);

// V = g, W = h, rhoV = ad_g, psiW = ad_h, psiV = psi, rhoW = rho,
// alpha(v,x)a = rho(v,x)a, beta(w,a)x = psi(w,a)x.
// Throws if p fails verify_matched_pair and check is set.
MPRepresentation adjoint_representation(const MatchedPair& p, bool check = true);

} // namespace tlmp

#endif
