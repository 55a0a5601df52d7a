#ifndef TLMP_MATCHED_HPP
#define TLMP_MATCHED_HPP

#include "tlmp/structure.hpp"

namespace tlmp {

struct MatchedPair {
    ThreeLie g, h;
    TriAction rho; // g-pairs acting on h
    TriAction psi; // h-pairs acting on g

    // zero actions of the right shape
    static MatchedPair trivial(ThreeLie g, ThreeLie h);
    void check_shapes() const;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

// (h, g, psi, rho): every statement about g has a twin about h.
MatchedPair mirror(const MatchedPair& p);

// Checks labelled "MP1 (11)" .. "MP6 (66)", plus Jacobi of g and h and the
// two action representations.
Report verify_matched_pair(const MatchedPair& p);

// g (+) h with
//   [x1+a1, x2+a2, x3+a3] = [x1,x2,x3] + psi(a2,a3)x1 + psi(a3,a1)x2 + psi(a1,a2)x3
//                         + [a1,a2,a3] + rho(x2,x3)a1 + rho(x3,x1)a2 + rho(x1,x2)a3
ThreeLie bicrossed_product(const MatchedPair& p);

// (f, gm): g -> g', h -> h'
Report verify_mp_morphism(const Matrix& f, const Matrix& gm, const MatchedPair& p, const MatchedPair& q);

} // namespace tlmp

#endif
