#ifndef TLMP_TENSOR_HPP
#define TLMP_TENSOR_HPP

#include "tlmp/linalg.hpp"

#include <array>

namespace tlmp {

// Alternating trilinear map  /\^3 In -> Out.
// Entries are kept for every ordered triple so evaluation never has to
// sort; set() writes all six permutations with the right sign.
class AltTrilinear {
public:
    AltTrilinear() = default;
    AltTrilinear(std::size_t in, std::size_t out);

    std::size_t in_dim() const { return in_; }
    std::size_t out_dim() const { return out_; }

    // any order of distinct i,j,k; repeated indices only accept zero
    void set(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
    void add(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
    Vector at(std::size_t i, std::size_t j, std::size_t k) const;
    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t o) const {
        return t_[((i * in_ + j) * in_ + k) * out_ + o];
    }
    Vector operator()(const Vector& x, const Vector& y, const Vector& z) const;
    // [e_i, e_j, z]
    Vector apply(std::size_t i, std::size_t j, const Vector& z) const;

    bool is_zero() const;
    friend bool operator==(const AltTrilinear&, const AltTrilinear&) = default;

private:
    std::size_t in_ = 0, out_ = 0;
    std::vector<Rational> t_;
};

// D(x_i, x_j) t  for x in a "pair" space, t in a target space, value in an
// output space; antisymmetric in the pair.  Houses rho, psi, the four module
// actions, and the nu/phi parts of a 2-cochain.
class TriAction {
public:
    TriAction() = default;
    TriAction(std::size_t pair, std::size_t target, std::size_t out);

    std::size_t pair_dim() const { return pair_; }
    std::size_t target_dim() const { return target_; }
    std::size_t out_dim() const { return out_; }

    void set(std::size_t i, std::size_t j, std::size_t t, const Vector& value);
    void add(std::size_t i, std::size_t j, std::size_t t, const Vector& value);
    Vector at(std::size_t i, std::size_t j, std::size_t t) const;
    const Rational& coeff(std::size_t i, std::size_t j, std::size_t t, std::size_t o) const {
        return t_[((i * pair_ + j) * target_ + t) * out_ + o];
    }
    Vector operator()(const Vector& x, const Vector& y, const Vector& t) const;
    // the matrix of D(x,y): out x target
    Matrix matrix(const Vector& x, const Vector& y) const;

    bool is_zero() const;
    friend bool operator==(const TriAction&, const TriAction&) = default;

private:
    std::size_t pair_ = 0, target_ = 0, out_ = 0;
    std::vector<Rational> t_;
};

// Plain trilinear A x B x C -> Out, no symmetry.  alpha: V x g x h -> W,
// beta: W x h x g -> V.
class Pairing {
public:
    Pairing() = default;
    Pairing(std::size_t a, std::size_t b, std::size_t c, std::size_t out);

    std::size_t a_dim() const { return a_; }
    std::size_t b_dim() const { return b_; }
    std::size_t c_dim() const { return c_; }
    std::size_t out_dim() const { return out_; }

    void set(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
    Vector at(std::size_t i, std::size_t j, std::size_t k) const;
    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t o) const {
        return t_[((i * b_ + j) * c_ + k) * out_ + o];
    }
    Vector operator()(const Vector& x, const Vector& y, const Vector& z) const;

    bool is_zero() const;
    friend bool operator==(const Pairing&, const Pairing&) = default;

private:
    std::size_t a_ = 0, b_ = 0, c_ = 0, out_ = 0;
    std::vector<Rational> t_;
};

AltTrilinear operator+(const AltTrilinear& a, const AltTrilinear& b);
AltTrilinear operator*(const Rational& s, const AltTrilinear& a);
TriAction operator+(const TriAction& a, const TriAction& b);
TriAction operator*(const Rational& s, const TriAction& a);

// canonical index tuples, lexicographic
std::vector<std::array<std::size_t, 3>> increasing_triples(std::size_t n);
std::vector<std::array<std::size_t, 2>> increasing_pairs(std::size_t n);

std::size_t binomial(std::size_t n, std::size_t k);

} // namespace tlmp

#endif
