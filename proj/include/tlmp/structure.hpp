#ifndef TLMP_STRUCTURE_HPP
#define TLMP_STRUCTURE_HPP

#include "tlmp/report.hpp"
#include "tlmp/tensor.hpp"

#include <string>
#include <vector>

namespace tlmp {

class ThreeLie {
public:
    ThreeLie() = default;
    explicit ThreeLie(std::size_t dim, std::vector<std::string> names = {});

    static ThreeLie abelian(std::size_t dim, const std::string& prefix = "e");

    std::size_t dim() const { return br_.in_dim(); }
    const std::vector<std::string>& names() const { return names_; }
    const AltTrilinear& structure() const { return br_; }

    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Vector& value) { br_.set(i, j, k, value); }
    Vector bracket(std::size_t i, std::size_t j, std::size_t k) const { return br_.at(i, j, k); }
    Vector operator()(const Vector& x, const Vector& y, const Vector& z) const { return br_(x, y, z); }

    friend bool operator==(const ThreeLie& a, const ThreeLie& b) { return a.br_ == b.br_; }

private:
    std::vector<std::string> names_;
    AltTrilinear br_;
};

Vector bracket_eval(const ThreeLie& alg, const Vector& x, const Vector& y, const Vector& z);

// [x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3] + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]]
Report verify_jacobi(const ThreeLie& alg);
Check jacobi_check(const ThreeLie& alg, const std::string& label);

// alg (+) M with [(x,m)...] = ([x1,x2,x3], D(x1,x2)m3 + D(x3,x1)m2 + D(x2,x3)m1)
ThreeLie semidirect_sum(const ThreeLie& alg, std::size_t module_dim, const TriAction& action,
                        const std::string& module_prefix = "m");
Report verify_3lie_rep(const ThreeLie& alg, std::size_t module_dim, const TriAction& action);

Report verify_morphism(const Matrix& f, const ThreeLie& a, const ThreeLie& b);

} // namespace tlmp

#endif
