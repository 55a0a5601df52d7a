#ifndef TLMP_LINALG_HPP
#define TLMP_LINALG_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tlmp {

// GMP rationals are canonical (reduced, positive denominator) after every op.
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : InputError {
    using InputError::InputError;
};

// Raised when a containment that the math guarantees turns out false.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& a);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
// a += s*b
void axpy(Vector& a, const Rational& s, const Vector& b);
Vector concat(const Vector& a, const Vector& b);
Vector slice(const Vector& a, std::size_t from, std::size_t len);
std::string to_string(const Vector& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return a_; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    Vector apply(const Vector& x) const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
// block-diagonal [a 0; 0 b]
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct Subspace {
    std::size_t ambient = 0;
    std::vector<Vector> basis;
    std::size_t dim() const { return basis.size(); }
};

Subspace kernel_basis(const Matrix& m);
// column space, basis = the pivot columns of m
Subspace image_basis(const Matrix& m);
// independent subset (first-come order) of the given vectors
Subspace span(std::size_t ambient, const std::vector<Vector>& vs);

std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
// coefficients c with sum c_i basis_i = v, or nullopt
std::optional<Vector> member(const Vector& v, const Subspace& s);

struct ContainmentError : ConsistencyError {
    ContainmentError(const std::string& what, Vector offending)
        : ConsistencyError(what), vector(std::move(offending)) {}
    Vector vector;
};

std::size_t quotient_dim(const Subspace& big, const Subspace& small);
// vectors of big completing a basis of small (coset representatives)
std::vector<Vector> quotient_representatives(const Subspace& big, const Subspace& small);

std::optional<Matrix> inverse(const Matrix& m);
// some X with m X = I (m surjective), nullopt otherwise
std::optional<Matrix> right_inverse(const Matrix& m);
// some X with X m = I (m injective), nullopt otherwise
std::optional<Matrix> left_inverse(const Matrix& m);

} // namespace tlmp

#endif
