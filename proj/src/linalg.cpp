#include "tlmp/linalg.hpp"

#include <sstream>

namespace tlmp {

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view s) {
    std::string t(s);
    auto slash = t.find('/');
    auto is_int = [](const std::string& z) {
        std::size_t i = (!z.empty() && (z[0] == '-' || z[0] == '+')) ? 1 : 0;
        if (i >= z.size()) return false;
        for (; i < z.size(); ++i)
            if (z[i] < '0' || z[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(t)) throw InputError("not a rational: '" + t + "'");
        return Rational(boost::multiprecision::mpz_int(t[0] == '+' ? t.substr(1) : t));
    }
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!is_int(n) || !is_int(d) || d[0] == '-' || d[0] == '+')
        throw InputError("not a rational: '" + t + "'");
    boost::multiprecision::mpz_int num(n[0] == '+' ? n.substr(1) : n), den(d);
    if (den == 0) throw InputError("zero denominator: '" + t + "'");
    return Rational(num, den);
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

static void same_len(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw DimensionError("vector length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    r += b;
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    r -= b;
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) r[i] = -a[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& a) {
    Vector r(a.size());
    if (s == 0) return r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) r[i] = s * a[i];
    return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
    same_len(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] += b[i];
    return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
    same_len(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] -= b[i];
    return a;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
    same_len(a, b);
    if (s == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] += s * b[i];
}

Vector concat(const Vector& a, const Vector& b) {
    Vector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Vector slice(const Vector& a, std::size_t from, std::size_t len) {
    if (from + len > a.size()) throw DimensionError("slice out of range");
    return Vector(a.begin() + from, a.begin() + from + len);
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
    os << ')';
    return os.str();
}

// --- Matrix ---

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DimensionError("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_)
        throw DimensionError("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                             std::to_string(x.size()));
    Vector y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c] == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, c) != 0) y[r] += (*this)(r, c) * x[c];
    }
    return y;
}

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) *= s;
    return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

// --- elimination ---

Echelon rref(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t R = a.rows(), C = a.cols(), r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < C; ++j)
            if (a(r, j) != 0) a(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Subspace kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    Subspace k{m.cols(), {}};
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        k.basis.push_back(std::move(v));
    }
    return k;
}

Subspace image_basis(const Matrix& m) {
    Echelon e = rref(m);
    Subspace s{m.rows(), {}};
    for (auto p : e.pivots) s.basis.push_back(m.column(p));
    return s;
}

Subspace span(std::size_t ambient, const std::vector<Vector>& vs) {
    for (auto& v : vs)
        if (v.size() != ambient) throw DimensionError("span: vector length mismatch");
    return image_basis(Matrix::from_columns(vs, ambient));
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows())
        throw DimensionError("solve: rhs length " + std::to_string(rhs.size()) + " but matrix has " +
                             std::to_string(m.rows()) + " rows");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::optional<Vector> member(const Vector& v, const Subspace& s) {
    if (v.size() != s.ambient) throw DimensionError("member: vector length does not match ambient dimension");
    return solve(Matrix::from_columns(s.basis, s.ambient), v);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
    if (big.ambient != small.ambient) throw DimensionError("quotient_dim: ambient mismatch");
    for (auto& v : small.basis)
        if (!member(v, big)) throw ContainmentError("quotient_dim: small subspace not contained in big", v);
    return big.dim() - small.dim();
}

std::vector<Vector> quotient_representatives(const Subspace& big, const Subspace& small) {
    quotient_dim(big, small);
    std::vector<Vector> all = small.basis;
    all.insert(all.end(), big.basis.begin(), big.basis.end());
    Echelon e = rref(Matrix::from_columns(all, big.ambient));
    std::vector<Vector> reps;
    for (auto p : e.pivots)
        if (p >= small.dim()) reps.push_back(all[p]);
    return reps;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto r = right_inverse(m);
    return r;
}

std::optional<Matrix> right_inverse(const Matrix& m) {
    Matrix x(m.cols(), m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        auto col = solve(m, unit(m.rows(), k));
        if (!col) return std::nullopt;
        x.set_column(k, *col);
    }
    return x;
}

std::optional<Matrix> left_inverse(const Matrix& m) {
    auto t = right_inverse(m.transpose());
    if (!t) return std::nullopt;
    return t->transpose();
}

} // namespace tlmp
