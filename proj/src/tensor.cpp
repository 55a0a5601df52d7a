#include "tlmp/tensor.hpp"

namespace tlmp {

namespace {

void check_len(const Vector& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw DimensionError(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                             std::to_string(v.size()));
}

void check_idx(std::size_t i, std::size_t n, const char* what) {
    if (i >= n)
        throw DimensionError(std::string(what) + ": index " + std::to_string(i) + " out of range " +
                             std::to_string(n));
}

} // namespace

// --- AltTrilinear ---

AltTrilinear::AltTrilinear(std::size_t in, std::size_t out) : in_(in), out_(out), t_(in * in * in * out) {}

void AltTrilinear::set(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
    check_idx(i, in_, "bracket");
    check_idx(j, in_, "bracket");
    check_idx(k, in_, "bracket");
    check_len(value, out_, "bracket value");
    if (i == j || j == k || i == k) {
        if (!tlmp::is_zero(value)) throw InputError("alternating map: repeated index with nonzero value");
        return;
    }
    const std::size_t p[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
    for (int s = 0; s < 6; ++s) {
        Rational sign = s < 3 ? 1 : -1;
        std::size_t base = ((p[s][0] * in_ + p[s][1]) * in_ + p[s][2]) * out_;
        for (std::size_t o = 0; o < out_; ++o) t_[base + o] = sign * value[o];
    }
}

void AltTrilinear::add(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
    if (i == j || j == k || i == k) return set(i, j, k, value);
    set(i, j, k, at(i, j, k) + value);
}

Vector AltTrilinear::at(std::size_t i, std::size_t j, std::size_t k) const {
    check_idx(i, in_, "bracket");
    check_idx(j, in_, "bracket");
    check_idx(k, in_, "bracket");
    std::size_t base = ((i * in_ + j) * in_ + k) * out_;
    return Vector(t_.begin() + base, t_.begin() + base + out_);
}

Vector AltTrilinear::operator()(const Vector& x, const Vector& y, const Vector& z) const {
    check_len(x, in_, "bracket argument");
    check_len(y, in_, "bracket argument");
    check_len(z, in_, "bracket argument");
    Vector r(out_);
    for (std::size_t i = 0; i < in_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < in_; ++j) {
            if (y[j] == 0 || j == i) continue;
            Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < in_; ++k) {
                if (z[k] == 0 || k == i || k == j) continue;
                Rational s = xy * z[k];
                std::size_t base = ((i * in_ + j) * in_ + k) * out_;
                for (std::size_t o = 0; o < out_; ++o)
                    if (t_[base + o] != 0) r[o] += s * t_[base + o];
            }
        }
    }
    return r;
}

Vector AltTrilinear::apply(std::size_t i, std::size_t j, const Vector& z) const {
    return (*this)(unit(in_, i), unit(in_, j), z);
}

bool AltTrilinear::is_zero() const {
    for (auto& x : t_)
        if (x != 0) return false;
    return true;
}

AltTrilinear operator+(const AltTrilinear& a, const AltTrilinear& b) {
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) throw DimensionError("AltTrilinear sum shape");
    AltTrilinear r(a.in_dim(), a.out_dim());
    for (auto [i, j, k] : increasing_triples(a.in_dim())) r.set(i, j, k, a.at(i, j, k) + b.at(i, j, k));
    return r;
}

AltTrilinear operator*(const Rational& s, const AltTrilinear& a) {
    AltTrilinear r(a.in_dim(), a.out_dim());
    for (auto [i, j, k] : increasing_triples(a.in_dim())) r.set(i, j, k, s * a.at(i, j, k));
    return r;
}

// --- TriAction ---

TriAction::TriAction(std::size_t pair, std::size_t target, std::size_t out)
    : pair_(pair), target_(target), out_(out), t_(pair * pair * target * out) {}

void TriAction::set(std::size_t i, std::size_t j, std::size_t t, const Vector& value) {
    check_idx(i, pair_, "action pair");
    check_idx(j, pair_, "action pair");
    check_idx(t, target_, "action target");
    check_len(value, out_, "action value");
    if (i == j) {
        if (!tlmp::is_zero(value)) throw InputError("action: D(x,x) must vanish");
        return;
    }
    std::size_t b1 = ((i * pair_ + j) * target_ + t) * out_, b2 = ((j * pair_ + i) * target_ + t) * out_;
    for (std::size_t o = 0; o < out_; ++o) {
        t_[b1 + o] = value[o];
        t_[b2 + o] = -value[o];
    }
}

void TriAction::add(std::size_t i, std::size_t j, std::size_t t, const Vector& value) {
    if (i == j) return set(i, j, t, value);
    set(i, j, t, at(i, j, t) + value);
}

Vector TriAction::at(std::size_t i, std::size_t j, std::size_t t) const {
    check_idx(i, pair_, "action pair");
    check_idx(j, pair_, "action pair");
    check_idx(t, target_, "action target");
    std::size_t base = ((i * pair_ + j) * target_ + t) * out_;
    return Vector(t_.begin() + base, t_.begin() + base + out_);
}

Vector TriAction::operator()(const Vector& x, const Vector& y, const Vector& z) const {
    check_len(x, pair_, "action pair argument");
    check_len(y, pair_, "action pair argument");
    check_len(z, target_, "action target argument");
    Vector r(out_);
    for (std::size_t i = 0; i < pair_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < pair_; ++j) {
            if (y[j] == 0 || j == i) continue;
            Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < target_; ++k) {
                if (z[k] == 0) continue;
                Rational s = xy * z[k];
                std::size_t base = ((i * pair_ + j) * target_ + k) * out_;
                for (std::size_t o = 0; o < out_; ++o)
                    if (t_[base + o] != 0) r[o] += s * t_[base + o];
            }
        }
    }
    return r;
}

Matrix TriAction::matrix(const Vector& x, const Vector& y) const {
    Matrix m(out_, target_);
    for (std::size_t t = 0; t < target_; ++t) m.set_column(t, (*this)(x, y, unit(target_, t)));
    return m;
}

bool TriAction::is_zero() const {
    for (auto& x : t_)
        if (x != 0) return false;
    return true;
}

TriAction operator+(const TriAction& a, const TriAction& b) {
    if (a.pair_dim() != b.pair_dim() || a.target_dim() != b.target_dim() || a.out_dim() != b.out_dim())
        throw DimensionError("TriAction sum shape");
    TriAction r(a.pair_dim(), a.target_dim(), a.out_dim());
    for (auto [i, j] : increasing_pairs(a.pair_dim()))
        for (std::size_t t = 0; t < a.target_dim(); ++t) r.set(i, j, t, a.at(i, j, t) + b.at(i, j, t));
    return r;
}

TriAction operator*(const Rational& s, const TriAction& a) {
    TriAction r(a.pair_dim(), a.target_dim(), a.out_dim());
    for (auto [i, j] : increasing_pairs(a.pair_dim()))
        for (std::size_t t = 0; t < a.target_dim(); ++t) r.set(i, j, t, s * a.at(i, j, t));
    return r;
}

// --- Pairing ---

Pairing::Pairing(std::size_t a, std::size_t b, std::size_t c, std::size_t out)
    : a_(a), b_(b), c_(c), out_(out), t_(a * b * c * out) {}

void Pairing::set(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
    check_idx(i, a_, "pairing");
    check_idx(j, b_, "pairing");
    check_idx(k, c_, "pairing");
    check_len(value, out_, "pairing value");
    std::size_t base = ((i * b_ + j) * c_ + k) * out_;
    for (std::size_t o = 0; o < out_; ++o) t_[base + o] = value[o];
}

Vector Pairing::at(std::size_t i, std::size_t j, std::size_t k) const {
    check_idx(i, a_, "pairing");
    check_idx(j, b_, "pairing");
    check_idx(k, c_, "pairing");
    std::size_t base = ((i * b_ + j) * c_ + k) * out_;
    return Vector(t_.begin() + base, t_.begin() + base + out_);
}

Vector Pairing::operator()(const Vector& x, const Vector& y, const Vector& z) const {
    check_len(x, a_, "pairing argument");
    check_len(y, b_, "pairing argument");
    check_len(z, c_, "pairing argument");
    Vector r(out_);
    for (std::size_t i = 0; i < a_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < b_; ++j) {
            if (y[j] == 0) continue;
            Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < c_; ++k) {
                if (z[k] == 0) continue;
                Rational s = xy * z[k];
                std::size_t base = ((i * b_ + j) * c_ + k) * out_;
                for (std::size_t o = 0; o < out_; ++o)
                    if (t_[base + o] != 0) r[o] += s * t_[base + o];
            }
        }
    }
    return r;
}

bool Pairing::is_zero() const {
    for (auto& x : t_)
        if (x != 0) return false;
    return true;
}

std::vector<std::array<std::size_t, 3>> increasing_triples(std::size_t n) {
    std::vector<std::array<std::size_t, 3>> r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) r.push_back({i, j, k});
    return r;
}

std::vector<std::array<std::size_t, 2>> increasing_pairs(std::size_t n) {
    std::vector<std::array<std::size_t, 2>> r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) r.push_back({i, j});
    return r;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace tlmp
