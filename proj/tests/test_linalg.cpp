#include <doctest.h>

#include "support/fixtures.hpp"

using namespace tlmp;
using fx::vec;

TEST_CASE("rref of identity and of a rank one matrix") {
    auto e = rref(Matrix::identity(2));
    CHECK(e.reduced == Matrix::identity(2));
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});

    Matrix m = Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2);
    auto f = rref(m);
    // by hand: R2 -= 2 R1
    CHECK(f.reduced == Matrix::from_rows({vec({1, 2}), vec({0, 0})}, 2));
    CHECK(f.pivots == std::vector<std::size_t>{0});
    CHECK(f.rank() == 1);
}

TEST_CASE("empty matrices are fine") {
    auto e = rref(Matrix(0, 0));
    CHECK(e.rank() == 0);
    CHECK(kernel_basis(Matrix(0, 3)).dim() == 3);
    CHECK(image_basis(Matrix(3, 0)).dim() == 0);
    auto x = solve(Matrix(0, 2), {});
    REQUIRE(x);
    CHECK(x->size() == 2);
}

TEST_CASE("kernel") {
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
    Matrix m = Matrix::from_rows({vec({1, 1, 0})}, 3);
    auto k = kernel_basis(m);
    CHECK(k.dim() == 2);
    for (auto& v : k.basis) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("solve") {
    Vector b = vec({3, -1, 7});
    CHECK(*solve(Matrix::identity(3), b) == b);
    Matrix m = Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2);
    auto x = solve(m, vec({1, 2}));
    REQUIRE(x);
    CHECK(m.apply(*x) == vec({1, 2}));
    CHECK_FALSE(solve(m, vec({1, 3})));
    // rank oracle agrees on infeasibility
    CHECK(rank(hstack(m, Matrix::from_columns({vec({1, 3})}, 2))) > rank(m));
    CHECK_THROWS_AS(solve(m, vec({1})), DimensionError);
}

TEST_CASE("member and quotient_dim") {
    Subspace s{2, {vec({1, 1})}};
    auto z = member(vec({0, 0}), s);
    REQUIRE(z);
    CHECK(is_zero(*z));
    CHECK_FALSE(member(vec({1, 0}), s));
    auto w = member(vec({2, 2}), s);
    REQUIRE(w);
    CHECK((*w)[0] == 2);
    CHECK_THROWS_AS(member(vec({1}), s), DimensionError);

    Subspace plane{2, {vec({1, 0}), vec({0, 1})}};
    CHECK(quotient_dim(plane, plane) == 0);
    CHECK(quotient_dim(Subspace{4, {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3)}}, Subspace{4, {}}) == 4);
    CHECK(quotient_dim(plane, s) == 1);
    Subspace line{2, {vec({1, 0})}};
    try {
        quotient_dim(line, s);
        FAIL("expected containment error");
    } catch (const ContainmentError& e) {
        CHECK(e.vector == vec({1, 1}));
    }
    auto reps = quotient_representatives(plane, s);
    CHECK(reps.size() == 1);
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("properties on random matrices") {
    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = rng() % 9, c = rng() % 9;
        Matrix m = fx::random_matrix(rng, r, c, 50);
        auto e = rref(m);
        CHECK(rref(e.reduced).reduced == e.reduced);
        CHECK(e.rank() + kernel_basis(m).dim() == c);
        Vector x = fx::random_vec(rng, c, 70);
        auto y = solve(m, m.apply(x));
        REQUIRE(y);
        CHECK(m.apply(*y) == m.apply(x));
    }
}

TEST_CASE("exact arithmetic: direct sum versus common denominator") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-50, 50), q(1, 40);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng), q(rng)), b(d(rng), q(rng));
        boost::multiprecision::mpz_int an = numerator(a), ad = denominator(a), bn = numerator(b), bd = denominator(b);
        Rational via_common(an * bd + bn * ad, ad * bd);
        Rational direct = a + b;
        CHECK(direct.str() == via_common.str());
        CHECK(denominator(direct) > 0);
        CHECK(gcd(numerator(direct), denominator(direct)) == 1);
    }
}

TEST_CASE("inverses") {
    Matrix m = Matrix::from_rows({vec({2, 1}), vec({1, 1})}, 2);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2)));
    Matrix j = Matrix::from_rows({vec({1, 0, 5})}, 3);
    auto s = right_inverse(j);
    REQUIRE(s);
    CHECK(j * *s == Matrix::identity(1));
    auto l = left_inverse(j.transpose());
    REQUIRE(l);
    CHECK(*l * j.transpose() == Matrix::identity(1));
}
