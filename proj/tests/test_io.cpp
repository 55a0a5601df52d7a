#include <doctest.h>

#include "support/fixtures.hpp"
#include "tlmp/io.hpp"

#include <cstdio>
#include <fstream>

using namespace tlmp;
using fx::vec;

namespace {

// through text, so the parser sees exactly what was written
template <class T>
json again(const T& x) {
    return json::parse(dump(to_json(x)));
}

std::string tmp_file(const std::string& name, const std::string& body) {
    std::string path = "tlmp_io_" + name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("rationals are strings, integers accepted on input") {
    CHECK(to_json(Rational(-3, 4)) == json("-3/4"));
    CHECK(to_json(Rational(5)) == json("5"));
    CHECK(rational_from_json(json("6/8")) == Rational(3, 4));
    CHECK(rational_from_json(json(-2)) == Rational(-2));
    CHECK_THROWS_AS(rational_from_json(json(" 1/2")), InputError);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), InputError);
    CHECK_THROWS_AS(rational_from_json(json("x")), InputError);
    CHECK_THROWS_AS(rational_from_json(json(0.5)), InputError);
    CHECK_THROWS_AS(rational_from_json(json::array()), InputError);
}

TEST_CASE("vectors and matrices") {
    CHECK(vector_from_json(json{"1", "-1/3"}, 2) == Vector{Rational(1), Rational(-1, 3)});
    CHECK_THROWS_AS(vector_from_json(json{"1"}, 2), DimensionError);
    Matrix m = Matrix::from_rows({vec({1, 2, 0}), vec({0, -1, 3})}, 3);
    CHECK(matrix_from_json(again(m), 2, 3) == m);
    CHECK(matrix_from_json(again(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(again(m), 3, 2), DimensionError);
    CHECK_THROWS_AS(matrix_from_json(json{{"1", "2"}, {"3"}}), DimensionError);
}

TEST_CASE("hand-written A4 bundle parses to the fixture") {
    const char* text = R"({"kind": "algebra", "payload": {"dim": 4, "brackets": [
        {"on": [0, 1, 2], "value": [0, 0, 0, 1]},
        {"on": [0, 1, 3], "value": ["0", "0", "-1", "0"]},
        {"on": [0, 2, 3], "value": [0, 1, 0, 0]},
        {"on": [1, 2, 3], "value": [-1, 0, 0, 0]}]}})";
    Bundle b = bundle_from_json(json::parse(text));
    CHECK(b.kind == "algebra");
    CHECK(algebra_from_json(b.payload) == fx::a4());
    // unordered triples are sign-adjusted
    json j = json::parse(R"({"dim": 3, "brackets": [{"on": [1, 0, 2], "value": [1, 0, 0]}]})");
    ThreeLie g = algebra_from_json(j);
    CHECK(g(unit(3, 0), unit(3, 1), unit(3, 2)) == vec({-1, 0, 0}));
}

TEST_CASE("round trips") {
    std::mt19937 rng(11);
    for (int k = 0; k < 10; ++k) {
        auto [p, r] = fx::random_verified_nontrivial(rng);
        CHECK(algebra_from_json(again(p.g)) == p.g);
        CHECK(pair_from_json(again(p)) == p);
        CHECK(representation_from_json(again(r), p) == r);
        Cochain1 c1 = fx::random_cochain1(rng, p, r);
        CHECK(cochain1_from_json(again(c1)) == c1);
        Cochain2 c2 = fx::random_cochain2(rng, p, r);
        CHECK(cochain2_from_json(again(c2)) == c2);
        CHECK_NOTHROW(check_cochain_dims(c2, p, r));

        AbelianExtension e = build_extension(p, r, d1(p, r, c1));
        AbelianExtension e2 = extension_from_json(again(e));
        CHECK(e2.base == e.base);
        CHECK(e2.total == e.total);
        CHECK(e2.V_dim == e.V_dim);
        CHECK(e2.W_dim == e.W_dim);
        CHECK((e2.i1 == e.i1 && e2.i2 == e.i2 && e2.j1 == e.j1 && e2.j2 == e.j2));
        Section s = shift_section(e, canonical_section(e), c1);
        Section s2 = section_from_json(again(s), e);
        CHECK((s2.s1 == s.s1 && s2.s2 == s.s2));
        AutPair ap = AutPair::identity(p.g.dim(), p.h.dim(), r.V_dim, r.W_dim);
        ap.beta1 = 2 * ap.beta1;
        CHECK(aut_pair_from_json(again(ap), e) == ap);
        TotalAut u{Matrix::identity(e.total.g.dim()), Matrix::identity(e.total.h.dim())};
        CHECK(total_aut_from_json(again(u), e) == u);
    }
}

TEST_CASE("shape and content errors") {
    MatchedPair p = fx::nilpotent_pair();
    MPRepresentation r = adjoint_representation(p);
    json jr = to_json(r);
    // representation for another pair
    CHECK_THROWS_AS(representation_from_json(jr, fx::zero_pair(1, 1)), InputError);
    // duplicate entry
    json jp = to_json(p);
    jp["rho"].push_back(jp["rho"][0]);
    CHECK_THROWS_AS(pair_from_json(jp), InputError);
    // index out of range
    json jg = to_json(fx::a4());
    jg["brackets"][0]["on"] = json{0, 1, 7};
    CHECK_THROWS_AS(algebra_from_json(jg), InputError);
    // repeated index in an alternating slot
    jg["brackets"][0]["on"] = json{0, 0, 1};
    CHECK_THROWS_AS(algebra_from_json(jg), InputError);
    // missing field; sparse entry lists may be omitted
    json jc = to_json(fx::unit_nu(fx::zero2(), fx::zero_rep(fx::zero2())));
    jc.erase("omega");
    CHECK(cochain2_from_json(jc) == fx::unit_nu(fx::zero2(), fx::zero_rep(fx::zero2())));
    jc.erase("dims");
    CHECK_THROWS_AS(cochain2_from_json(jc), InputError);
    // wrong value length
    json jv = to_json(p);
    jv["rho"][0]["value"] = json{"1"};
    CHECK_THROWS_AS(pair_from_json(jv), DimensionError);
    // cochain for another representation
    Cochain2 c = Cochain2::zero(fx::zero2(), fx::zero_rep(fx::zero2()));
    CHECK_THROWS_AS(check_cochain_dims(c, p, r), InputError);
    // aut pair of the wrong shape
    AbelianExtension e = build_extension(p, r, Cochain2::zero(p, r));
    CHECK_THROWS_AS(aut_pair_from_json(to_json(AutPair::identity(2, 2, 1, 1)), e), InputError);
}

TEST_CASE("bundles") {
    json b = make_bundle("algebra", to_json(fx::a4()), "A4");
    CHECK(b["kind"] == "algebra");
    CHECK(b["meta"] == "A4");
    CHECK(expect(bundle_from_json(b), "algebra") == b["payload"]);
    CHECK_THROWS_AS(expect(bundle_from_json(b), "matched_pair"), InputError);
    CHECK_THROWS_AS(make_bundle("nonsense", json::object()), InputError);
    json bad = b;
    bad["kind"] = "nonsense";
    CHECK_THROWS_AS(bundle_from_json(bad), InputError);
    bad = b;
    bad.erase("payload");
    CHECK_THROWS_AS(bundle_from_json(bad), InputError);
    CHECK_THROWS_AS(bundle_from_json(json::array()), InputError);

    std::string good = tmp_file("good.json", dump(b));
    CHECK(read_bundle(good).kind == "algebra");
    std::string cut = tmp_file("cut.json", dump(b).substr(0, 40));
    CHECK_THROWS_AS(read_bundle(cut), InputError);
    CHECK_THROWS_AS(read_bundle("tlmp_io_does_not_exist.json"), InputError);
    std::remove(good.c_str());
    std::remove(cut.c_str());
}

TEST_CASE("dump is canonical") {
    json a = json::parse(R"({"b": 1, "a": {"d": 2, "c": 3}})");
    json b = json::parse(R"({"a": {"c": 3, "d": 2}, "b": 1})");
    CHECK(dump(a) == dump(b));
    CHECK(dump(a).back() == '\n');
    // equal objects built along different paths serialize identically
    MatchedPair p = fx::nilpotent_pair();
    MatchedPair q = pair_from_json(json::parse(dump(to_json(p))));
    CHECK(dump(to_json(p)) == dump(to_json(q)));
}

TEST_CASE("report and certificate serialization") {
    ThreeLie bad = fx::a4();
    bad.set_bracket(0, 1, 2, vec({0, 0, 1, 1}));
    json j = to_json(verify_jacobi(bad));
    CHECK(j["passed"] == false);
    CHECK(j["checks"][0]["passed"] == false);
    CHECK(j["checks"][0].contains("witness"));

    MatchedPair p = fx::zero2();
    MPRepresentation r = fx::zero_rep(p);
    AbelianExtension e = build_extension(p, r, fx::unit_nu(p, r));
    Section s = canonical_section(e);
    AutPair ap = AutPair::identity(2, 2, 1, 1);
    ap.alpha1 = 2 * ap.alpha1;
    json d = to_json(decide_inducible(e, s, ap));
    CHECK(d["verdict"] == "obstructed");
    CHECK(d["rank_gap"] == 1);
    Cochain2 ob = cochain2_from_json(d["obstruction"]);
    CHECK(ob == Rational(-3, 4) * fx::unit_nu(p, r));
    CHECK_FALSE(d.contains("zeta"));
    json ok = to_json(decide_inducible(e, s, AutPair::identity(2, 2, 1, 1)));
    CHECK(ok["verdict"] == "inducible");
    CHECK(matrix_from_json(ok["zeta"], 1, 2) == Matrix(1, 2));
    CHECK(matrix_from_json(ok["eta"], 1, 2) == Matrix(1, 2));
}
