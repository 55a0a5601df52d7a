#include <doctest.h>

#include "tlmp/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>

using namespace tlmp;

namespace {

struct Run {
    int status;
    std::string out;
};

Run tlmp_run(const std::string& args) {
    std::string cmd = std::string(TLMP_BIN) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
    int st = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string fx(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

json run_json(const std::string& args, int expected) {
    Run r = tlmp_run("--format json " + args);
    CHECK(r.status == expected);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("verify") {
    CHECK(tlmp_run("verify jacobi " + fx("a4.json")).status == 0);
    json j = run_json("verify jacobi " + fx("a4_perturbed.json"), 1);
    CHECK(j["passed"] == false);
    CHECK(j["checks"][0].contains("witness"));
    CHECK(tlmp_run("verify jacobi " + fx("truncated.json")).status == 2);
    CHECK(tlmp_run("verify jacobi " + fx("no_such_file.json")).status == 2);
    CHECK(tlmp_run("verify jacobi " + fx("zero2_pair.json")).status == 0);
    CHECK(tlmp_run("verify matched-pair " + fx("nilpotent_pair.json")).status == 0);
    CHECK(tlmp_run("verify matched-pair " + fx("a4.json")).status == 2); // wrong kind
    CHECK(tlmp_run("verify representation " + fx("nilpotent_pair.json") + " " + fx("nilpotent_adjoint.json")).status ==
          0);
    CHECK(tlmp_run("verify morphism " + fx("morphism_identity.json")).status == 0);
    CHECK(tlmp_run("verify morphism " + fx("morphism_bad.json")).status == 1);
    CHECK(tlmp_run("verify deformation " + fx("deformation_good.json")).status == 0);
    CHECK(tlmp_run("verify deformation " + fx("deformation_bad.json")).status == 1);
    CHECK(tlmp_run("verify extension " + fx("unit_nu_ext.json") + " " + fx("unit_nu_section.json")).status == 0);
    CHECK(tlmp_run("verify nonsense " + fx("a4.json")).status == 2);
    CHECK(tlmp_run("").status == 2);
    CHECK(tlmp_run("--format xml verify jacobi " + fx("a4.json")).status == 2);
}

TEST_CASE("text report names the failing label and witness") {
    Run r = tlmp_run("verify morphism " + fx("morphism_bad.json"));
    CHECK(r.out.find("[FAIL] (mpl-mor-1)") != std::string::npos);
    CHECK(r.out.find("at x1=e1 x2=e2 a=b1") != std::string::npos);
}

TEST_CASE("build") {
    json b = run_json("build bicross " + fx("zero2_pair.json"), 0);
    CHECK(b["kind"] == "algebra");
    ThreeLie g = algebra_from_json(b["payload"]);
    CHECK(g.dim() == 4);
    CHECK(verify_jacobi(g).passed());
    CHECK(b["payload"]["brackets"].empty()); // direct sum of abelian algebras

    json e = run_json("build extension " + fx("zero2_pair.json") + " " + fx("zero2_rep.json") + " " +
                          fx("unit_nu.json"),
                      0);
    CHECK(e["kind"] == "extension");
    AbelianExtension ext = extension_from_json(e["payload"]);
    // rho-hat((e1,0),(e2,0))(b1,0) = (0,w)
    CHECK(ext.total.rho.at(0, 1, 0) == Vector{0, 0, 1});

    json bad = run_json("build extension " + fx("nilpotent_pair.json") + " " + fx("nilpotent_adjoint.json") + " " +
                            fx("nilpotent_noncocycle.json"),
                        1);
    CHECK(bad["error"].get<std::string>().find("(2co-") != std::string::npos);

    std::string out = "tlmp_cli_semidirect.json";
    CHECK(tlmp_run("build semidirect " + fx("nilpotent_pair.json") + " " + fx("nilpotent_adjoint.json") + " -o " + out)
              .status == 0);
    CHECK(tlmp_run("verify matched-pair " + out).status == 0);
    std::remove(out.c_str());
}

TEST_CASE("cohomology") {
    json d2 = run_json("cohomology --degree 2 " + fx("zero2_pair.json") + " " + fx("zero2_rep.json"), 0);
    CHECK(d2["Z2"] == 4);
    CHECK(d2["B2"] == 0);
    CHECK(d2["H2"] == 4);
    json d1 = run_json("cohomology --degree 1 " + fx("zero2_pair.json") + " " + fx("zero2_rep.json"), 0);
    CHECK(d1["Z1"] == 4);
    json z = run_json("cohomology --degree 2 " + fx("zero1_pair.json") + " " + fx("zero1_rep.json"), 0);
    CHECK((z["C2"] == 0 && z["Z2"] == 0 && z["B2"] == 0 && z["H2"] == 0));
    json b = run_json("--basis cohomology " + fx("zero2_pair.json") + " " + fx("zero2_rep.json"), 0);
    CHECK(b["H2_representatives"].size() == 4);
    CHECK(tlmp_run("cohomology --degree 3 " + fx("zero2_pair.json") + " " + fx("zero2_rep.json")).status == 2);
}

TEST_CASE("cocycle") {
    json c = run_json("cocycle check " + fx("nilpotent_pair.json") + " " + fx("nilpotent_adjoint.json") + " " +
                          fx("nilpotent_coboundary.json"),
                      0);
    CHECK(c["coboundary"] == true);
    CHECK(tlmp_run("cocycle check " + fx("nilpotent_pair.json") + " " + fx("nilpotent_adjoint.json") + " " +
                   fx("nilpotent_noncocycle.json"))
              .status == 1);
    // a zero2 cochain against the nilpotent representation: shape mismatch
    CHECK(tlmp_run("cocycle check " + fx("nilpotent_pair.json") + " " + fx("nilpotent_adjoint.json") + " " +
                   fx("unit_nu.json"))
              .status == 2);
    json x = run_json("cocycle extract " + fx("unit_nu_ext.json") + " " + fx("unit_nu_section.json"), 0);
    json y = run_json("cocycle extract " + fx("unit_nu_ext.json"), 0);
    CHECK(x["representation"] == y["representation"]);
    CHECK(x["cocycle"] == y["cocycle"]); // B2 = 0 on the zero fixture
}

TEST_CASE("wells") {
    std::string ext = fx("unit_nu_ext.json");
    json id = run_json("wells induce " + ext + " " + fx("aut_identity.json"), 0);
    CHECK(id["verdict"] == "inducible");
    json cl = run_json("wells class " + ext + " " + fx("aut_identity.json"), 0);
    CHECK(cl["is_zero"] == true);
    json ob = run_json("wells induce " + ext + " " + fx("aut_alpha1_2.json"), 1);
    CHECK(ob["verdict"] == "obstructed");
    CHECK(ob["obstruction"]["nu"][0]["value"][0] == "-3/4");
    json nz = run_json("wells class " + ext + " " + fx("aut_alpha1_2.json"), 0);
    CHECK(nz["is_zero"] == false);
    json nc = run_json("wells induce " + fx("nilpotent_ext.json") + " " + fx("nilpotent_aut_scale.json"), 1);
    CHECK(nc["error"].get<std::string>().find("not compatible") != std::string::npos);

    std::string out = "tlmp_cli_lift.json";
    CHECK(tlmp_run("wells lift " + ext + " " + fx("aut_identity.json") + " -o " + out).status == 0);
    CHECK(tlmp_run("verify total-aut " + ext + " " + out).status == 0);
    std::remove(out.c_str());
    CHECK(tlmp_run("wells lift " + ext + " " + fx("aut_alpha1_2.json")).status == 1);
    // aut pair of the wrong shape for this extension
    CHECK(tlmp_run("wells induce " + fx("nilpotent_ext.json") + " " + fx("aut_identity.json")).status == 2);
}

TEST_CASE("report") {
    json r = run_json("report exact " + fx("zero2_trivial_ext.json"), 0);
    CHECK(r["z1_dim"] == 4);
    CHECK(r["ker_phi_dim"] == 4);
    for (auto& p : r["probes"]) CHECK(p["inducible"] == true);
    json a = run_json("--seed 5 report random --count 4", 0);
    json b = run_json("--seed 5 report random --count 4", 0);
    CHECK(a == b);
    CHECK(tlmp_run("report random --count 0").status == 2);
    CHECK(tlmp_run("report exact").status == 2);
}
