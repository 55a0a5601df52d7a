#include "tlmp/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace tlmp;

namespace {

struct Opts {
    std::string format = "text";
    bool basis = false;
    unsigned seed = 1;
    std::string out;
};

// a finished command: what to print and the exit status
struct Result {
    json data;
    std::string text;
    int code = 0;
};

Result from_report(const Report& r, json extra = json::object()) {
    json j = to_json(r);
    for (auto& [k, v] : extra.items()) j[k] = v;
    return {j, r.text(), r.passed() ? 0 : 1};
}

json payload(const std::string& path, const std::string& kind) { return expect(read_bundle(path), kind); }
MatchedPair load_pair(const std::string& path) { return pair_from_json(payload(path, "matched_pair")); }
AbelianExtension load_ext(const std::string& path) { return extension_from_json(payload(path, "extension")); }
Section load_section(const std::string& path, const AbelianExtension& e) {
    if (path.empty()) return canonical_section(e);
    return section_from_json(payload(path, "section"), e);
}

// pair + representation that must verify before anything else runs
std::pair<MatchedPair, MPRepresentation> load_verified(const std::string& pp, const std::string& rp) {
    MatchedPair p = load_pair(pp);
    MPRepresentation r = representation_from_json(payload(rp, "representation"), p);
    Report rep = verify_matched_pair(p);
    if (!rep.passed()) throw AxiomError("pair is not a matched pair: fails " + rep.first_failure()->label, rep);
    Report rr = verify_mp_representation(p, r);
    if (!rr.passed()) throw AxiomError("not a representation: fails " + rr.first_failure()->label, rr);
    return {p, r};
}

std::string matrix_text(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) s += "  " + to_string(m.row(r)) + "\n";
    return s.empty() ? "  (empty)\n" : s;
}

std::string cochain_text(const Cochain2& c) {
    std::string s;
    auto tri = [&](const char* name, const AltTrilinear& t) {
        for (auto [i, j, k] : increasing_triples(t.in_dim()))
            if (!is_zero(t.at(i, j, k)))
                s += "  " + std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                     std::to_string(k + 1) + ") = " + to_string(t.at(i, j, k)) + "\n";
    };
    auto act = [&](const char* name, const TriAction& t) {
        for (auto [i, j] : increasing_pairs(t.pair_dim()))
            for (std::size_t k = 0; k < t.target_dim(); ++k)
                if (!is_zero(t.at(i, j, k)))
                    s += "  " + std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")" +
                         std::to_string(k + 1) + " = " + to_string(t.at(i, j, k)) + "\n";
    };
    tri("omega", c.omega);
    tri("theta", c.theta);
    act("nu", c.nu);
    act("phi", c.phi);
    return s.empty() ? "  0\n" : s;
}

// ---- verify ----

Result cmd_verify(const std::string& what, const std::vector<std::string>& files) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (files.size() < lo || files.size() > hi) throw InputError("verify " + what + ": wrong number of files");
    };
    if (what == "jacobi") {
        need(1, 1);
        Bundle b = read_bundle(files[0]);
        if (b.kind == "matched_pair") return from_report(verify_jacobi(bicrossed_product(pair_from_json(b.payload))));
        return from_report(verify_jacobi(algebra_from_json(expect(b, "algebra"))));
    }
    if (what == "matched-pair") {
        need(1, 1);
        return from_report(verify_matched_pair(load_pair(files[0])));
    }
    if (what == "representation") {
        need(2, 2);
        MatchedPair p = load_pair(files[0]);
        return from_report(verify_mp_representation(p, representation_from_json(payload(files[1], "representation"), p)));
    }
    if (what == "morphism") {
        need(1, 1);
        json j = payload(files[0], "morphism");
        MatchedPair p = pair_from_json(j.at("source")), q = pair_from_json(j.at("target"));
        Matrix f = matrix_from_json(j.at("f"), q.g.dim(), p.g.dim());
        Matrix g = matrix_from_json(j.at("g"), q.h.dim(), p.h.dim());
        return from_report(verify_mp_morphism(f, g, p, q));
    }
    if (what == "deformation") {
        need(1, 1);
        json j = payload(files[0], "deformation");
        return from_report(verify_deformation(pair_from_json(j.at("pair")), cochain2_from_json(j.at("cochain"))));
    }
    if (what == "extension") {
        need(1, 2);
        AbelianExtension e = load_ext(files[0]);
        Report r = validate(e);
        if (files.size() == 2) r.absorb(validate(e, load_section(files[1], e)), "section");
        return from_report(r);
    }
    if (what == "total-aut" || what == "extension-automorphism") {
        need(2, 2);
        AbelianExtension e = load_ext(files[0]);
        return from_report(validate(e, total_aut_from_json(payload(files[1], "total_aut"), e)));
    }
    throw InputError("unknown verify target \"" + what + "\"");
}

// ---- build ----

Result cmd_build(const std::string& what, const std::vector<std::string>& files) {
    if (what == "bicross") {
        if (files.size() != 1) throw InputError("build bicross: one pair file");
        MatchedPair p = load_pair(files[0]);
        Report r = verify_matched_pair(p);
        if (!r.passed()) throw AxiomError("not a matched pair: fails " + r.first_failure()->label, r);
        return {make_bundle("algebra", to_json(bicrossed_product(p)), "bicrossed product"), "", 0};
    }
    if (what == "semidirect") {
        if (files.size() != 2) throw InputError("build semidirect: pair and representation files");
        auto [p, r] = load_verified(files[0], files[1]);
        return {make_bundle("matched_pair", to_json(semidirect_product(p, r)), "semidirect product"), "", 0};
    }
    if (what == "extension") {
        if (files.size() != 3) throw InputError("build extension: pair, representation and cochain files");
        auto [p, r] = load_verified(files[0], files[1]);
        Cochain2 c = cochain2_from_json(payload(files[2], "cochain2"));
        check_cochain_dims(c, p, r);
        return {make_bundle("extension", to_json(build_extension(p, r, c)), "abelian extension"), "", 0};
    }
    throw InputError("unknown build target \"" + what + "\"");
}

// ---- cohomology ----

Result cmd_cohomology(const std::string& pp, const std::string& rp, int degree, const Opts& o) {
    auto [p, r] = load_verified(pp, rp);
    CochainDims cd = cochain_dims(p, r);
    json j;
    std::string t;
    if (degree == 1) {
        Subspace Z = z1_basis(p, r);
        j = {{"degree", 1}, {"C1", cd.c1}, {"Z1", Z.basis.size()}};
        if (o.basis) j["Z1_basis"] = to_json(Z)["basis"];
        t = "degree 1\n  dim C1 = " + std::to_string(cd.c1) + "\n  dim Z1 = " + std::to_string(Z.basis.size()) + "\n";
        if (o.basis)
            for (auto& v : Z.basis) t += "  Z1 basis: " + to_string(v) + "\n";
    } else if (degree == 2) {
        H2 h = h2(p, r);
        j = {{"degree", 2},
             {"C2", cd.c2_total()},
             {"C2_parts", {{"omega", cd.c2[0]}, {"theta", cd.c2[1]}, {"nu", cd.c2[2]}, {"phi", cd.c2[3]}}},
             {"Z2", h.z2.basis.size()},
             {"B2", h.b2.basis.size()},
             {"H2", h.dim}};
        t = "degree 2\n  dim C2 = " + std::to_string(cd.c2_total()) + "\n  dim Z2 = " +
            std::to_string(h.z2.basis.size()) + "\n  dim B2 = " + std::to_string(h.b2.basis.size()) +
            "\n  dim H2 = " + std::to_string(h.dim) + "\n";
        if (o.basis) {
            j["Z2_basis"] = to_json(h.z2)["basis"];
            j["B2_basis"] = to_json(h.b2)["basis"];
            json reps = json::array();
            for (auto& v : h.representatives) {
                reps.push_back(to_json(deserialize_cochain2(p, r, v)));
                t += "  H2 representative:\n" + cochain_text(deserialize_cochain2(p, r, v));
            }
            j["H2_representatives"] = reps;
        }
    } else {
        throw InputError("degree must be 1 or 2");
    }
    return {j, t, 0};
}

// ---- cocycle ----

Result cmd_cocycle(const std::string& action, const std::vector<std::string>& files) {
    if (action == "check") {
        if (files.size() != 3) throw InputError("cocycle check: pair, representation and cochain files");
        auto [p, r] = load_verified(files[0], files[1]);
        Cochain2 c = cochain2_from_json(payload(files[2], "cochain2"));
        check_cochain_dims(c, p, r);
        Report rep = is_cocycle2(p, r, c);
        json extra = json::object();
        if (rep.passed()) {
            auto x = is_coboundary2(p, r, c);
            extra["coboundary"] = x.has_value();
            if (x) extra["primitive"] = to_json(*x);
        }
        Result res = from_report(rep, extra);
        if (rep.passed()) res.text += std::string("  coboundary: ") + (extra["coboundary"].get<bool>() ? "yes" : "no") + "\n";
        return res;
    }
    if (action == "extract") {
        if (files.empty() || files.size() > 2) throw InputError("cocycle extract: extension [section]");
        AbelianExtension e = load_ext(files[0]);
        Report v = validate(e);
        if (!v.passed()) throw AxiomError("not an abelian extension: fails " + v.first_failure()->label, v);
        Section s = load_section(files.size() == 2 ? files[1] : "", e);
        Cochain2 c = extract_cocycle(e, s);
        MPRepresentation r = induced_representation(e, s);
        return {{{"cocycle", to_json(c)}, {"representation", to_json(r)}}, "cocycle:\n" + cochain_text(c), 0};
    }
    if (action == "compare") {
        if (files.size() != 4) throw InputError("cocycle compare: pair, representation and two cochain files");
        auto [p, r] = load_verified(files[0], files[1]);
        Cochain2 a = cochain2_from_json(payload(files[2], "cochain2")), b = cochain2_from_json(payload(files[3], "cochain2"));
        check_cochain_dims(a, p, r);
        check_cochain_dims(b, p, r);
        auto x = cohomologous(p, r, a, b);
        json j{{"cohomologous", x.has_value()}};
        std::string t = std::string("cohomologous: ") + (x ? "yes" : "no") + "\n";
        if (x) {
            j["witness"] = to_json(*x);
            t += "witness N1:\n" + matrix_text(x->N1) + "witness N2:\n" + matrix_text(x->N2);
        }
        return {j, t, x ? 0 : 1};
    }
    throw InputError("unknown cocycle action \"" + action + "\"");
}

// ---- wells ----

Result cmd_wells(const std::string& action, const std::string& ep, const std::string& ap_path,
                 const std::string& sp) {
    AbelianExtension e = load_ext(ep);
    Report v = validate(e);
    if (!v.passed()) throw AxiomError("not an abelian extension: fails " + v.first_failure()->label, v);
    Section s = load_section(sp, e);
    AutPair ap = aut_pair_from_json(payload(ap_path, "aut_pair"), e);
    Report av = validate(e.base, e.V_dim, e.W_dim, ap);
    if (!av.passed()) throw AxiomError("not an automorphism pair: fails " + av.first_failure()->label, av);
    if (action == "class") {
        WellsClass w = wells_map(e, s, ap);
        std::string t = std::string("Wells class: ") + (w.is_zero ? "zero" : "nonzero") + "\nrepresentative:\n" +
                        cochain_text(w.representative);
        return {to_json(w), t, 0};
    }
    Inducibility d = decide_inducible(e, s, ap);
    if (d.verdict == Verdict::not_compatible)
        throw AxiomError("not compatible: fails " + d.compatibility.first_failure()->label, d.compatibility);
    if (action == "induce") {
        std::string t = "verdict: " + to_string(d.verdict) + "\n";
        if (d.zeta) t += "zeta:\n" + matrix_text(*d.zeta) + "eta:\n" + matrix_text(*d.eta);
        if (d.obstruction)
            t += "obstruction (rank gap " + std::to_string(d.rank_gap) + "):\n" + cochain_text(d.obstruction->representative);
        return {to_json(d), t, d.verdict == Verdict::inducible ? 0 : 1};
    }
    if (action == "lift") {
        if (d.verdict != Verdict::inducible) {
            Result r{to_json(d), "not inducible: no lift\n" + cochain_text(d.obstruction->representative), 1};
            return r;
        }
        TotalAut u = lift_automorphism(e, s, ap, *d.zeta, *d.eta);
        return {make_bundle("total_aut", to_json(u), "lifted automorphism"), "", 0};
    }
    throw InputError("unknown wells action \"" + action + "\"");
}

// ---- report ----

Rational small(std::mt19937& rng, int density) {
    std::uniform_int_distribution<int> d(0, 99), v(-2, 2);
    if (d(rng) >= density) return 0;
    int x = v(rng);
    return x == 0 ? 1 : x;
}

template <class T>
void fill(T& t, std::mt19937& rng, int density);

template <>
void fill(TriAction& t, std::mt19937& rng, int density) {
    for (auto [i, j] : increasing_pairs(t.pair_dim()))
        for (std::size_t k = 0; k < t.target_dim(); ++k) {
            Vector v(t.out_dim());
            for (auto& x : v) x = small(rng, density);
            t.set(i, j, k, v);
        }
}

template <>
void fill(Pairing& t, std::mt19937& rng, int density) {
    for (std::size_t i = 0; i < t.a_dim(); ++i)
        for (std::size_t j = 0; j < t.b_dim(); ++j)
            for (std::size_t k = 0; k < t.c_dim(); ++k) {
                Vector v(t.out_dim());
                for (auto& x : v) x = small(rng, density);
                t.set(i, j, k, v);
            }
}

// verified (pair, representation) with dims <= 2 by rejection
std::pair<MatchedPair, MPRepresentation> random_instance(std::mt19937& rng) {
    while (true) {
        MatchedPair p = MatchedPair::trivial(ThreeLie::abelian(1 + rng() % 2, "e"), ThreeLie::abelian(1 + rng() % 2, "b"));
        if (rng() % 3) fill(p.rho, rng, 40);
        if (rng() % 3) fill(p.psi, rng, 40);
        if (!verify_matched_pair(p).passed()) continue;
        MPRepresentation r = MPRepresentation::zero(p, 1 + rng() % 2, 1 + rng() % 2);
        for (TriAction* t : {&r.rhoV, &r.psiV, &r.rhoW, &r.psiW})
            if (rng() % 2) fill(*t, rng, 30);
        if (rng() % 2) fill(r.alpha, rng, 30);
        if (rng() % 2) fill(r.beta, rng, 30);
        if (verify_mp_representation(p, r).passed()) return {p, r};
    }
}

Result cmd_report_random(int count, const Opts& o) {
    std::mt19937 rng(o.seed);
    Report rep{"randomized properties (seed " + std::to_string(o.seed) + ")", {}};
    Check dd{"d2 d1 = 0", true, 0, {}, {}}, semi{"semidirect product is a matched pair", true, 0, {}, {}},
        trip{"extension round trip", true, 0, {}, {}}, sec{"section change is a coboundary", true, 0, {}, {}};
    for (int k = 0; k < count; ++k) {
        auto [p, r] = random_instance(rng);
        ++dd.tuples;
        if (!(d2_matrix(p, r) * d1_matrix(p, r)).is_zero()) dd.passed = false;
        ++semi.tuples;
        if (!verify_matched_pair(semidirect_product(p, r)).passed()) semi.passed = false;
        Subspace Z = z2_basis(p, r);
        Vector x = zeros(Z.ambient);
        for (auto& b : Z.basis) x += small(rng, 70) * b;
        Cochain2 c = deserialize_cochain2(p, r, x);
        AbelianExtension e = build_extension(p, r, c);
        Section s = canonical_section(e);
        ++trip.tuples;
        if (extract_cocycle(e, s) != c || induced_representation(e, s) != r || !validate(e).passed())
            trip.passed = false;
        Cochain1 T = Cochain1::zero(p, r);
        for (Matrix* N : {&T.N1, &T.N2})
            for (std::size_t i = 0; i < N->rows(); ++i)
                for (std::size_t j = 0; j < N->cols(); ++j) (*N)(i, j) = small(rng, 60);
        Cochain2 c2 = extract_cocycle(e, shift_section(e, s, T));
        auto w = cohomologous(p, r, c, c2);
        ++sec.tuples;
        if (!w || c - c2 != d1(p, r, *w)) sec.passed = false;
    }
    for (auto* c : {&dd, &semi, &trip, &sec}) rep.add(*c);
    return from_report(rep);
}

Result cmd_report_exact(const std::string& ep, const std::string& sp) {
    AbelianExtension e = load_ext(ep);
    Report v = validate(e);
    if (!v.passed()) throw AxiomError("not an abelian extension: fails " + v.first_failure()->label, v);
    ExactSequenceReport r = exact_sequence_report(e, load_section(sp, e));
    std::string t = r.checks.text() + "  dim Z1 = " + std::to_string(r.z1_dim) +
                    ", dim ker Phi = " + std::to_string(r.ker_phi_dim) + "\n  probes:\n";
    for (auto& p : r.probes)
        t += "    " + p.name + ": " + (p.compatible ? "compatible" : "not compatible") +
             (p.compatible ? (p.wells_zero ? ", class zero" : ", class nonzero") : "") +
             (p.inducible ? ", inducible" : ", not inducible") + "\n";
    return {to_json(r), t, r.checks.passed() ? 0 : 1};
}

void emit(const Result& r, const Opts& o) {
    // bundles (build / lift) are data: always JSON, optionally to a file
    bool bundle = r.data.is_object() && r.data.contains("kind") && r.data.contains("payload");
    if (bundle) {
        if (!o.out.empty()) {
            std::ofstream f(o.out);
            if (!f) throw InputError("cannot write " + o.out);
            f << dump(r.data);
        } else {
            std::cout << dump(r.data);
        }
        return;
    }
    if (o.format == "json")
        std::cout << dump(r.data);
    else
        std::cout << r.text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tlmp: 3-Lie algebras, matched pairs, cohomology, extensions and the Wells map"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--basis", o.basis, "include bases in cohomology output");
    app.add_option("--seed", o.seed, "seed for randomized reports");

    std::string what;
    std::vector<std::string> files;
    std::string section, ext, aut;
    int degree = 2, count = 20;

    auto* verify = app.add_subcommand("verify", "check an axiom system");
    verify->add_option("what", what, "jacobi|matched-pair|representation|morphism|deformation|extension|total-aut|extension-automorphism")
        ->required();
    verify->add_option("files", files)->required();

    auto* build = app.add_subcommand("build", "construct bicross|semidirect|extension");
    build->add_option("what", what)->required();
    build->add_option("files", files)->required();
    build->add_option("-o,--out", o.out, "write the bundle here");

    auto* coh = app.add_subcommand("cohomology", "dimensions of C, Z, B, H");
    coh->add_option("files", files, "pair and representation")->required()->expected(2);
    coh->add_option("--degree", degree)->check(CLI::IsMember({1, 2}));

    auto* coc = app.add_subcommand("cocycle", "check|extract|compare");
    coc->add_option("action", what)->required();
    coc->add_option("files", files)->required();

    auto* wells = app.add_subcommand("wells", "class|induce|lift");
    wells->add_option("action", what)->required();
    wells->add_option("extension", ext)->required();
    wells->add_option("aut", aut)->required();
    wells->add_option("--section", section);
    wells->add_option("-o,--out", o.out, "write the lifted automorphism here");

    auto* rep = app.add_subcommand("report", "exact <extension> | random");
    rep->add_option("what", what)->required();
    rep->add_option("extension", ext);
    rep->add_option("--section", section);
    rep->add_option("--count", count, "instances for the random report");

    app.fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto fail = [&](const std::string& msg, int code, const Report* r) {
        if (o.format == "json") {
            json j{{"error", msg}, {"status", code == 1 ? "failure" : "input_error"}};
            if (r) j["report"] = to_json(*r);
            std::cout << dump(j);
        } else {
            std::cerr << "tlmp: " << msg << "\n";
            if (r) std::cerr << r->text();
        }
        return code;
    };

    try {
        Result r;
        if (*verify)
            r = cmd_verify(what, files);
        else if (*build)
            r = cmd_build(what, files);
        else if (*coh)
            r = cmd_cohomology(files[0], files[1], degree, o);
        else if (*coc)
            r = cmd_cocycle(what, files);
        else if (*wells)
            r = cmd_wells(what, ext, aut, section);
        else if (what == "exact") {
            if (ext.empty()) throw InputError("report exact: extension file required");
            r = cmd_report_exact(ext, section);
        } else if (what == "random") {
            if (count < 1) throw InputError("--count must be positive");
            r = cmd_report_random(count, o);
        } else
            throw InputError("unknown report \"" + what + "\"");
        emit(r, o);
        return r.code;
    } catch (const AxiomError& e) {
        return fail(e.what(), 1, &e.report);
    } catch (const ConsistencyError& e) {
        return fail(e.what(), 1, nullptr);
    } catch (const InputError& e) {
        return fail(e.what(), 2, nullptr);
    } catch (const json::exception& e) {
        return fail(std::string("malformed input: ") + e.what(), 2, nullptr);
    } catch (const std::exception& e) {
        return fail(e.what(), 2, nullptr);
    }
}
