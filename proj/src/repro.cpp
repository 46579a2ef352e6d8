#include "ftft/repro.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ftft/errors.hpp"
#include "ftft/reference.hpp"

namespace ftft {

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

bool has_failing(const Report& r, const std::string& id) { return r.has(id) && !r.ok(id); }

Scalar gi(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }

// ---------------------------------------------------------------- 1

Outcome fermionic_tensor_q8() {
    Outcome o;
    FermionicGroup g = pin1_minus();
    FermionicTensor t = fermionic_tensor(g, g);
    const FermionicGroup& tg = t.group;
    FermionicGroup q8 = quaternion_group();
    o.require(tg.order() == 8, "order " + std::to_string(tg.order()));
    o.require(check_fermionic_group(tg).ok(), "tensor product is not a fermionic group");
    int f1 = tg.index("T⊗1"), f2 = tg.index("1⊗T");
    auto w = extend_from_generators(tg, {f1, f2}, q8, {q8.index("i"), q8.index("j")});
    o.require(w.has_value(), "generators do not extend to a map");
    if (!w) return o;
    o.require(iso_witness_check(tg, q8, *w), "witness is not an isomorphism");
    o.require((*w)[size_t(tg.c)] == q8.index("-1"), "c is not sent to -1");
    o.require(tg.theta[size_t(f1)] == 1 && tg.theta[size_t(f2)] == 1, "generators are not odd");
    o.require(tg.mul(f1, f2) == tg.mul(tg.c, tg.mul(f2, f1)), "generators do not anticommute");
    o.require(tg.mul(f1, f1) == tg.c && tg.mul(f2, f2) == tg.c, "generators do not square to c");
    // the witness is checked on the whole 8 x 8 table
    size_t agree = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            agree += (*w)[size_t(tg.mul(a, b))] == q8.mul((*w)[size_t(a)], (*w)[size_t(b)]);
    o.require(agree == 64, "table agreement " + std::to_string(agree) + "/64");
    o.info("witness T⊗1 -> i, 1⊗T -> j, c -> -1; 64/64 products");
    return o;
}

// ---------------------------------------------------------------- 2

Outcome tenfold_rows() {
    Outcome o;
    struct Row {
        const char* internal;
        FermionicGroup g, expect;
        const char* expect_name;
    };
    std::vector<Row> rows = {{"Pin1+", pin1_plus(), pin1_minus(), "Pin1-"},
                             {"Pin1-", pin1_minus(), pin1_plus(), "Pin1+"},
                             {"Spin1", trivial_fermionic(), trivial_fermionic(), "Spin1"}};
    for (const auto& r : rows) {
        SpacetimeGroup1D h = spacetime_group_1d(r.g);
        auto w = find_isomorphism(h.h1, r.expect);
        bool ok = w && iso_witness_check(h.h1, r.expect, *w);
        o.require(ok, std::string(r.internal) + " does not give " + r.expect_name);
        if (ok) o.info(std::string(r.internal) + " -> " + r.expect_name);
    }
    return o;
}

// ---------------------------------------------------------------- 3

Outcome clifford_parity_extension() {
    Outcome o;
    size_t checked = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            std::string name = "Cl" + std::to_string(p) + "," + std::to_string(q);
            const int r = (((p - q) % 4) + 4) % 4;
            Superalgebra cl = clifford(p, q, Field::R);
            Superalgebra predicted = r == 1   ? clifford(p, q + 1, Field::R)
                                     : r == 3 ? clifford(p + 1, q, Field::R)
                                     : r == 0 ? direct_sum(cl, cl)
                                              : tensor(cl, complex_numbers_real());
            Superalgebra ext = parity_extension(cl);
            o.require(fingerprint(ext) == fingerprint(predicted), name + ": fingerprint differs");
            o.require(reference::parity_extension_witness(p, q), name + ": witness fails");
            int want = (r == 0 || r == 3) ? 1 : -1;
            o.require(reference::parity_extension_square(p, q) == want, name + ": a^2 has the wrong sign");
            ++checked;
        }
    o.info(std::to_string(checked) + " algebras, fingerprints, witnesses and a^2 signs agree");
    return o;
}

// ---------------------------------------------------------------- 4

Outcome extension_counts() {
    Outcome o;
    size_t o2 = enumerate_extension_maps(fixture_two_group("o2")).size();
    size_t pt = enumerate_extension_maps(fixture_two_group("point")).size();
    o.require(o2 == 4, "O2 model gives " + std::to_string(o2) + " classes");
    o.require(pt == 1, "trivial model gives " + std::to_string(pt) + " classes");
    // independent count: admissible Gamma values times brute-force |H^2(pi0; Z/2)|
    for (const char* name : {"o2", "point"}) {
        SkeletalTwoGroup g = fixture_two_group(name);
        size_t gammas = 0;
        const size_t r = g.pi1.rank();
        for (size_t bits = 0; bits < (size_t(1) << r); ++bits) {
            std::vector<int> gamma(r);
            for (size_t k = 0; k < r; ++k) gamma[k] = int((bits >> k) & 1);
            gammas += gamma_admissible(g, gamma);
        }
        size_t brute = gammas * brute_h2_serial(g.pi0).classes;
        o.require(brute == enumerate_extension_maps(g).size(),
                  std::string(name) + ": brute count " + std::to_string(brute));
    }
    o.info("O2: " + std::to_string(o2) + " classes, trivial: " + std::to_string(pt));
    return o;
}

// ---------------------------------------------------------------- 5

Outcome serre_oracle() {
    Outcome o;
    AlgPtr kc = share(ground_field(Field::C));
    AlgPtr cl1 = share(complex_clifford(1));
    std::vector<std::pair<std::string, MoritaContext>> cases;
    cases.push_back({"C", *is_invertible(regular_bimodule(kc))});
    cases.push_back({"Cl1", *is_invertible(regular_bimodule(cl1))});
    cases.push_back({"A_(-1)^F over Cl1", parity_context(cl1)});
    cases.push_back({"Pi C", shift_context(kc)});
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1}) {
            BundleFixture f = pin_tft(p, s, s);
            ComplexView v = complex_view(f.bundle);
            for (int g = 0; g < f.bundle.grading.order(); ++g) {
                auto ctx = is_invertible(v.modules[size_t(g)]);
                std::string name = "pin |x_T|=" + std::to_string(p) + " x_T^2=" + std::to_string(s) + " A_" +
                                   f.bundle.grading.label(g);
                o.require(ctx.has_value(), name + " is not invertible");
                if (ctx) cases.push_back({name, *ctx});
            }
        }
    for (const auto& [name, ctx] : cases) {
        SerreNaturality sn = serre_naturality(ctx);
        auto ref = reference::serre_by_pairing(ctx, sn.src, sn.dst);
        o.require(ref.has_value(), name + ": oracle system is singular");
        o.require(ref && *ref == sn.map.matrix, name + ": closed formula differs from the oracle");
    }
    // A_(-1)^F: x (x) f (x) x -> (-1)^{|f|} f
    auto par = serre_naturality(parity_context(cl1));
    for (size_t t = 0; t < cl1->dim(); ++t) {
        Vec f = cl1->basis(t), g = f;
        if (cl1->parity(t))
            for (auto& x : g) x = -x;
        o.require(par.map.matrix * par.src.pure(f, cl1->unit()) == par.dst.pure(cl1->unit(), g),
                  "A_(-1)^F does not give (-1)^|f| f");
    }
    // Pi C: -eps
    auto sc = serre_naturality(shift_context(kc));
    o.require(sc.map.matrix * sc.src.pure({Scalar(1)}, {Scalar(1)}) == sc.dst.pure({Scalar(1)}, {Scalar(-1)}),
              "Pi C does not give -eps");
    o.info(std::to_string(cases.size()) + " contexts match the oracle exactly");
    return o;
}

// ---------------------------------------------------------------- 6

Outcome ungraded_symmetric_equivalence() {
    Outcome o;
    struct Case {
        std::string name;
        GradedAlgebraBundle b;
        Vec lambda;
    };
    std::vector<Case> cases;
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1}) {
            auto f = pin_tft(p, s, s);
            std::string n = "pin |x_T|=" + std::to_string(p) + " x_T^2=" + std::to_string(s);
            cases.push_back({n, f.bundle, f.lambda});
            cases.push_back({n + " lambda=i", f.bundle, {Scalar::I()}});
        }
    auto pm = pin1_minus_tft(1);
    cases.push_back({"pin1- odd", pm.bundle, pm.lambda});
    cases.push_back({"pin1- odd lambda=i", pm.bundle, {Scalar::I()}});
    auto q8 = trivial_theory(quaternion_group());
    cases.push_back({"trivial q8", q8.bundle, q8.lambda});
    cases.push_back({"trivial q8 lambda=2i", q8.bundle, {gi(0, 2)}});
    auto bos = trivial_theory(make_fermionic_group({"1", "T"}, {{"1", "T"}, {"T", "1"}}, "1", "1", {{"1", 0}, {"T", 1}}));
    cases.push_back({"bosonic Z2", bos.bundle, bos.lambda});
    auto spec = bos.spec;
    spec.parity = {0, 1};
    cases.push_back({"bosonic Z2 odd x_T", build_bundle(spec), bos.lambda});
    size_t pass = 0, fail = 0;
    for (const auto& c : cases) {
        ComplexView v = complex_view(c.b);
        FrobeniusStructure f{v.a1, c.lambda};
        bool a = check_frobenius_compat(c.b, v, f).ok();
        bool s = serre_frobenius_check(c.b, v, f).ok();
        o.require(a == s, c.name + ": compat " + (a ? "PASS" : "FAIL") + " vs Serre " + (s ? "PASS" : "FAIL"));
        (a ? pass : fail)++;
    }
    o.require(pass > 0 && fail > 0, "fixtures must include passing and failing cases");
    o.info(std::to_string(cases.size()) + " fixtures (" + std::to_string(pass) + " pass, " + std::to_string(fail) +
           " fail), identical verdicts");
    return o;
}

// ---------------------------------------------------------------- 7

Outcome alpha_tables() {
    Outcome o;
    std::vector<AlphaFixture> fx;
    for (auto f : {pin_tft(0, 1, 1, true), pin_tft(1, 1, 1, true), pin_tft(1, -1, -1, true), pin1_minus_tft(1)})
        fx.push_back({f.bundle, f.dagger});
    auto out = alpha_oracle(fx);
    bool plus = false, minus = false;
    for (const auto& s : out) {
        plus = plus || s.table == standard_alpha(1);
        minus = minus || s.table == standard_alpha(-1);
    }
    o.require(plus && minus, "a global-sign table is missing");
    o.require(out.size() == 2, std::to_string(out.size()) + " tables survive, expected exactly 2");
    for (const auto& s : out) o.info((s.i_sign > 0 ? "+i: " : "-i: ") + alpha_str(s.table));
    return o;
}

// ---------------------------------------------------------------- 8

Outcome stellar_morita() {
    Outcome o;
    auto one = stellar_complex(Scalar(1));
    for (Scalar a : {Scalar(-1), Scalar(mpq_class(3, 5), mpq_class(4, 5))}) {
        auto r = morita_search_stellar(one, stellar_complex(a));
        bool ok = r.verdict == MoritaVerdict::Witness && r.witness && check_stellar_bimodule(*r.witness).ok();
        o.require(ok, "C with a = 1 vs a = " + a.str() + ": " + verdict_name(r.verdict));
        if (ok) o.info("a=1 vs a=" + a.str() + ": WITNESS");
    }
    auto shifted = morita_search_stellar(one, stellar_complex(Scalar(1), true));
    o.require(shifted.verdict == MoritaVerdict::None, "C vs Pi C: " + verdict_name(shifted.verdict));
    auto plus = stellar_from_star(clifford1_star(1));
    auto minus = stellar_from_star(clifford1_star(-1));
    auto cl = morita_search_stellar(plus, minus);
    o.require(cl.verdict == MoritaVerdict::None, "Cl1 *+ vs *-: " + verdict_name(cl.verdict));
    const std::string expected = "e<1,1> = -<1,1>e forces <1,1> odd; even pairing vanishes; degenerate";
    bool named = false;
    for (const auto& n : cl.notes) named = named || n == expected;
    o.require(named, "obstruction note missing");
    o.info("C vs Pi C: NONE; Cl1 *+ vs *-: NONE (" + expected + ")");
    return o;
}

// ---------------------------------------------------------------- 9

Superalgebra with_constant(const Superalgebra& a, size_t x, size_t y, size_t z, const Scalar& v) {
    Superalgebra b(a.dim(), a.parity(), a.field());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, c] : a.product(i, j)) b.set(i, j, k, c);
    b.set(x, y, z, v);
    b.set_unit(a.unit());
    b.name = a.name;
    return b;
}

Outcome end_to_end_2d() {
    Outcome o;
    for (const char* g : {"z2c-x-z2t", "q8"}) {
        auto f = trivial_theory(fixture_group(g));
        o.require(check_tft2d(construct_from_dagger(f.bundle, f.dagger, f.lambda)).ok(),
                  std::string("trivial theory over ") + g + " fails");
    }
    size_t positive = 0;
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1})
            for (int t : {1, -1}) {
                auto f = pin_tft(p, s, t);
                Report r = check_tft2d(construct_from_dagger(f.bundle, f.dagger, f.lambda));
                std::string n = "pin |x_T|=" + std::to_string(p) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
                o.require(r.ok(), n + " fails");
                o.require(r.flags["positive"] == (s == t), n + ": positivity flag wrong");
                positive += r.flags["positive"];
            }
    o.require(positive == 4, "positivity count " + std::to_string(positive));

    // single mutations, each with the clause it must trip
    struct Mutation {
        std::string what, clause;
        std::function<Report()> run;
    };
    std::vector<Mutation> ms;
    auto constant = [&](const BundleFixture& f, size_t x, size_t y, const std::string& clause) {
        const Superalgebra& A = *f.bundle.ambient;
        auto [k, c] = A.product(x, y).front();
        std::string what = "structure constant e" + std::to_string(x) + "e" + std::to_string(y) + " -> e" +
                           std::to_string(k) + " negated";
        ms.push_back({what, clause, [f, x, y, k = k, c = c] {
                          GradedAlgebraBundle b = f.bundle;
                          b.ambient = share(with_constant(*f.bundle.ambient, x, y, k, -c));
                          return check_tft2d_data(b, f.dagger, f.lambda);
                      }});
    };
    // real basis of the Pin fixtures: 0 = 1, 1 = i, 2/3 = x_T, 4/5 = (-1)^F, 6/7 = x_T (-1)^F
    auto even = pin_tft(0, 1, 1), odd = pin_tft(1, -1, -1);
    constant(even, 0, 0, "ambient-unit");
    constant(even, 1, 1, "i-central");
    constant(even, 1, 2, "i-commutation");
    constant(even, 2, 3, "frobenius-compat");
    constant(even, 4, 4, "fermion-parity");
    constant(even, 0, 2, "dagger-anti-multiplicative");
    constant(odd, 3, 3, "ambient-associativity");
    constant(odd, 1, 3, "i-commutation");

    auto pairing = [&](const BundleFixture& f, const std::string& label, Scalar factor, const std::string& clause) {
        std::string what = "pairing <x,x> on A_" + label + " scaled by " + factor.str();
        ms.push_back({what, clause, [f, label, factor] {
                          TftBundle2D t = construct_from_dagger(f.bundle, f.dagger, f.lambda);
                          auto& e = t.pairings[size_t(f.bundle.grading.index(label))].table[0][0];
                          for (auto& x : e) x *= factor;
                          return check_tft2d(t);
                      }});
    };
    pairing(even, "1", Scalar(0), "hilbert");
    pairing(even, "T", Scalar(-1), "mult-unitary");
    pairing(even, "T", Scalar(2), "mult-unitary");
    pairing(odd, "T", Scalar::I(), "hilbert");
    pairing(even, "c", Scalar(-1), "parity-unitary");
    pairing(spin2_tft(Scalar(1)), "c", Scalar(3), "loop-unitary");

    auto lambda = [&](const BundleFixture& f, const std::string& name, Vec l, const std::string& clause) {
        std::string what = name + " with lambda = (" + [&] {
            std::string s;
            for (const auto& x : l) s += (s.empty() ? "" : ", ") + x.str();
            return s;
        }() + ")";
        ms.push_back({what, clause, [f, l] {
                          TftBundle2D t = construct_from_dagger(f.bundle, f.dagger, f.lambda);
                          t.frobenius.lambda = l;
                          return check_tft2d(t);
                      }});
    };
    lambda(pin_tft(0, -1, -1), "pin x_T^2=-1", {Scalar::I()}, "frobenius-compat");
    lambda(even, "pin x_T^2=1", {Scalar(0)}, "frobenius-nondegenerate");
    lambda(pin_tft(0, 1, 1, true), "pin over Cl1", {Scalar(1), Scalar(1)}, "frobenius-even");
    lambda(odd, "pin odd x_T", {gi(0, 2)}, "frobenius-stellar");
    lambda(pin1_minus_tft(1), "pin1- odd x_T", {Scalar::I()}, "frobenius-compat");
    lambda(trivial_theory(quaternion_group()), "trivial q8", {gi(1, 1)}, "frobenius-stellar");

    size_t caught = 0;
    for (const auto& m : ms) {
        Report r;
        try {
            r = m.run();
        } catch (const std::exception& e) {
            o.require(false, m.what + ": threw " + e.what());
            continue;
        }
        bool hit = has_failing(r, m.clause);
        o.require(!r.ok(), m.what + ": not detected");
        o.require(hit, m.what + ": clause " + m.clause + " not named (failing: " + join(r.failing()) + ")");
        caught += hit;
    }
    o.require(ms.size() == 20, std::to_string(ms.size()) + " mutations, expected 20");
    o.info("2 trivial theories and 8 pin theories pass, positivity on 4; " + std::to_string(caught) + "/" +
           std::to_string(ms.size()) + " mutations caught with the named clause");
    return o;
}

// ---------------------------------------------------------------- 10

Outcome one_dimensional() {
    Outcome o;
    FermionicGroup pin = pin1_minus();
    int t = pin.index("T");
    auto two = reference::antilinear_rep_search(pin, t, 2);
    auto one = reference::antilinear_rep_search(pin, t, 1);
    o.require(two.solutions > 0, "no representation found on C^{0|2}");
    o.require(one.solutions == 0, "a representation was found on C^{0|1}");
    o.require(fermionic_rep_obstruction(pin, 0, 1).has_value(), "no obstruction reported on C^{0|1}");
    o.require(!fermionic_rep_obstruction(pin, 0, 2).has_value(), "obstruction reported on C^{0|2}");
    size_t converted = 0;
    for (const auto& fx : rep_fixtures()) {
        Report r = check_tft1d(convert_1d(fx.group, fx.space, fx.rho, fx.section));
        o.require(r.ok(), fx.name + ": converted theory fails (" + join(r.failing()) + ")");
        converted += r.ok();
    }
    o.info("C^{0|2}: " + std::to_string(two.solutions) + "/" + std::to_string(two.candidates) +
           " candidates are representations; C^{0|1}: 0/" + std::to_string(one.candidates) + "; " +
           std::to_string(converted) + " conversions pass");
    return o;
}

// ---------------------------------------------------------------- 11

Outcome adjunctions() {
    Outcome o;
    std::mt19937_64 rng(2024);
    size_t inv = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Bimodule m = random_semisimple_bimodule(rng);
        Adjunction adj = right_adjoint(m);
        o.require(adj.ok(), m.name + ": snake identities fail");
        bool v = is_invertible(m).has_value();
        o.require(v == reference::invertible_by_rank(m), m.name + ": invertibility disagrees with the rank oracle");
        inv += v;
    }
    o.require(inv > 0 && inv < 10, "sample does not exercise both verdicts");
    o.info("10 random bimodules, " + std::to_string(inv) + " invertible");
    return o;
}

struct Check {
    int id;
    const char* anchor;
    bool quick;
    Outcome (*run)();
};

const std::vector<Check>& checks() {
    static const std::vector<Check> all = {
        {1, "fermionic tensor of two Pin1- groups is Q8", true, fermionic_tensor_q8},
        {2, "ten-fold way, finite d=1 rows", true, tenfold_rows},
        {3, "parity extension of real Clifford algebras", true, clifford_parity_extension},
        {4, "extensions of the O2 skeletal model", true, extension_counts},
        {5, "Serre naturality against the pairing oracle", true, serre_oracle},
        {6, "Frobenius compatibility equals the Serre identity", false, ungraded_symmetric_equivalence},
        {7, "alpha coefficients of the constructed pairings", false, alpha_tables},
        {8, "stellar Morita verdicts", true, stellar_morita},
        {9, "end-to-end 2D checker with mutations", false, end_to_end_2d},
        {10, "1D theories and unitary fermionic representations", true, one_dimensional},
        {11, "right adjoints and invertibility", true, adjunctions},
    };
    return all;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "PASS";
        case Verdict::Fail:
            return "FAIL";
        case Verdict::Skip:
            return "SKIP";
    }
    return "?";
}

std::vector<std::string> suite_names() { return {"paper", "quick"}; }

ReproReport run_suite(const std::string& suite) {
    if (suite != "paper" && suite != "quick") throw UnsupportedInput("unknown suite \"" + suite + "\" (paper, quick)");
    ReproReport rep;
    for (const auto& c : checks()) {
        ReproRow row{c.id, c.anchor, Verdict::Skip, 0, "not in the quick suite"};
        if (suite == "paper" || c.quick) {
            auto t0 = std::chrono::steady_clock::now();
            Outcome o;
            try {
                o = c.run();
            } catch (const std::exception& e) {
                o.require(false, std::string("exception: ") + e.what());
            }
            row.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            row.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
            row.detail = join(o.notes);
        }
        rep.rows.push_back(row);
    }
    return rep;
}

std::string ReproReport::str(bool timing) const {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << verdict_name(r.verdict) << " " << r.id << " " << r.anchor;
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " [%.2fs]", r.elapsed);
            out << buf;
        }
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
    }
    return out.str();
}

Json ReproReport::to_json(bool timing) const {
    Json rows_json = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["id"] = r.id;
        j["anchor"] = r.anchor;
        j["verdict"] = verdict_name(r.verdict);
        if (timing) j["elapsed"] = r.elapsed;
        j["detail"] = r.detail;
        rows_json.push_back(j);
    }
    Json j;
    j["kind"] = "repro_report";
    j["rows"] = rows_json;
    return j;
}

bool ReproReport::ok() const {
    for (const auto& r : rows)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

}  // namespace ftft
