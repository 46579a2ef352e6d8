#include "doctest.h"
#include "ftft/errors.hpp"
#include "ftft/frob.hpp"

using namespace ftft;

namespace {

FrobeniusStructure frob(const AlgPtr& a, Vec lambda) { return {a, std::move(lambda)}; }

// (3 + 4i) / 5
Scalar unit_phase() { return Scalar(mpq_class(3, 5), mpq_class(4, 5)); }

TftBundle2D build(const BundleFixture& f) { return construct_from_dagger(f.bundle, f.dagger, f.lambda); }

std::vector<std::pair<std::string, BundleFixture>> all_bundles() {
    std::vector<std::pair<std::string, BundleFixture>> out;
    out.push_back({"trivial pin1+", trivial_theory(pin1_plus())});
    out.push_back({"trivial q8", trivial_theory(quaternion_group())});
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1})
            for (int t : {1, -1})
                for (bool cl : {false, true})
                    out.push_back({"pin p=" + std::to_string(p) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                                       (cl ? " cl1" : ""),
                                   pin_tft(p, s, t, cl)});
    out.push_back({"pin1- even", pin1_minus_tft(0)});
    out.push_back({"pin1- odd", pin1_minus_tft(1)});
    out.push_back({"spin2", spin2_tft(Scalar(1))});
    out.push_back({"su2", spin2_tft(Scalar(-1), false, 2)});
    out.push_back({"pin2-", pin2_minus_tft(unit_phase())});
    return out;
}

FermionicGroup bosonic_z2() {
    return make_fermionic_group({"1", "T"}, {{"1", "T"}, {"T", "1"}}, "1", "1", {{"1", 0}, {"T", 1}});
}

}  // namespace

TEST_CASE("Frobenius structures") {
    auto c = share(ground_field(Field::C));
    CHECK(check_frobenius(frob(c, {Scalar(1)}), FrobMode::Ungraded).ok());
    CHECK(check_frobenius(frob(c, {Scalar(1)}), FrobMode::BosonicGraded).ok());
    CHECK_FALSE(check_frobenius(frob(c, {Scalar(0)}), FrobMode::Ungraded).ok("nondegenerate"));

    // Cl_1: graded symmetry forces lambda(1) = lambda(e^2) = -lambda(e^2)
    auto cl1 = share(complex_clifford(1));
    for (Scalar l : {Scalar(0), Scalar(1), Scalar::I(), Scalar(-3, 2)}) {
        Report r = check_frobenius(frob(cl1, {l, Scalar(0)}), FrobMode::BosonicGraded);
        CHECK_FALSE(r.ok());
        CHECK(r.ok("even"));
    }
    CHECK(check_frobenius(frob(cl1, {Scalar(1), Scalar(0)}), FrobMode::Ungraded).ok());
    CHECK_FALSE(check_frobenius(frob(cl1, {Scalar(1), Scalar(1)}), FrobMode::Ungraded).ok("even"));

    auto m2 = share(matrix_superalgebra(2, 0, Field::C));
    Vec tr{Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    CHECK(check_frobenius(frob(m2, tr), FrobMode::Ungraded).ok());
    Vec skew{Scalar(0), Scalar(1), Scalar(0), Scalar(0)};
    CHECK_FALSE(check_frobenius(frob(m2, skew), FrobMode::Ungraded).ok());
}

TEST_CASE("graded algebra bundles") {
    for (const auto& [name, f] : all_bundles()) {
        CAPTURE(name);
        CHECK(check_graded_bundle(f.bundle).ok());
    }
    auto trivial = trivial_theory(quaternion_group());
    CHECK(trivial.bundle.ambient->dim() == 16);

    // x_T even with x_T^2 = -1: two quaternion blocks
    auto h = pin_tft(0, -1, -1);
    CHECK(fingerprint(*h.bundle.ambient) == fingerprint(direct_sum(quaternions(), quaternions())));
    auto m = pin_tft(0, 1, 1);
    CHECK_FALSE(fingerprint(*m.bundle.ambient) == fingerprint(*h.bundle.ambient));

    // loop element anticommuting with the odd generator of Cl_1
    Report spin = check_graded_bundle(spin2_tft(Scalar(1), true).bundle);
    CHECK_FALSE(spin.ok("loop-centrality"));
    CHECK(spin.ok("strong-grading"));

    // Pin_2^-: the loop is inverted by T
    auto pin2 = pin2_minus_tft(unit_phase());
    auto bad = pin2;
    bad.bundle.loops[0].action = {1, 1, 1, 1};
    CHECK(check_graded_bundle(pin2.bundle).ok());
    CHECK_FALSE(check_graded_bundle(bad.bundle).ok("loop-conjugation"));

    auto su2 = spin2_tft(Scalar(-1), false, 2);
    CHECK(check_graded_bundle(su2.bundle).ok("loop-order"));
    auto wrong_order = spin2_tft(Scalar(1), false, 2);
    wrong_order.bundle.loops[0].element = bundle_element(wrong_order.spec, wrong_order.bundle.grading.c,
                                                         Vec{Scalar::I()});
    CHECK_FALSE(check_graded_bundle(wrong_order.bundle).ok("loop-order"));
}

TEST_CASE("bundle clause failures") {
    auto f = pin_tft(1, 1, 1);
    {
        auto b = f.bundle;
        b.components[1].pop_back();
        CHECK_FALSE(check_graded_bundle(b).ok("decomposition"));
    }
    {
        auto b = f.bundle;
        b.i = b.ambient->unit();
        CHECK_FALSE(check_graded_bundle(b).ok("i-central"));
    }
    {
        auto b = f.bundle;
        b.parity = b.ambient->unit();
        CHECK_FALSE(check_graded_bundle(b).ok("fermion-parity"));
    }
    {
        // i commuting with x_T
        auto spec = f.spec;
        spec.grading.theta.assign(4, 0);
        auto b = build_bundle(spec);
        b.grading = f.bundle.grading;
        CHECK_FALSE(check_graded_bundle(b).ok("i-commutation"));
    }
    {
        // x_T x_T = 0 breaks strong grading
        auto spec = f.spec;
        for (auto& row : spec.omega)
            for (size_t y = 0; y < row.size(); ++y) row[y] = Vec{Scalar(0)};
        for (size_t x = 0; x < 4; ++x)
            if (!(x & 1)) {
                for (size_t y = 0; y < 4; ++y)
                    if (!(y & 1)) spec.omega[x][y] = Vec{Scalar(1)};
            }
        Report r = check_graded_bundle(build_bundle(spec));
        CHECK_FALSE(r.ok("strong-grading"));
    }
}

TEST_CASE("complex view") {
    auto f = pin_tft(0, 1, 1, true);
    ComplexView v = complex_view(f.bundle);
    CHECK(v.a1->dim() == 2);
    CHECK(fingerprint(*v.a1) == fingerprint(complex_clifford(1)));
    for (int g = 0; g < 4; ++g) {
        CHECK(check_bimodule(v.modules[size_t(g)]).ok());
        for (const auto& e : v.basis[size_t(g)]) CHECK(v.to_real(g, v.to_complex(g, e)) == e);
    }
    CHECK(v.modules[1].right == v.a1_conj);
}

TEST_CASE("Frobenius compatibility and Serre naturality") {
    for (const auto& [name, f] : all_bundles()) {
        CAPTURE(name);
        ComplexView v = complex_view(f.bundle);
        FrobeniusStructure lam{v.a1, f.lambda};
        Report compat = check_frobenius_compat(f.bundle, v, lam);
        CHECK(compat.ok());
        Report serre = serre_frobenius_check(f.bundle, v, lam);
        CHECK(serre.ok());
        CHECK(serre.flags["agrees-with-compat"]);
    }
    // lambda(x_T x_T) = i
    auto f = pin_tft(0, -1, -1);
    ComplexView v = complex_view(f.bundle);
    FrobeniusStructure bad{v.a1, {Scalar::I()}};
    CHECK(check_frobenius(bad, FrobMode::Ungraded).ok());
    CHECK_FALSE(check_frobenius_compat(f.bundle, v, bad).ok());
    Report serre = serre_frobenius_check(f.bundle, v, bad);
    CHECK_FALSE(serre.ok("serre-identity"));
    CHECK(serre.flags["agrees-with-compat"]);
}

TEST_CASE("bosonic mode carries the Koszul sign") {
    auto g = bosonic_z2();
    auto f = trivial_theory(g);
    CHECK(f.bundle.bosonic());
    auto t = build(f);
    CHECK(check_tft2d(t).ok());
    // odd x_T in bosonic mode: lambda(x_T x_T) = -lambda(x_T x_T) unless the sign is absorbed
    auto spec = f.spec;
    spec.parity = {0, 1};
    auto b = build_bundle(spec);
    ComplexView v = complex_view(b);
    FrobeniusStructure lam{v.a1, {Scalar(1)}};
    CHECK_FALSE(check_frobenius_compat(b, v, lam).ok());
    Report serre = serre_frobenius_check(b, v, lam);
    CHECK_FALSE(serre.ok());
    CHECK(serre.flags["agrees-with-compat"]);
}

TEST_CASE("2D theories from real star structures") {
    for (const auto& [name, f] : all_bundles()) {
        CAPTURE(name);
        CHECK(check_ambient_dagger(f.bundle, f.dagger).ok());
        TftBundle2D t = build(f);
        Report r = check_tft2d(t);
        CHECK(r.ok());
    }
    // positivity exactly when the two signs agree
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1})
            for (int t : {1, -1}) {
                CAPTURE(p);
                CAPTURE(s);
                CAPTURE(t);
                Report r = check_tft2d(build(pin_tft(p, s, t)));
                CHECK(r.ok());
                CHECK(r.flags["positive"] == (s == t));
            }
    CHECK(check_tft2d(build(trivial_theory(quaternion_group()))).flags["positive"]);
}

TEST_CASE("construction preconditions") {
    auto f = pin_tft(0, 1, 1);
    Matrix d = f.dagger.scaled(Scalar(2));
    CHECK_FALSE(check_ambient_dagger(f.bundle, d).ok("dagger-involutive"));
    CHECK_THROWS_AS(construct_from_dagger(f.bundle, d, f.lambda), PreconditionError);
    CHECK_THROWS_AS(construct_from_dagger(f.bundle, f.dagger, {Scalar::I()}), PreconditionError);
    try {
        construct_from_dagger(f.bundle, f.dagger, {Scalar::I()});
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("frobenius-stellar") != std::string::npos);
    }
}

TEST_CASE("construction round trip") {
    for (const auto& [name, f] : all_bundles()) {
        CAPTURE(name);
        TftBundle2D t = build(f);
        REQUIRE(t.dagger);
        TftBundle2D again = construct_from_dagger(t.bundle, *t.dagger, t.frobenius.lambda);
        REQUIRE(again.pairings.size() == t.pairings.size());
        for (size_t g = 0; g < t.pairings.size(); ++g) CHECK(again.pairings[g].table == t.pairings[g].table);
    }
}

TEST_CASE("Pin1- theory with odd x_T") {
    auto f = pin1_minus_tft(1);
    TftBundle2D t = build(f);
    CHECK(check_tft2d(t).ok());
    // lambda(a_T b_T (-1)^F) = (-1)^{|a_T|} conj(lambda(b_T a_T (-1)^F))
    const Superalgebra& A = *f.bundle.ambient;
    ComplexView v = complex_view(f.bundle);
    const Vec& x = f.bundle.parity;
    int T = 1, Ti = 3;
    for (const auto& a : v.basis[size_t(T)])
        for (const auto& b : v.basis[size_t(Ti)]) {
            Scalar lhs = t.frobenius(v.to_complex(0, A.mul(A.mul(a, b), x)));
            Scalar rhs = t.frobenius(v.to_complex(0, A.mul(A.mul(b, a), x))).conj();
            if (A.degree(a)) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    CHECK(A.degree(bundle_element(f.spec, T, Vec{Scalar(1)})) == 1);
}

TEST_CASE("loop elements are unitary") {
    for (auto f : {spin2_tft(Scalar(1)), spin2_tft(Scalar(-1), false, 2)}) {
        TftBundle2D t = build(f);
        CHECK(check_tft2d(t).ok("loop-unitary"));
        ComplexView v = complex_view(f.bundle);
        const Superalgebra& A = *f.bundle.ambient;
        const int c = f.bundle.grading.c;
        const Vec& a = f.bundle.loops[0].element;
        std::vector<Vec> cols;
        for (const auto& e : v.basis[0]) cols.push_back(v.to_complex(c, A.mul(e, a)));
        Matrix psi = Matrix::from_cols(cols, v.basis[size_t(c)].size());
        CHECK(is_unitary(psi, t.pairings[0], t.pairings[size_t(c)]));
    }
    // a_gamma = 2 x_c is not unitary
    auto f = spin2_tft(Scalar(2));
    Report r = check_tft2d(build(f));
    CHECK_FALSE(r.ok("loop-unitary"));
}

TEST_CASE("alpha coefficient oracle") {
    std::vector<AlphaFixture> fx;
    for (auto f : {pin_tft(0, 1, 1, true), pin_tft(1, 1, 1, true), pin_tft(1, -1, -1, true), pin1_minus_tft(1)})
        fx.push_back({f.bundle, f.dagger});
    auto out = alpha_oracle(fx);
    auto has = [&](const AlphaTable& a) {
        for (const auto& s : out)
            if (s.table == a) return true;
        return false;
    };
    AlphaTable plus = standard_alpha(1), minus = standard_alpha(-1);
    CHECK(has(plus));
    CHECK(has(minus));
    for (const auto& s : out) {
        CHECK(s.table[0] == Scalar(1));
        CHECK(s.table[2] == Scalar(1));
        CHECK(s.table[1] == s.table[3]);
        CHECK(s.table[1] == (s.i_sign > 0 ? Scalar::I() : -Scalar::I()));
    }
    // the theta = 1 block also survives with its overall sign flipped
    CHECK(out.size() == 4);
    AlphaTable flipped = plus;
    for (int k = 4; k < 8; ++k) flipped[size_t(k)] = -flipped[size_t(k)];
    CHECK(has(flipped));

    // theta = 0 fixtures alone give the same theta = 0 cells
    std::vector<AlphaFixture> even_only;
    for (auto f : {spin2_tft(Scalar(1), true), trivial_theory(trivial_fermionic())}) {
        f.bundle.loops.clear();
        even_only.push_back({f.bundle, f.dagger});
    }
    auto sub = alpha_oracle(even_only);
    for (const auto& s : sub) CHECK(s.table[1] == (s.i_sign > 0 ? Scalar::I() : -Scalar::I()));
}

TEST_CASE("1D theories in bilinear mode") {
    // H = Z/2 acting by reflection on C with a symmetric form
    auto z2 = make_fermionic_group({"1", "T"}, {{"1", "T"}, {"T", "1"}}, "1", "1", {{"1", 0}, {"T", 1}});
    TftBundle1D t{z2, 1, 0, {Matrix::identity(1), Matrix(1, 1)}, {Matrix(1, 1), Matrix::identity(1)}};
    CHECK(check_tft1d(t).ok());
    auto skew = t;
    skew.forms[1] = Matrix(1, 1);
    CHECK_FALSE(check_tft1d(skew).ok("nondegenerate"));

    for (const auto& fx : rep_fixtures()) {
        CAPTURE(fx.name);
        REQUIRE(check_unitary_fermionic_rep(fx.group, fx.space, fx.rho).ok());
        TftBundle1D b = convert_1d(fx.group, fx.space, fx.rho, fx.section);
        Report r = check_tft1d(b);
        CHECK(r.ok());
        CHECK(rep_from_1d(b, fx.group, fx.space) == fx.rho);
        // any time-reversing section gives the same forms
        for (int s = 0; s < fx.group.order(); ++s)
            if (fx.group.theta[size_t(s)]) CHECK(convert_1d(fx.group, fx.space, fx.rho, s).forms == b.forms);
    }
}

TEST_CASE("1D condition witnesses") {
    auto fx = rep_fixtures()[0];
    TftBundle1D b = convert_1d(fx.group, fx.space, fx.rho, fx.section);
    int t3 = fx.group.index("cT");
    b.forms[size_t(t3)](0, 1) += Scalar(1);
    Report r = check_tft1d(b);
    CHECK_FALSE(r.ok("cond1"));
    bool named = false;
    for (const auto& c : r.clauses())
        if (c.id == "cond1")
            for (const auto& n : c.notes) named = named || n.find("v=") != std::string::npos;
    CHECK(named);
    auto odd = b;
    odd.forms[size_t(fx.section)](0, 0) = Scalar(1);
    CHECK_FALSE(check_tft1d(odd).ok());
}

TEST_CASE("displayed third condition versus its derivation") {
    // abelian groups cannot tell R(g g') from R((g g')^-1) on these fixtures
    for (const auto& fx : rep_fixtures()) {
        CAPTURE(fx.name);
        Report r = check_tft1d(convert_1d(fx.group, fx.space, fx.rho, fx.section));
        CHECK(r.flags["cond3-displayed"] == (fx.name != "q8-2|2"));
    }
}
