// Randomised invariants. Generators are hand-rolled on a seeded mt19937_64 so
// every run sees the same cases.
#include <algorithm>
#include <random>

#include "doctest.h"
#include "ftft/catalog.hpp"
#include "ftft/frob.hpp"
#include "ftft/io.hpp"
#include "oracles.hpp"

using namespace ftft;

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

mpq_class small_rational(Rng& rng) { return mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 4)); }

Scalar scalar(Rng& rng) {
    Scalar x(small_rational(rng), small_rational(rng));
    x.re.canonicalize();
    x.im.canonicalize();
    return x;
}

Scalar nonzero_scalar(Rng& rng) {
    for (;;)
        if (Scalar x = scalar(rng); !x.is_zero()) return x;
}

// unit-modulus Gaussian rational from a small Pythagorean triple
Scalar unit_scalar(Rng& rng) {
    static const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {0, 1, 1}};
    const auto& t = triples[uniform(rng, 0, 4)];
    long a = t[0], b = t[1];
    if (uniform(rng, 0, 1)) std::swap(a, b);
    if (uniform(rng, 0, 1)) a = -a;
    if (uniform(rng, 0, 1)) b = -b;
    return Scalar(mpq_class(a, t[2]), mpq_class(b, t[2]));
}

Vec vec(Rng& rng, size_t n) {
    Vec v(n);
    for (auto& x : v) x = uniform(rng, 0, 2) ? scalar(rng) : Scalar(0);
    return v;
}

Matrix matrix(Rng& rng, size_t r, size_t c) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, 0, 2) ? scalar(rng) : Scalar(0);
    return m;
}

Superalgebra small_clifford(Rng& rng) {
    int p = uniform(rng, 0, 2), q = uniform(rng, 0, 3 - p);
    return clifford(p, q, uniform(rng, 0, 1) ? Field::R : Field::C);
}

}  // namespace

TEST_CASE("Q(i) is a field with an involution") {
    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        Scalar a = scalar(rng), b = scalar(rng), c = scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(Scalar(a.norm2()) == a * a.conj());
        CHECK(Scalar::parse(a.str()) == a);
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    }
}

TEST_CASE("exact linear algebra") {
    Rng rng(2);
    for (int t = 0; t < 60; ++t) {
        size_t r = size_t(uniform(rng, 1, 5)), c = size_t(uniform(rng, 1, 5));
        Matrix a = matrix(rng, r, c);
        auto ker = kernel(a);
        CHECK(rank(a) + ker.size() == c);
        for (const auto& v : ker) CHECK(is_zero(a * v));
        Vec x = vec(rng, c);
        Vec b = a * x;
        auto y = solve(a, b);
        REQUIRE(y);
        CHECK(a * *y == b);
        if (r == c)
            if (auto inv = inverse(a)) CHECK((a * *inv).is_identity());

        // the echelon basis depends only on the span
        std::vector<Vec> rows;
        for (size_t i = 0; i < r; ++i) rows.push_back(a.row(i));
        RowSpace s1(c), s2(c);
        for (const auto& v : rows) s1.add(v);
        std::shuffle(rows.begin(), rows.end(), rng);
        for (const auto& v : rows) {
            Vec w = v;
            Scalar k = nonzero_scalar(rng);
            for (auto& e : w) e *= k;
            s2.add(w);
        }
        CHECK(s1.rows() == s2.rows());
    }
}

TEST_CASE("Clifford algebras and their constructions") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Superalgebra a = small_clifford(rng);
        CAPTURE(a.name);
        CHECK(check_superalgebra(a).ok());
        for (int k = 0; k < 5; ++k) {
            Vec x = vec(rng, a.dim()), y = vec(rng, a.dim()), z = vec(rng, a.dim());
            CHECK(a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z)));
            CHECK(a.mul(a.unit(), x) == x);
        }
        CHECK(same_algebra(opposite(opposite(a)), a));
        Superalgebra ext = parity_extension(a);
        CHECK(ext.dim() == 2 * a.dim());
        CHECK(check_superalgebra(ext).ok());
        Superalgebra b = small_clifford(rng);
        if (a.field() == b.field()) {
            Superalgebra ab = tensor(a, b);
            CHECK(ab.dim() == a.dim() * b.dim());
            CHECK(check_superalgebra(ab).ok());
        }
    }
}

TEST_CASE("fermionic tensor products and opposites") {
    Rng rng(4);
    const std::vector<std::string> names = {"trivial", "pin1-", "pin1+", "z2c-x-z2t", "z2c-x-z2"};
    for (int t = 0; t < 12; ++t) {
        FermionicGroup g = fixture_group(names[size_t(uniform(rng, 0, 4))]);
        FermionicGroup h = fixture_group(names[size_t(uniform(rng, 0, 4))]);
        FermionicTensor gh = fermionic_tensor(g, h);
        CHECK(check_fermionic_group(gh.group).ok());
        CHECK(gh.group.order() == g.order() * h.order() / 2);
        auto w = find_isomorphism(opposite(opposite(g)), g);
        REQUIRE(w);
        CHECK(iso_witness_check(opposite(opposite(g)), g, *w));
        if (gh.group.order() <= 8) {
            auto swap = find_isomorphism(gh.group, fermionic_tensor(h, g).group);
            CHECK(swap.has_value());
        }
    }
}

TEST_CASE("adjunctions, invertibility and Serre naturality on random bimodules") {
    Rng rng(5);
    for (int t = 0; t < 12; ++t) {
        Bimodule m = random_semisimple_bimodule(rng);
        CAPTURE(m.name);
        CHECK(check_bimodule(m).ok());
        CHECK(right_adjoint(m).ok());
        auto ctx = is_invertible(m);
        CHECK(ctx.has_value() == oracle::invertible_by_rank(m));
        if (!ctx) continue;
        CHECK(check_morita_context(*ctx).ok());
        auto sn = serre_naturality(*ctx);
        auto ref = oracle::serre_by_pairing(*ctx, sn.src, sn.dst);
        REQUIRE(ref);
        CHECK(*ref == sn.map.matrix);
    }
}

TEST_CASE("Frobenius compatibility and the Serre identity agree") {
    Rng rng(6);
    std::vector<BundleFixture> fx = {trivial_theory(quaternion_group()), trivial_theory(z2c_times_z2(true)),
                                     pin1_minus_tft(0), pin1_minus_tft(1)};
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1}) fx.push_back(pin_tft(p, s, s, p == 1));
    size_t pass = 0, fail = 0;
    for (const auto& f : fx) {
        ComplexView v = complex_view(f.bundle);
        for (int t = 0; t < 4; ++t) {
            // alternate between a rescaled lambda and a random one
            Vec lambda = t % 2 ? vec(rng, v.a1->dim()) : f.lambda;
            if (t % 2 == 0)
                for (auto& x : lambda) x *= (t == 0 ? unit_scalar(rng) : nonzero_scalar(rng));
            FrobeniusStructure lam{v.a1, lambda};
            bool a = check_frobenius_compat(f.bundle, v, lam).ok();
            Report s = serre_frobenius_check(f.bundle, v, lam);
            CHECK(a == s.ok());
            CHECK(s.flags["agrees-with-compat"]);
            (a ? pass : fail)++;
        }
    }
    CHECK(pass > 0);
    CHECK(fail > 0);
}

TEST_CASE("star and dagger conventions are inverse") {
    std::vector<StarAlgebra> stars = {clifford1_star(1), clifford1_star(-1), matrix_adjoint_star(2),
                                      conjugation_star(share(ground_field(Field::C)))};
    for (const auto& s : stars) {
        CHECK(check_star(s).ok());
        Matrix d = dagger_from_star(*s.alg, s.star);
        CHECK(star_from_dagger(*s.alg, d) == s.star);
        CHECK(check_star(conjugate_star(conjugate_star(s))).ok());
    }
}

TEST_CASE("constructed theories pass their checker") {
    Rng rng(7);
    std::vector<BundleFixture> fx = {trivial_theory(quaternion_group()), pin1_minus_tft(1), spin2_tft(Scalar(1)),
                                     pin2_minus_tft(Scalar(mpq_class(3, 5), mpq_class(4, 5)))};
    for (int p = 0; p < 2; ++p)
        for (int s : {1, -1})
            for (int d : {1, -1}) fx.push_back(pin_tft(p, s, d));
    for (int t = 0; t < 3; ++t) fx.push_back(spin2_tft(unit_scalar(rng)));
    for (const auto& f : fx) {
        TftBundle2D t = construct_from_dagger(f.bundle, f.dagger, f.lambda);
        CHECK(check_tft2d(t).ok());
        CHECK(check_tft2d_data(f.bundle, f.dagger, f.lambda).ok());
        // a real positive rescaling of lambda keeps every clause
        Vec scaled = f.lambda;
        Scalar k(uniform(rng, 1, 9), uniform(rng, 1, 9));
        for (auto& x : scaled) x *= k;
        CHECK(check_tft2d_data(f.bundle, f.dagger, scaled).ok());
    }
}

TEST_CASE("random catalog fixtures round-trip") {
    Rng rng(8);
    auto pick = [&](std::vector<std::string> v) { return v[size_t(uniform(rng, 0, int(v.size()) - 1))]; };
    for (int t = 0; t < 40; ++t) {
        std::pair<std::string, FixtureParams> f;
        switch (uniform(rng, 0, 5)) {
            case 0: {
                int p = uniform(rng, 0, 2), q = uniform(rng, 0, 3 - p);
                f = {"clifford", {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"field", pick({"R", "C"})}}};
                break;
            }
            case 1: {
                int m = uniform(rng, 0, 2), n = uniform(rng, m == 0 ? 1 : 0, 2);
                f = {"matrix", {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"field", pick({"R", "C"})}}};
                break;
            }
            case 2:
                f = {"stellar-complex", {{"a", unit_scalar(rng).str()}, {"shifted", pick({"0", "1"})}}};
                break;
            case 3:
                f = {"spin2-tft", {{"w", unit_scalar(rng).str()}}};
                break;
            case 4:
                f = {"pin2-minus-tft", {{"w", unit_scalar(rng).str()}}};
                break;
            default:
                f = {"pin-minus-tft",
                     {{"xt-parity", pick({"0", "1"})}, {"xt-square", pick({"1", "-1"})}, {"dagger-sign", pick({"1", "-1"})}}};
        }
        std::string label = f.first;
        for (const auto& [k, v] : f.second) label += " --" + k + " " + v;
        CAPTURE(label);
        Document d = make_fixture(f.first, f.second);
        std::string text = dump(to_json(d));
        CHECK(dump(to_json(parse_document(text))) == text);
        Report r = check_document(d);
        CHECK_MESSAGE(r.ok(), r.str());
    }
}

TEST_CASE("extension classes are recovered from their data") {
    for (const auto& name : fixture_two_group_names()) {
        CAPTURE(name);
        SkeletalTwoGroup g = fixture_two_group(name);
        for (const auto& c : enumerate_extension_maps(g)) {
            auto cls = classify_extension(g, c.data);
            REQUIRE(cls);
            CHECK(*cls == c.xi_class);
            CHECK(check_map_data(g, to_map_data(g, c.data), point_mod_z2()).ok());
        }
    }
}

TEST_CASE("stellar structures on C with unit-modulus a are all equivalent") {
    Rng rng(9);
    for (int t = 0; t < 6; ++t) {
        Scalar a = unit_scalar(rng), b = unit_scalar(rng);
        CAPTURE(a.str());
        CAPTURE(b.str());
        auto r = morita_search_stellar(stellar_complex(a), stellar_complex(b));
        CHECK(r.verdict == MoritaVerdict::Witness);
        REQUIRE(r.witness);
        CHECK(check_stellar_bimodule(*r.witness).ok());
        CHECK(morita_search_stellar(stellar_complex(a), stellar_complex(b, true)).verdict == MoritaVerdict::None);
    }
}
