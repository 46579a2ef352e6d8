#include "doctest.h"
#include "ftft/errors.hpp"
#include "ftft/twogroup.hpp"

using namespace ftft;

namespace {
ExtensionData ext(std::vector<int> gamma, int n, std::vector<std::array<int, 3>> ones = {}) {
    ExtensionData e{std::move(gamma), std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
    for (auto [a, b, v] : ones) e.xi[a][b] = v;
    return e;
}
}  // namespace

TEST_CASE("three-cocycle check") {
    CHECK(check_three_cocycle(fixture_two_group("o2")).ok());
    CHECK(check_three_cocycle(fixture_two_group("pin2-base")).ok());
    auto bad = fixture_two_group("pin2-base");
    // every value of k(r,r,r) is a cocycle; perturb a value at a unit slot instead
    bad.kval(1, 0, 1) = {1};
    auto r = check_three_cocycle(bad);
    CHECK_FALSE(r.ok("cocycle"));
    CHECK_FALSE(r.ok("normalized"));
    bool saw = false;
    for (const auto& c : r.clauses())
        if (c.id == "cocycle")
            for (const auto& n : c.notes) saw |= n.find("defect") != std::string::npos;
    CHECK(saw);
    for (const auto& name : fixture_two_group_names()) CHECK(check_three_cocycle(fixture_two_group(name)).ok());
}

TEST_CASE("map data into *//Z2") {
    auto o2 = fixture_two_group("o2");
    auto tgt = point_mod_z2();
    CHECK(check_map_data(o2, to_map_data(o2, ext({1}, 2)), tgt).ok());
    CHECK(check_map_data(o2, to_map_data(o2, ext({0}, 2, {{1, 1, 1}})), tgt).ok());
    // a non-cocycle Xi fails the pentagon
    auto e = ext({0}, 2);
    e.xi[1][0] = 1;
    CHECK_FALSE(check_map_data(o2, to_map_data(o2, e), tgt).ok("Xi-normalized"));

    auto swap = fixture_two_group("z2-swap");
    auto rep = check_map_data(swap, to_map_data(swap, ext({1, 0}, 2)), tgt);
    CHECK_FALSE(rep.ok("F1-equivariant"));
    CHECK_FALSE(gamma_admissible(swap, {1, 0}));
    CHECK(gamma_admissible(swap, {1, 1}));
}

TEST_CASE("extension enumeration") {
    auto o2 = enumerate_extension_maps(fixture_two_group("o2"));
    CHECK(o2.size() == 4);
    CHECK(enumerate_extension_maps(fixture_two_group("point")).size() == 1);
    auto bz = enumerate_extension_maps(fixture_two_group("bz"));
    REQUIRE(bz.size() == 2);
    CHECK(bz[0].gamma == std::vector<int>{0});
    CHECK(bz[1].gamma == std::vector<int>{1});
    // on the twisted base only Gamma = 0 survives
    auto pin = enumerate_extension_maps(fixture_two_group("pin2-base"));
    CHECK(pin.size() == 2);
    for (const auto& c : pin) CHECK(c.gamma == std::vector<int>{0});
    CHECK_FALSE(gamma_admissible(fixture_two_group("pin2-base"), {1}));

    for (const auto& c : o2) {
        auto cls = classify_extension(fixture_two_group("o2"), c.data);
        REQUIRE(cls);
        CHECK(*cls == c.xi_class);
    }
}

TEST_CASE("finite groups have Gamma = 0 and |H^2| classes") {
    auto q = bosonic_quotient(quaternion_group());
    auto tg = discrete_two_group(q.gb.group);
    auto classes = enumerate_extension_maps(tg);
    CHECK(classes.size() == 8);  // H^2(Z2 x Z2; Z2) = (Z2)^3
    auto cls = classify_extension(tg, ExtensionData{{}, q.omega.values});
    REQUIRE(cls);
    CHECK(*cls != 0);
    auto split = bosonic_quotient(z2c_times_z2(true));
    CHECK(classify_extension(discrete_two_group(split.gb.group), ExtensionData{{}, split.omega.values}) == size_t(0));
}

TEST_CASE("H^2 by GF(2) algebra agrees with brute force") {
    for (const auto& name : {"pin1-", "q8", "d4"}) {
        auto gb = bosonic_quotient(fixture_group(name)).gb.group;
        auto h = h2_z2(gb);
        auto s = brute_h2_serial(gb);
        auto p = brute_h2_parallel(gb);
        CHECK(s.classes == (size_t(1) << h.dim()));
        CHECK(p.classes == s.classes);
        CHECK(p.cocycles == s.cocycles);
    }
}

TEST_CASE("fermionically skeletal models") {
    auto bz = fixture_two_group("bz");
    auto spin2 = build_ferm_skeletal(bz, ext({1}, 1));
    CHECK(spin2.object_count() == 2);
    CHECK(spin2.in_hom(0, 1, {1}));   // eta : 1 -> c
    CHECK_FALSE(spin2.in_hom(0, 0, {1}));
    CHECK(spin2.object_label(1) == "c");

    auto split = build_ferm_skeletal(fixture_two_group("o2"), ext({0}, 2));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int t = split.tensor(a, b);
            CHECK(t / 2 == split.base.pi0.mul(a / 2, b / 2));
            CHECK(t % 2 == ((a + b) % 2));
        }

    auto pin = build_ferm_skeletal(fixture_two_group("o2"), ext({0}, 2, {{1, 1, 1}}));
    CHECK(pin.object_count() == 4);
    CHECK(pin.tensor(2, 2) == 1);  // r (x) r = c
    CHECK_FALSE(pin.hom_nonempty(0, 1));
    CHECK(pin.hom_nonempty(2, 2));
    CHECK(check_ferm_model(pin).ok());

    CHECK_THROWS_AS(build_ferm_skeletal(fixture_two_group("pin2-base"), ext({1}, 2)), PreconditionError);
}

TEST_CASE("semidirect products") {
    FiniteGroup z2;
    z2.labels = {"1", "c"};
    z2.mult = {{0, 1}, {1, 0}};
    auto o2 = fixture_two_group("o2");
    for (const auto& cls : enumerate_extension_maps(o2)) {
        auto sd = semidirect_product(z2, o2, action_from_extension(o2, cls.data));
        auto fm = build_ferm_skeletal(o2, cls.data);
        CHECK(check_semidirect(sd).ok());
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                CHECK(sd.tensor(a, b) == fm.tensor(a, b));
                CHECK(sd.hom_nonempty(a, b) == fm.hom_nonempty(a, b));
            }
    }
    // trivial action gives the direct product
    auto pt = fixture_two_group("o2");
    auto triv = semidirect_product(z2, pt, action_from_extension(pt, ext({0}, 2)));
    CHECK(triv.skeletal());
    auto sk = triv.skeletalize();
    CHECK(check_three_cocycle(sk).ok());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(sk.pi0.mul(a, b) == ((a / 2) ^ (b / 2)) * 2 + ((a % 2) ^ (b % 2)));

    // Z2^c x| BZ2^F is contractible; with Z2^R it has two components
    auto bz2 = fixture_two_group("bz2");
    auto c1 = semidirect_product(z2, bz2, action_from_extension(bz2, ext({1}, 1)));
    CHECK(check_semidirect(c1).ok());
    CHECK(is_contractible(c1));
    auto rf = fixture_two_group("spin1-rz2f");
    auto c2 = semidirect_product(z2, rf, action_from_extension(rf, ext({1}, 2)));
    CHECK(check_semidirect(c2).ok());
    CHECK_FALSE(is_contractible(c2));
    CHECK(c2.hom_size(0, 1) == 1);
    CHECK(c2.hom_size(0, 2) == 0);
    // Spin2 = Z2^c x| BZ is not contractible: Hom(1, c) is infinite
    auto bz = fixture_two_group("bz");
    auto s2 = semidirect_product(z2, bz, action_from_extension(bz, ext({1}, 1)));
    CHECK(s2.hom_size(0, 1) == -1);
    CHECK_THROWS_AS(s2.skeletalize(), UnsupportedInput);
}

TEST_CASE("Spin2 action data") {
    auto o2 = fixture_two_group("o2");
    auto d = spin2_action_data(o2, ext({1}, 2));
    CHECK(d.theta == std::vector<int>{0, 1});
    CHECK(d.xi_op[1][1] == 1);
    auto bz = fixture_two_group("bz");
    CHECK(spin2_action_data(bz, ext({1}, 1)).theta == std::vector<int>{0});

    auto q = bosonic_quotient(pin1_minus());
    auto tg = discrete_two_group(q.gb.group);
    auto op = spin2_action_data(tg, ExtensionData{{}, q.omega.values}, q.gb.theta);
    auto qop = bosonic_quotient(opposite(pin1_minus()));
    CHECK(op.xi_op == qop.omega.values);
}
