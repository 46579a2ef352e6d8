#include "doctest.h"
#include "ftft/errors.hpp"
#include "ftft/fgroup.hpp"

using namespace ftft;

TEST_CASE("check_fermionic_group") {
    CHECK(check_fermionic_group(pin1_minus()).ok());
    CHECK(check_fermionic_group(quaternion_group()).ok());

    // S3 with c a transposition: not central
    std::vector<std::string> l{"e", "r", "rr", "s", "sr", "srr"};
    auto idx = [](int rot, int refl) { return refl * 3 + rot; };
    FermionicGroup s3;
    s3.group.labels = l;
    s3.group.mult.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int ra = a % 3, fa = a / 3, rb = b % 3, fb = b / 3;
            int rot = ((fb ? -ra : ra) + rb + 3) % 3;
            s3.group.mult[a][b] = idx(rot, fa ^ fb);
        }
    s3.c = 3;
    s3.theta.assign(6, 0);
    auto rep = check_fermionic_group(s3);
    CHECK_FALSE(rep.ok("c-central"));
    CHECK(rep.ok("associativity"));

    FermionicGroup bad = pin1_plus();
    bad.theta = {0, 1, 0, 0};
    CHECK_FALSE(check_fermionic_group(bad).ok("theta-hom"));

    FermionicGroup broken = pin1_plus();
    broken.group.mult[1].pop_back();
    CHECK_THROWS_AS(check_fermionic_group(broken), StructuralError);
    CHECK_THROWS_AS(make_fermionic_group({"1", "c"}, {{"1", "c"}, {"c", "x"}}, "1", "c", {{"1", 0}, {"c", 0}}),
                    StructuralError);
}

TEST_CASE("opposite") {
    auto triv = z2c_times_z2(false);
    CHECK(opposite(triv).group.mult == triv.group.mult);

    auto op = opposite(pin1_minus());
    int T = op.index("T");
    CHECK(op.mul(T, T) == op.group.unit);
    CHECK(find_isomorphism(op, pin1_plus()).has_value());

    for (const auto& name : fixture_group_names()) {
        auto g = fixture_group(name);
        CHECK(opposite(opposite(g)).group.mult == g.group.mult);
        CHECK(check_fermionic_group(opposite(g)).ok());
    }
}

TEST_CASE("fermionic tensor: Pin1- (x) Pin1- is Q8") {
    auto g = pin1_minus();
    auto t = fermionic_tensor(g, g);
    CHECK(t.group.order() == 8);
    CHECK(check_fermionic_group(t.group).ok());
    auto q8 = quaternion_group();
    int f1 = t.group.index("T⊗1"), f2 = t.group.index("1⊗T");
    auto w = extend_from_generators(t.group, {f1, f2}, q8, {q8.index("i"), q8.index("j")});
    REQUIRE(w);
    CHECK(iso_witness_check(t.group, q8, *w));
    CHECK(t.group.mul(f1, f1) == t.group.c);
    CHECK(t.group.mul(f1, f2) == t.group.mul(t.group.c, t.group.mul(f2, f1)));
}

TEST_CASE("fermionic tensor unit and D4") {
    auto g = quaternion_group();
    auto t = fermionic_tensor(g, trivial_fermionic());
    std::vector<int> map(g.order());
    for (int k = 0; k < t.group.order(); ++k) map[t.pairs[k].first] = k;
    CHECK(iso_witness_check(g, t.group, map));

    auto d = fermionic_tensor(pin1_plus(), pin1_plus()).group;
    auto fp = fingerprint(d);
    CHECK(fp.order == 8);
    CHECK(fp.center_size == 2);
    CHECK(fp.order_histogram[4] == 2);  // D4 has exactly two elements of order 4
    int a = d.index("T⊗1"), b = d.index("1⊗T");
    CHECK(d.mul(a, a) == d.group.unit);
    CHECK(d.mul(b, b) == d.group.unit);
    CHECK(d.mul(a, b) == d.mul(d.c, d.mul(b, a)));

    FermionicGroup bos = z2c_times_z2(false);
    bos.c = bos.group.unit;
    CHECK_THROWS_AS(fermionic_tensor(pin1_plus(), bos), UnsupportedInput);
}

TEST_CASE("bosonic quotient") {
    auto q = bosonic_quotient(pin1_minus());
    CHECK(q.gb.order() == 2);
    int T = q.gb.index("T");
    CHECK(q.omega.values[T][T] == 1);
    CHECK(check_cocycle2(q.gb.group, q.omega));

    auto s = bosonic_quotient(z2c_times_z2(true));
    for (const auto& row : s.omega.values)
        for (int v : row) CHECK(v == 0);

    auto qq = bosonic_quotient(quaternion_group());
    CHECK(qq.gb.order() == 4);
    CHECK(check_cocycle2(qq.gb.group, qq.omega));
    CHECK_FALSE(is_coboundary2(qq.gb.group, qq.omega));

    FermionicGroup bos = trivial_fermionic();
    bos.c = 0;
    CHECK_THROWS_AS(bosonic_quotient(bos), UnsupportedInput);
}

TEST_CASE("spacetime group in d=1") {
    CHECK(find_isomorphism(spacetime_group_1d(pin1_minus()).h1, pin1_plus()));
    CHECK(find_isomorphism(spacetime_group_1d(pin1_plus()).h1, pin1_minus()));
    auto split = z2c_times_z2(false);
    CHECK(spacetime_group_1d(split).h1.group.mult == split.group.mult);
}

TEST_CASE("iso_witness_check") {
    auto q8 = quaternion_group();
    std::vector<int> id(8);
    for (int k = 0; k < 8; ++k) id[k] = k;
    CHECK(iso_witness_check(q8, q8, id));
    auto swap = extend_from_generators(q8, {q8.index("i"), q8.index("j")}, q8, {q8.index("j"), q8.index("i")});
    REQUIRE(swap);
    CHECK((*swap)[q8.index("k")] == q8.index("-k"));
    CHECK(iso_witness_check(q8, q8, *swap));

    // every bijection Pin1+ -> Pin1- fails
    std::vector<int> perm{0, 1, 2, 3};
    int good = 0;
    do good += iso_witness_check(pin1_plus(), pin1_minus(), perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(good == 0);
}
