#include "doctest.h"
#include "ftft/errors.hpp"
#include "ftft/reference.hpp"
#include "ftft/superalgebra.hpp"

using namespace ftft;

using ftft::reference::parity_extension_witness;

TEST_CASE("constructions are superalgebras") {
    std::vector<Superalgebra> all = {ground_field(Field::C), ground_field(Field::R), clifford(2, 1, Field::R),
                                     complex_clifford(3), matrix_superalgebra(1, 1, Field::C),
                                     matrix_superalgebra(2, 1, Field::R), quaternions(), dual_numbers(),
                                     complex_numbers_real()};
    for (const auto& a : all) {
        CHECK(check_superalgebra(a).ok());
        CHECK(check_superalgebra(opposite(a)).ok());
        CHECK(check_superalgebra(parity_extension(a)).ok());
    }
    CHECK(check_superalgebra(tensor(clifford(1, 0, Field::C), matrix_superalgebra(1, 1, Field::C))).ok());
    CHECK(check_superalgebra(conjugate(complex_clifford(2))).ok());
    CHECK_THROWS_AS(conjugate(quaternions()), PreconditionError);
    CHECK_THROWS_AS(clifford(4, 2, Field::R), UnsupportedInput);
}

TEST_CASE("broken algebras are caught") {
    Superalgebra a = clifford(1, 0, Field::R);
    a.set(1, 1, 1, Scalar(1));  // e^2 = 1 + e puts an odd term in an even product
    auto r = check_superalgebra(a);
    CHECK_FALSE(r.ok("grading"));
    Superalgebra b = clifford(1, 0, Field::R);
    b.set(1, 1, 0, Scalar::I());
    CHECK_FALSE(check_superalgebra(b).ok("reality"));
    Superalgebra c = dual_numbers();
    c.set_unit({Scalar(2), Scalar()});
    CHECK_FALSE(check_superalgebra(c).ok("unit"));
}

TEST_CASE("Koszul signs") {
    // Cl(1,0) (x) Cl(1,0) = Cl(2,0) via e (x) 1 and 1 (x) e
    auto t = tensor(clifford(1, 0, Field::R), clifford(1, 0, Field::R));
    auto m = clifford_map(2, 0, t, {t.basis(2), t.basis(1)});
    CHECK(iso_witness_check(clifford(2, 0, Field::R), t, m));
    // super opposite flips the Clifford signature
    auto op = opposite(clifford(1, 0, Field::R));
    CHECK(iso_witness_check(clifford(0, 1, Field::R), op, clifford_map(0, 1, op, {op.basis(1)})));
    CHECK(fingerprint(opposite(clifford(2, 1, Field::R))) == fingerprint(clifford(1, 2, Field::R)));
}

TEST_CASE("parity extension of real Clifford algebras") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(parity_extension_witness(p, q));
        }
}

TEST_CASE("parity automorphism is an algebra map") {
    auto a = share(clifford(1, 2, Field::R));
    CHECK(check_algebra_hom(parity_automorphism(a)).ok());
    CHECK(check_algebra_hom(identity_hom(a)).ok());
    AlgebraHom bad{a, a, Matrix::identity(a->dim()).scaled(Scalar(2))};
    auto r = check_algebra_hom(bad);
    CHECK_FALSE(r.ok("unital"));
    CHECK_FALSE(r.ok("multiplicative"));
}

TEST_CASE("semisimplicity") {
    struct Row {
        Superalgebra a;
        bool semisimple;
    };
    // a dual-number factor carries the nilpotent ideal (x)
    std::vector<Row> rows = {{clifford(1, 1, Field::R), true},
                             {matrix_superalgebra(1, 1, Field::R), true},
                             {quaternions(), true},
                             {complex_clifford(2), true},
                             {parity_extension(clifford(1, 0, Field::R)), true},
                             {dual_numbers(), false},
                             {tensor(dual_numbers(), clifford(1, 0, Field::R)), false},
                             {direct_sum(dual_numbers(), quaternions()), false}};
    for (const auto& r : rows) {
        CAPTURE(r.a.name);
        CHECK(is_semisimple(r.a) == r.semisimple);
    }
}

TEST_CASE("superdivision algebras") {
    auto clc1 = tensor(clifford(1, 0, Field::R), complex_numbers_real());
    std::vector<Superalgebra> yes = {ground_field(Field::R), complex_numbers_real(), quaternions(),
                                     clifford(1, 0, Field::R), clifford(0, 1, Field::R), clifford(2, 0, Field::R),
                                     clifford(0, 2, Field::R), clifford(3, 0, Field::R), clifford(0, 3, Field::R),
                                     clc1};
    for (const auto& a : yes) {
        CAPTURE(a.name);
        auto r = superdivision(a);
        CHECK(r.superdivision);
        // odd elements squaring to +1 give zero divisors 1 - e, 1 + e
        if (a.odd_dim() == 0) CHECK_FALSE(r.zero_divisors.has_value());
    }
    std::vector<Superalgebra> no = {clifford(1, 1, Field::R), clifford(4, 0, Field::R),
                                    matrix_superalgebra(2, 0, Field::R),
                                    direct_sum(complex_numbers_real(), complex_numbers_real()), dual_numbers()};
    for (const auto& a : no) {
        CAPTURE(a.name);
        CHECK_FALSE(is_superdivision(a));
    }
    // (1 - e)(1 + e) = 0 in Cl(1,0) over C
    CHECK(is_superdivision(complex_clifford(1)));
    CHECK(superdivision(complex_clifford(1)).zero_divisors.has_value());
    CHECK_FALSE(is_superdivision(complex_clifford(2)));
    CHECK(is_superdivision(ground_field(Field::C)));
}

TEST_CASE("fingerprints") {
    auto m2 = matrix_superalgebra(2, 0, Field::R);
    auto f = fingerprint(m2);
    CHECK(f.sig_pos == 3);
    CHECK(f.sig_neg == 1);
    auto h = fingerprint(quaternions());
    CHECK(h.sig_pos == 1);
    CHECK(h.sig_neg == 3);
    auto hh = fingerprint(direct_sum(quaternions(), quaternions()));
    CHECK(hh.sig_pos == 2);
    CHECK(hh.sig_neg == 6);
    auto mm = fingerprint(direct_sum(m2, m2));
    CHECK(mm.sig_pos == 6);
    CHECK(mm.sig_neg == 2);
    auto mc = fingerprint(tensor(m2, complex_numbers_real()));
    CHECK(mc.sig_pos == 4);
    CHECK(mc.sig_neg == 4);
    // Cl(1,1) = End(R^{1|1}); Cl(2,0) is not
    CHECK(fingerprint(clifford(1, 1, Field::R)) == fingerprint(matrix_superalgebra(1, 1, Field::R)));
    CHECK_FALSE(fingerprint(clifford(2, 0, Field::R)) == fingerprint(matrix_superalgebra(1, 1, Field::R)));
    CHECK(fingerprint(complex_clifford(2)).supercenter_dim == 1);
    CHECK(fingerprint(complex_clifford(1)).center_dim == 2);
    CHECK(fingerprint(complex_clifford(1)).supercenter_dim == 1);
}

TEST_CASE("inverse") {
    auto h = quaternions();
    Vec q = {Scalar(1), Scalar(2), Scalar(), Scalar(-1)};
    auto inv = h.inverse(q);
    REQUIRE(inv);
    CHECK(h.mul(q, *inv) == h.unit());
    CHECK_FALSE(dual_numbers().inverse(dual_numbers().basis(1)));
}
