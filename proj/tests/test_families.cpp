#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chern/errors.hpp"
#include "chern/families.hpp"
#include "test_support.hpp"

using namespace chern;

TEST_CASE("Y_q ring and tangent classes") {
    DolgachevModel model;
    auto [ring, tangent] = build_Yq(3, 0, model);
    CHECK(ring_validate(*ring).ok);
    CHECK(ring->dimension() == 3);

    // c_1 = (q-2) G + (2-2g) F with q = 3, g = 0
    RingElement expect_c1 = ring_symbol(ring, "G*1") + ring_symbol(ring, "1*F") * Rational(2);
    CHECK(tangent.chern_class(1) == expect_c1);
    RingElement expect_c2 = ring_symbol(ring, "pt*1") * Rational(12) +
                            ring_symbol(ring, "G*F") * Rational(2);
    CHECK(tangent.chern_class(2) == expect_c2);
    RingElement expect_c3 = ring_symbol(ring, "pt*F") * Rational(24);
    CHECK(tangent.chern_class(3) == expect_c3);

    CHECK_THROWS_AS(build_Yq(4, 0, model), PreconditionError);
    CHECK_THROWS_AS(build_Yq(1, 0, model), PreconditionError);
    CHECK_THROWS_AS(build_Yq(3, -1, model), PreconditionError);
    CHECK_THROWS_AS(build_Yq(3, 0, DolgachevModel{0, 1}), PreconditionError);
    CHECK_THROWS_AS(build_Yq(3, 0, DolgachevModel{1, 0}), PreconditionError);
}

TEST_CASE("c_1(Y_q)^3 = 0 and c_1 c_2 is independent of q") {
    for (int genus : {0, 2})
        for (int q : {3, 5, 7}) {
            auto [ring, tangent] = build_Yq(q, genus, DolgachevModel{});
            RingElement c1 = tangent.chern_class(1);
            CHECK(ring_mul(ring_mul(c1, c1), c1).is_zero());
            CHECK(integrate(ring_mul(c1, tangent.chern_class(2))) == (2 - 2 * genus) * 12);
        }
}

TEST_CASE("E_q bundle data") {
    BundleOnBase b = build_Eq(3, 4, DolgachevModel{});
    CHECK(b.rank() == 2);
    CHECK(b.total_dimension() == 4);
    RingElement expect_c1 =
        ring_symbol(b.base, "omega*1") + ring_symbol(b.base, "1*F");
    CHECK(b.bundle.chern_class(1) == expect_c1);
    CHECK(b.bundle.chern_class(2).is_zero());
    CHECK_THROWS_AS(build_Eq(3, 3, DolgachevModel{}), PreconditionError);
}

TEST_CASE("c_1(Y_q) c_1(E_q)^2 = 2(q-2)t + (2-2g)w") {
    for (const DolgachevModel& model :
         {DolgachevModel{1, 1}, DolgachevModel{3, Rational(7, 2)}, DolgachevModel{2, -1}})
        for (int genus : {0, 1, 3})
            for (int q : {3, 5, 9}) {
                BundleOnBase b = build_Eq(q, 5, model, genus);
                RingElement c1E = b.bundle.chern_class(1);
                Rational value =
                    integrate(ring_mul(b.tangent.chern_class(1), ring_mul(c1E, c1E)));
                CHECK(value == Rational(2 * (q - 2)) * model.t +
                                   Rational(2 - 2 * genus) * model.w);
            }
    // default model at q = 3: 2*1*1 + 2*1 = 4
    BundleOnBase b = build_Eq(3, 4, DolgachevModel{});
    RingElement c1E = b.bundle.chern_class(1);
    CHECK(integrate(ring_mul(b.tangent.chern_class(1), ring_mul(c1E, c1E))) == 4);
}

TEST_CASE("family lines: the n = 4 slope pattern") {
    DolgachevModel model;
    CHECK(family_chern(Partition{2, 2}, 4, 0, model).slope == 0);
    CHECK(family_chern(Partition{3, 1}, 4, 0, model).slope == 0);
    CHECK(family_chern(Partition{4}, 4, 0, model).slope == 0);
    CHECK(family_chern(Partition{2, 1, 1}, 4, 0, model).slope != 0);
    CHECK(family_chern(Partition{1, 1, 1, 1}, 4, 0, model).slope == 16);
    CHECK_THROWS_AS(family_chern(Partition{2, 1}, 4, 0, model), PreconditionError);
}

TEST_CASE("slope is nonzero exactly when every part is at most n-2 (n >= 5)") {
    DolgachevModel model;
    for (int n : {5, 6})
        for (const Partition& m : partitions_of(n)) {
            bool expect_nonzero = m.part(0) <= n - 2;
            CHECK((family_chern(m, n, 0, model).slope != 0) == expect_nonzero);
        }
    CHECK(family_chern(Partition{1, 4}, 5, 0, model).slope == 0);
}

TEST_CASE("four q values lie on one line") {
    DolgachevModel model;
    for (const Partition& m : partitions_of(4)) {
        FamilyChernPolynomial line = family_chern(m, 4, 0, model);
        for (int q : {3, 5, 7, 9}) {
            ChernVector direct = family_chern_vector(q, 4, 0, model);
            CHECK(direct.value(m) == line.at(q));
        }
    }
}

TEST_CASE("slope scales with t, intercept is affine in w") {
    Partition m{1, 1, 1, 1};
    FamilyChernPolynomial base = family_chern(m, 4, 0, DolgachevModel{1, 1});
    FamilyChernPolynomial twice_t = family_chern(m, 4, 0, DolgachevModel{1, 2});
    CHECK(twice_t.slope == base.slope * 2);

    FamilyChernPolynomial w1 = base;
    FamilyChernPolynomial w2 = family_chern(m, 4, 0, DolgachevModel{2, 1});
    FamilyChernPolynomial w3 = family_chern(m, 4, 0, DolgachevModel{3, 1});
    CHECK(w2.slope == w1.slope);
    CHECK(w3.slope == w1.slope);
    CHECK(w2.intercept - w1.intercept == w3.intercept - w2.intercept);
    CHECK(w2.intercept != w1.intercept);
}

TEST_CASE("both Chern-number routes agree on the family") {
    DolgachevModel model;
    BundleOnBase b = build_Eq(5, 4, model);
    CHECK(chern_vector_pbundle(b) == chern_vector_oracle(b));
}

TEST_CASE("alpha generators in dimensions 1 and 2") {
    AlphaGenerator a1 = alpha_generator(1);
    CHECK(a1.vector.value(Partition{1}) == 2);
    CHECK(!a1.bundle.has_value());

    AlphaGenerator a2 = alpha_generator(2);
    CHECK(a2.vector == test::pn_vector(2));
    CHECK_THROWS_AS(alpha_generator(0), PreconditionError);
}

TEST_CASE("alpha_3: frozen values, nonzero Milnor number, vanishing chi_y") {
    AlphaGenerator a3 = alpha_generator(3);
    REQUIRE(a3.bundle.has_value());
    CHECK(a3.bundle->rank() == 2);
    ChernVector expect(3);
    expect.set_value(Partition{1, 1, 1}, 4);  // 2d at d = 2; c_2, c_3 vanish
    CHECK(a3.vector == expect);
    CHECK(apply(milnor_s(3), a3.vector) == 4);
    for (const LinearFunctional& chi : chi_functionals(3))
        CHECK(apply(chi, a3.vector) == 0);

    // the polarization scales the only nonzero Chern number
    CHECK(alpha_generator(3, 3).vector.value(Partition{1, 1, 1}) == 6);
}

TEST_CASE("alpha_4 frozen values") {
    ChernVector v = alpha_generator(4).vector;
    CHECK(v.value(Partition{1, 1, 1, 1}) == 54);
    CHECK(v.value(Partition{2, 1, 1}) == 12);
    CHECK(v.value(Partition{2, 2}) == 2);
    CHECK(v.value(Partition{3, 1}) == 0);
    CHECK(v.value(Partition{4}) == 0);
    CHECK(apply(milnor_s(4), v) == 10);
}

TEST_CASE("product Chern vectors") {
    ChernVector p1 = test::pn_vector(1);
    ChernVector square = product_chern_vector(p1, p1);
    CHECK(square.value(Partition{2}) == 4);
    CHECK(square.value(Partition{1, 1}) == 8);

    ChernVector unit(0);
    unit.set_value(Partition{}, 1);
    CHECK(product_chern_vector(p1, unit) == p1);

    ChernVector cube = product_chern_vector(square, p1);
    CHECK(cube.value(Partition{1, 1, 1}) == 48);
    CHECK(product_chern_vector(p1, square) == cube);
}

TEST_CASE("product vectors agree with the bundle oracle on P^1 x P^1 and P^1 x P^2") {
    RingPtr pp1 = projective_space_ring(1);
    ChernData tangent = projective_space_tangent(pp1, 1);
    BundleOnBase rank2(pp1, tangent, ChernData(pp1, 2, {}));
    CHECK(chern_vector_oracle(rank2) ==
          product_chern_vector(test::pn_vector(1), test::pn_vector(1)));
    BundleOnBase rank3(pp1, tangent, ChernData(pp1, 3, {}));
    CHECK(chern_vector_oracle(rank3) ==
          product_chern_vector(test::pn_vector(1), test::pn_vector(2)));
}
