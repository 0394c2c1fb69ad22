#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "picard/fuchsian.hpp"
#include "picard/rcircle.hpp"

using namespace picard;

namespace {

std::mt19937_64 rng(90301);

FieldElement random_integral(long d, int span = 9) {
    std::uniform_int_distribution<int> coef(-span, span);
    if (d % 4 == 3) {
        int p = coef(rng), q = coef(rng);
        if ((p ^ q) & 1) p++;
        return {d, Rational(Int(p), Int(2)), Rational(Int(q), Int(2))};
    }
    return {d, Rational(Int(coef(rng))), Rational(Int(coef(rng)))};
}

FieldElement random_nonzero_integral(long d, int span = 9) {
    FieldElement z = random_integral(d, span);
    while (z.is_zero()) z = random_integral(d, span);
    return z;
}

HeisenbergPoint random_point(long d, bool integral) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    if (integral) {
        FieldElement z = random_integral(d, 2);
        return {z, Rational(Int(c(rng)))};
    }
    FieldElement z(d, Rational(Int(c(rng)), Int(den(rng))), Rational(Int(c(rng)), Int(den(rng))));
    return {z, Rational(Int(c(rng)), Int(den(rng)))};
}

// word in K-rational Heisenberg similarities (translations and dilations)
MatK random_similarity(long d, int len) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    MatK w = MatK::identity(d);
    for (int i = 0; i < len; i++) {
        switch (kind(rng)) {
            case 0:
                w = w * heisenberg_translation(random_point(d, false)).rep();
                break;
            case 1: {
                Rational lam(Int(c(rng)), Int(den(rng)));
                if (lam.is_zero()) lam = Rational(2);
                w = w * heisenberg_dilation(FieldElement(d, lam, 0)).rep();
                break;
            }
            default: {
                FieldElement lam = random_integral(d, 2);
                if (lam.is_zero()) lam = FieldElement(d, 1, 1);
                w = w * heisenberg_dilation(lam).rep();
                break;
            }
        }
    }
    return w;
}

}  // namespace

TEST_CASE("normal form matrices") {
    CHECK(make_Y_delta(FieldElement::integer(5, 1)).mat() == MatK::antidiag_one(5));

    auto y2 = make_Y_delta(FieldElement::integer(5, 2));
    CHECK(y2.mat().at(0, 2) == FieldElement(5, Rational(Int(1), Int(2)), 0));
    CHECK(y2.mat().at(2, 0) == FieldElement::integer(5, 2));

    auto yr = make_Y_delta(FieldElement::i_sqrt_d(3));
    CHECK(yr.mat().at(0, 2) == FieldElement(3, 0, Rational(Int(1), Int(3))));
    CHECK(yr.mat().at(2, 0) == FieldElement::i_sqrt_d(3));

    CHECK_THROWS_AS(make_Y_delta(FieldElement(5, 0, 0)), std::domain_error);
    // random invariants always satisfy both defining identities
    for (long d : {1L, 2L, 3L, 5L, 7L})
        for (int i = 0; i < 20; i++) make_Y_delta(random_nonzero_integral(d));
}

TEST_CASE("action basics") {
    long d = 2;
    auto y = make_Y_delta(FieldElement(d, 1, 1));
    CHECK(act(MatK::identity(d), y) == y);

    for (int i = 0; i < 30; i++) {
        MatK x1 = random_similarity(d, 2), x2 = random_similarity(d, 2);
        CHECK(act(x1 * x2, y) == act(x1, act(x2, y)));
    }

    MatK notu = MatK::identity(d);
    notu.at(0, 1) = FieldElement::integer(d, 1);
    CHECK_THROWS_AS(act(notu, y), std::invalid_argument);
}

TEST_CASE("dilation action on the normal form") {
    for (long d : {1L, 3L, 5L}) {
        for (int i = 0; i < 25; i++) {
            FieldElement delta = random_nonzero_integral(d, 4);
            FieldElement lam = random_nonzero_integral(d, 3);
            auto moved = act(heisenberg_dilation(lam).rep(), make_Y_delta(delta));
            FieldElement expect = delta * (lam.conj() * lam.conj()).inverse();
            CHECK(moved.mat() == make_Y_delta(expect).mat());
        }
    }
}

TEST_CASE("circle data") {
    long d = 5;
    CHECK_FALSE(circle_data(UnitarySymmetric(MatK::identity(d))).finite);

    FieldElement delta(d, 3, 1);
    auto data = circle_data(make_Y_delta(delta));
    CHECK(data.finite);
    CHECK(data.center[0].is_zero());
    CHECK(data.center[1].is_zero());
    CHECK(data.radius == delta.conj().inverse());
    CHECK(data.delta == squarefree_delta(delta));

    // conjugate of the standard circle by t(1, 0): center [1:1:1], radius 1
    auto y1 = make_Y_delta(FieldElement::integer(1, 1));
    auto t = heisenberg_translation({FieldElement::integer(1, 1), Rational(0)});
    auto data2 = circle_data(act(t.rep(), y1));
    CHECK(data2.finite);
    FieldElement c = data2.center[2];
    CHECK(data2.center[0] == c);
    CHECK(data2.center[1] == c);
    CHECK(data2.radius == FieldElement::integer(1, 1));
}

TEST_CASE("center and radius equivariance") {
    for (long d : {1L, 2L, 3L, 5L}) {
        for (int i = 0; i < 50; i++) {
            FieldElement delta = random_nonzero_integral(d, 9);
            UnitarySymmetric y = act(random_similarity(d, 2), make_Y_delta(delta));
            RCircleData data = circle_data(y);
            REQUIRE(data.finite);

            // norm(radius) * norm(c) = 1
            CHECK(data.radius.norm() * y.mat().at(2, 0).norm() == Rational(1));

            // translations move the center and keep the radius
            HeisenbergPoint p = random_point(d, false);
            MatK t = heisenberg_translation(p).rep();
            RCircleData moved = circle_data(act(t, y));
            auto tc = t.apply(data.center);
            FieldElement scale = moved.center[2] / tc[2];
            CHECK(moved.center[0] == tc[0] * scale);
            CHECK(moved.center[1] == tc[1] * scale);
            CHECK(moved.radius == data.radius);

            // dilations scale the radius by lambda^2
            FieldElement lam = random_nonzero_integral(d, 3);
            RCircleData dil = circle_data(act(heisenberg_dilation(lam).rep(), y));
            CHECK(dil.radius == data.radius * lam * lam);
        }
    }
}

TEST_CASE("reduction of normal forms is trivial") {
    auto res = reduce_to_delta(make_Y_delta(FieldElement::integer(5, 3)));
    CHECK(res.delta == FieldElement::integer(5, 3));
    CHECK(res.conjugator == ProjMatK(MatK::identity(5)));
}

TEST_CASE("reduction round trip") {
    for (long d : {1L, 2L, 3L, 5L}) {
        for (int i = 0; i < 25; i++) {
            FieldElement delta = random_nonzero_integral(d, 9);
            MatK gmove = random_similarity(d, 3);
            UnitarySymmetric y = act(gmove, make_Y_delta(delta));
            ReductionResult res = reduce_to_delta(y);
            CHECK(res.delta == squarefree_delta(delta));
            CHECK(ProjMatK(act(res.conjugator.rep(), y).mat()) ==
                  make_Y_delta(res.delta).proj());
        }
    }
}

TEST_CASE("reduction makes infinite circles finite") {
    for (long d : {1L, 2L, 3L, 5L}) {
        UnitarySymmetric id(MatK::identity(d));
        ReductionResult res = reduce_to_delta(id);
        CHECK(res.delta.is_integer());
        CHECK_FALSE(res.delta.is_zero());
        CHECK(ProjMatK(act(res.conjugator.rep(), id).mat()) == make_Y_delta(res.delta).proj());
    }
}

TEST_CASE("the standard infinite circle belongs to the split class") {
    for (long d : {1L, 2L, 3L, 5L}) {
        UnitarySymmetric id(MatK::identity(d));
        FieldElement delta = reduce_to_delta(id).delta;
        RamificationSet ram = ramification_set(delta_algebra(delta));
        CHECK(ram.finite_places.empty());
        CHECK_FALSE(ram.infinite_place);
    }
}

TEST_CASE("hilbert 90 witnesses") {
    CHECK(hilbert90(FieldElement::integer(5, 1)) == FieldElement::integer(5, 1));
    CHECK(hilbert90(FieldElement::integer(5, -1)) == FieldElement::i_sqrt_d(5));
    CHECK(hilbert90(FieldElement(1, Rational(3, 5), Rational(4, 5))) == FieldElement(1, 2, 1));
    CHECK_THROWS_AS(hilbert90(FieldElement::integer(5, 2)), std::domain_error);

    for (long d : {1L, 2L, 3L, 5L}) {
        for (int i = 0; i < 50; i++) {
            FieldElement w = random_nonzero_integral(d);
            FieldElement u = w / w.conj();
            REQUIRE(u.norm() == Rational(1));
            FieldElement witness = hilbert90(u);
            CHECK(witness.is_integer());
            CHECK_FALSE(witness.is_zero());
            CHECK(witness / witness.conj() == u);
        }
    }
}

TEST_CASE("action closure keeps both identities") {
    for (long d : {1L, 3L}) {
        for (int i = 0; i < 40; i++) {
            FieldElement delta = random_nonzero_integral(d, 5);
            // construction of UnitarySymmetric revalidates the identities
            UnitarySymmetric y = act(random_similarity(d, 3), make_Y_delta(delta));
            CHECK(y.mat().det().norm() == Rational(1));
        }
    }
}
