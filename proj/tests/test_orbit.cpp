#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "picard/orbit.hpp"

using namespace picard;

TEST_CASE("generator sets") {
    for (long d : {1L, 2L, 3L, 5L}) {
        GeneratorSet gens = picard_generators(d);
        CHECK(gens.elements.size() >= 6);
        for (const ProjMatK& g : gens.elements) {
            CHECK(is_picard(g));
            // closed under inverse
            ProjMatK ginv(g.rep().inverse());
            CHECK(std::any_of(gens.elements.begin(), gens.elements.end(),
                              [&](const ProjMatK& h) { return h == ginv; }));
        }
    }
    // d = 1 contains the unit dilation and the basic translation
    GeneratorSet g1 = picard_generators(1);
    ProjMatK dil_i = heisenberg_dilation(FieldElement::i_sqrt_d(1));
    ProjMatK t10 = heisenberg_translation({FieldElement::integer(1, 1), Rational(0)});
    CHECK(std::count(g1.elements.begin(), g1.elements.end(), dil_i) == 1);
    CHECK(std::count(g1.elements.begin(), g1.elements.end(), t10) == 1);
    // d = 3 contains a half-integer translation
    GeneratorSet g3 = picard_generators(3);
    ProjMatK th = heisenberg_translation({FieldElement(3, Rational(1, 2), Rational(1, 2)),
                                          Rational(0)});
    CHECK(std::count(g3.elements.begin(), g3.elements.end(), th) == 1);
}

TEST_CASE("orbit basics") {
    UnitarySymmetric y0(MatK::identity(1));
    GeneratorSet gens = picard_generators(1);

    auto ball0 = orbit_circles(y0, gens, 0);
    CHECK(ball0.size() == 1);
    CHECK(ball0[0].proj() == y0.proj());

    // the inversion alone preserves the standard infinite circle
    GeneratorSet inversion;
    inversion.elements.emplace_back(MatK::antidiag_one(1));
    auto fixed = orbit_circles(y0, inversion, 1);
    CHECK(fixed.size() == 1);
}

TEST_CASE("orbit growth, determinism and exactness") {
    UnitarySymmetric y0(MatK::identity(1));
    GeneratorSet gens = picard_generators(1);
    size_t prev = 0;
    for (int radius : {0, 1, 2, 3}) {
        auto ball = orbit_circles(y0, gens, radius);
        CHECK(ball.size() >= prev);  // monotone in radius
        prev = ball.size();
    }
    auto ball = orbit_circles(y0, gens, 3);
    CHECK(ball.size() >= 20);

    // schedule independence: shuffled generators give the same sorted output
    GeneratorSet shuffled = gens;
    std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), std::mt19937_64(5));
    auto ball2 = orbit_circles(y0, shuffled, 3);
    REQUIRE(ball.size() == ball2.size());
    for (size_t i = 0; i < ball.size(); i++) CHECK(ball[i].proj() == ball2[i].proj());

    // every element still satisfies both exact identities (checked again here;
    // the constructor of UnitarySymmetric already enforces them)
    for (const UnitarySymmetric& y : ball) {
        CHECK(y.mat() * y.mat().conj() == MatK::identity(1));
        RCircleData data = circle_data(y);
        if (data.finite)
            CHECK(data.radius.norm() * y.mat().at(2, 0).norm() == Rational(1));
    }
}

TEST_CASE("circle samples") {
    UnitarySymmetric y1 = make_Y_delta(FieldElement::integer(1, 1));
    CircleSample s = sample_circle(y1, 64);
    CHECK(s.closed);
    CHECK(s.points.size() >= 64);

    // parameter-level membership of every point
    for (const CirclePoint& p : s.points)
        CHECK(circle_membership_residual(y1, p) <= 1e-9);

    // the standard circle passes (+-1, v=0) and the node (0, v=+-1)
    auto near = [&](double a, double b, double va) {
        return std::any_of(s.points.begin(), s.points.end(), [&](const CirclePoint& p) {
            return std::abs(p.zeta_re - a) < 1e-9 && std::abs(p.zeta_im - b) < 1e-9 &&
                   std::abs(p.v - va) < 1e-9;
        });
    };
    CHECK(near(1, 0, 0));
    CHECK(near(-1, 0, 0));
    CHECK(near(0, 0, 1));
    CHECK(near(0, 0, -1));

    CHECK_THROWS_AS(sample_circle(y1, 4), std::invalid_argument);
    CHECK_THROWS_AS(sample_circle(UnitarySymmetric(MatK::identity(1)), 32), std::domain_error);
}

TEST_CASE("samples of conjugated circles") {
    for (long d : {1L, 2L, 5L}) {
        UnitarySymmetric y = make_Y_delta(FieldElement(d, 2, 1));
        HeisenbergPoint shift(FieldElement(d, 1, 1), Rational(2));
        UnitarySymmetric moved = act(heisenberg_translation(shift).rep(), y);

        CircleSample base = sample_circle(y, 40);
        CircleSample ms = sample_circle(moved, 40);
        REQUIRE(base.points.size() == ms.points.size());

        // the translated sample is the Heisenberg image of the base sample
        std::complex<double> z0 = embed_complex(shift.zeta);
        double v0 = shift.t.to_double() * std::sqrt(static_cast<double>(d));
        for (size_t i = 0; i < base.points.size(); i++) {
            std::complex<double> zeta(base.points[i].zeta_re, base.points[i].zeta_im);
            std::complex<double> expect = z0 + zeta;
            double ev = v0 + base.points[i].v + 2.0 * (std::conj(z0) * zeta).imag();
            CHECK(std::abs(expect.real() - ms.points[i].zeta_re) < 1e-9);
            CHECK(std::abs(expect.imag() - ms.points[i].zeta_im) < 1e-9);
            CHECK(std::abs(ev - ms.points[i].v) < 1e-9);
        }

        for (const CirclePoint& p : ms.points) CHECK(circle_membership_residual(moved, p) <= 1e-9);
    }
}

TEST_CASE("vertical projection") {
    UnitarySymmetric y1 = make_Y_delta(FieldElement::integer(1, 1));
    CircleSample s = sample_circle(y1, 32);
    auto proj = vertical_projection(s);
    REQUIRE(proj.size() == s.points.size());
    for (size_t i = 0; i < proj.size(); i++) {
        CHECK(proj[i].first == s.points[i].zeta_re);
        CHECK(proj[i].second == s.points[i].zeta_im);
    }
    // projection of the standard circle passes the origin and (+-1, 0)
    auto near = [&](double a, double b) {
        return std::any_of(proj.begin(), proj.end(), [&](const std::pair<double, double>& p) {
            return std::abs(p.first - a) < 1e-9 && std::abs(p.second - b) < 1e-9;
        });
    };
    CHECK(near(0, 0));
    CHECK(near(1, 0));
    CHECK(near(-1, 0));
}

TEST_CASE("infinite circle projections are lines") {
    UnitarySymmetric c_inf(MatK::identity(1));
    ProjectedLine l = infinite_circle_line(c_inf);
    CHECK(std::abs(l.base) < 1e-12);
    CHECK(std::abs(l.dir.imag()) < 1e-12);  // the real axis

    // an orbit image of the standard infinite circle still projects to a line:
    // check that three fixed boundary points are collinear
    GeneratorSet gens = picard_generators(1);
    auto ball = orbit_circles(c_inf, gens, 2);
    int seen = 0;
    for (const UnitarySymmetric& y : ball) {
        if (!y.mat().at(2, 0).is_zero()) continue;
        ProjectedLine line = infinite_circle_line(y);
        // the fixed-line equation e zeta = A conj(zeta) + beta holds along it
        std::complex<double> A = embed_complex(y.mat().at(1, 1));
        std::complex<double> e = embed_complex(y.mat().at(2, 2));
        std::complex<double> beta = embed_complex(y.mat().at(1, 2));
        for (double s : {-1.0, 0.5, 2.0}) {
            std::complex<double> zeta = line.base + s * line.dir;
            CHECK(std::abs(e * zeta - A * std::conj(zeta) - beta) < 1e-9);
        }
        seen++;
    }
    CHECK(seen >= 1);
    CHECK_THROWS_AS(infinite_circle_line(make_Y_delta(FieldElement::integer(1, 1))),
                    std::domain_error);
}
