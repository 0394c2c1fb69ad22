#include "picard/checks.hpp"

#include <random>
#include <set>

#include "picard/report.hpp"
#include "picard/svg.hpp"

namespace picard {

namespace {

struct Ctx {
    std::mt19937_64 rng;

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Rational rational(int span) {
        return Rational(Int(uniform(-span, span)), Int(uniform(1, span)));
    }
    FieldElement element(long d, int span) { return {d, rational(span), rational(span)}; }
    FieldElement integral(long d, int span) {
        if (d % 4 == 3) {
            int p = uniform(-span, span), q = uniform(-span, span);
            if ((p ^ q) & 1) p++;
            return {d, Rational(Int(p), Int(2)), Rational(Int(q), Int(2))};
        }
        return {d, Rational(Int(uniform(-span, span))), Rational(Int(uniform(-span, span)))};
    }
    FieldElement nonzero_integral(long d, int span) {
        FieldElement z = integral(d, span);
        while (z.is_zero()) z = integral(d, span);
        return z;
    }
    Int nonzero_int(int span) {
        int x = 0;
        while (x == 0) x = uniform(-span, span);
        return Int(x);
    }
    long pick_field() {
        static const long ds[4] = {1, 2, 3, 5};
        return ds[uniform(0, 3)];
    }

    std::vector<MatK> picard_alphabet(long d) {
        std::vector<MatK> gens;
        for (const ProjMatK& g : picard_generators(d).elements) gens.push_back(g.rep());
        return gens;
    }
    MatK picard_word(long d, int len) {
        auto gens = picard_alphabet(d);
        MatK w = MatK::identity(d);
        for (int i = 0; i < len; i++) w = w * gens[uniform(0, int(gens.size()) - 1)];
        return w;
    }
    HeisenbergPoint point(long d, int span) {
        return {element(d, span), rational(span)};
    }
    MatK similarity_word(long d, int len) {
        MatK w = MatK::identity(d);
        for (int i = 0; i < len; i++) {
            switch (uniform(0, 2)) {
                case 0:
                    w = w * heisenberg_translation(point(d, 3)).rep();
                    break;
                case 1: {
                    Rational lam = rational(3);
                    if (lam.is_zero()) lam = Rational(2);
                    w = w * heisenberg_dilation(FieldElement(d, lam, 0)).rep();
                    break;
                }
                default: {
                    FieldElement lam = integral(d, 2);
                    if (lam.is_zero()) lam = FieldElement(d, 1, 1);
                    w = w * heisenberg_dilation(lam).rep();
                    break;
                }
            }
        }
        return w;
    }
};

using Suite = void (*)(Ctx&, SuiteResult&);

void fail(SuiteResult& r, const std::string& msg) {
    if (r.passed) {
        r.passed = false;
        r.detail = msg;
    }
}

void suite_exactnum_ring(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 1000; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement z = ctx.element(d, 9), w = ctx.element(d, 9);
        if ((z * w).norm() != z.norm() * w.norm()) fail(r, "norm not multiplicative");
        if ((z + w).trace() != z.trace() + w.trace()) fail(r, "trace not additive");
        if ((z * w).conj() != z.conj() * w.conj()) fail(r, "conj not multiplicative");
        if ((z + w).conj() != z.conj() + w.conj()) fail(r, "conj not additive");
    }
}

void suite_exactnum_integrality(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 1000; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement z = ctx.integral(d, 9), w = ctx.integral(d, 9);
        if (!(z + w).is_integer() || !(z * w).is_integer() || !z.conj().is_integer())
            fail(r, "ring of integers not closed");
    }
}

void suite_exactnum_squarefree(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 200; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement z = ctx.nonzero_integral(d, 6);
        auto sq = squarefree_delta_witness(z);
        if (z != sq.canonical * sq.ratio_sqrt * sq.ratio_sqrt) fail(r, "witness broken");
        if (squarefree_delta(sq.canonical) != sq.canonical) fail(r, "not idempotent");
        FieldElement s = ctx.element(d, 3);
        if (!s.is_zero() && squarefree_delta(z * s * s) != sq.canonical)
            fail(r, "not class-invariant");
    }
}

void suite_exactnum_factorization(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 20000; i++, r.cases++) {
        Int n = ctx.nonzero_int(1000000);
        Factorization f = factorize(n);
        if (f.value() != n) fail(r, "factorization does not reconstruct");
        for (size_t k = 1; k < f.factors.size(); k++)
            if (!(f.factors[k - 1].first < f.factors[k].first)) fail(r, "primes not increasing");
    }
}

void suite_symbols_hilbert(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 1000; i++, r.cases++) {
        Int a = ctx.nonzero_int(500), b = ctx.nonzero_int(500), c = ctx.nonzero_int(500);
        Int s = ctx.uniform(1, 20);
        std::set<Int> ps{Int(2)};
        for (const auto& [p, e] : factorize(Int(a * b * c)).factors) ps.insert(p);
        for (const Int& p : ps) {
            if (hilbert_symbol(a, Int(b * c), p) !=
                hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p))
                fail(r, "not bimultiplicative");
            if (hilbert_symbol(a, b, p) != hilbert_symbol(b, a, p)) fail(r, "not symmetric");
            if (hilbert_symbol(Int(a * s * s), b, p) != hilbert_symbol(a, b, p))
                fail(r, "not square-invariant");
            if (hilbert_symbol(a, Int(-a), p) != 1) fail(r, "(a,-a) != 1");
        }
    }
}

void suite_symbols_product_formula(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 1000; i++, r.cases++) {
        Int a = ctx.nonzero_int(10000), b = ctx.nonzero_int(10000);
        int prod = hilbert_symbol_real(a, b);
        std::set<Int> ps{Int(2)};
        for (const auto& [p, e] : factorize(Int(a * b)).factors) ps.insert(p);
        for (const Int& p : ps) prod *= hilbert_symbol(a, b, p);
        if (prod != 1) fail(r, "product formula violated");
        if (ramification_set_raw(a, b).cardinality() % 2 != 0) fail(r, "odd ramification");
    }
}

void suite_symbols_jacobi(Ctx&, SuiteResult& r) {
    for (long p = 3; p <= 1000; p += 2) {
        if (!is_prime(Int(p))) continue;
        for (long a = -1000; a <= 1000; a++, r.cases++) {
            if (jacobi(Int(a), Int(p)) != legendre(Int(a), Int(p)))
                fail(r, "jacobi disagrees with legendre");
        }
    }
}

void suite_hermitian_words(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 500; i++, r.cases++) {
        long d = ctx.pick_field();
        MatK w = ctx.picard_word(d, ctx.uniform(0, 6));
        if (unitarity_defect(w).has_value()) fail(r, "word left the unitary group");
        if (!is_unitary(w.inverse())) fail(r, "inverse not unitary");
        if (w.at(2, 0).is_zero() && (!w.at(1, 0).is_zero() || !w.at(2, 1).is_zero()))
            fail(r, "c = 0 but not upper triangular");
    }
}

void suite_hermitian_translations(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 200; i++, r.cases++) {
        long d = ctx.pick_field();
        HeisenbergPoint p = ctx.point(d, 4), q = ctx.point(d, 4);
        HeisenbergPoint pq = heisenberg_compose(p, q);
        if (heisenberg_translation(pq).rep() !=
            heisenberg_translation(p).rep() * heisenberg_translation(q).rep())
            fail(r, "group law drifted from matrix product");
    }
}

void suite_hermitian_null_cone(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 200; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement z = ctx.element(d, 4);
        std::array<FieldElement, 3> v{FieldElement(d, z.norm(), ctx.rational(4)), z,
                                      FieldElement::integer(d, 1)};
        if (h_form(v) != Rational(0)) {
            fail(r, "lift not null");
            continue;
        }
        MatK w = ctx.picard_word(d, 4);
        if (h_form(w.apply(v)) != Rational(0)) fail(r, "null cone not preserved");
    }
}

void suite_rcircle_closure(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 500; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement delta = ctx.nonzero_integral(d, 5);
        try {
            UnitarySymmetric y = act(ctx.picard_word(d, 3), make_Y_delta(delta));
            if (y.mat().det().norm() != Rational(1)) fail(r, "determinant norm drifted");
            // circle_data also compares the two closed-form radii
            RCircleData data = circle_data(y);
            if (data.finite && data.radius.norm() * y.mat().at(2, 0).norm() != Rational(1))
                fail(r, "|rad| != 1/|c| on a word conjugate");
        } catch (const std::exception& e) {
            fail(r, std::string("action left the variety: ") + e.what());
        }
    }
}

void suite_rcircle_radius(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 200; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement delta = ctx.nonzero_integral(d, 9);
        UnitarySymmetric y = act(ctx.similarity_word(d, 2), make_Y_delta(delta));
        RCircleData data = circle_data(y);  // checks both radius formulas
        if (!data.finite) {
            fail(r, "similarity made the circle infinite");
            continue;
        }
        if (data.radius.norm() * y.mat().at(2, 0).norm() != Rational(1))
            fail(r, "|rad| != 1/|c|");
        HeisenbergPoint p = ctx.point(d, 3);
        RCircleData moved = circle_data(act(heisenberg_translation(p).rep(), y));
        if (moved.radius != data.radius) fail(r, "translation changed the radius");
        FieldElement lam = ctx.nonzero_integral(d, 3);
        RCircleData dil = circle_data(act(heisenberg_dilation(lam).rep(), y));
        if (dil.radius != data.radius * lam * lam) fail(r, "dilation radius law broke");
    }
}

void suite_rcircle_reduction(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 100; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement delta = ctx.nonzero_integral(d, 9);
        UnitarySymmetric y = act(ctx.similarity_word(d, 3), make_Y_delta(delta));
        ReductionResult res = reduce_to_delta(y);
        if (res.delta != squarefree_delta(delta)) fail(r, "round trip changed the invariant");
        if (ProjMatK(act(res.conjugator.rep(), y).mat()) != make_Y_delta(res.delta).proj())
            fail(r, "conjugator does not reach the normal form");
    }
}

void suite_rcircle_hilbert90(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 200; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement w = ctx.nonzero_integral(d, 9);
        FieldElement u = w / w.conj();
        FieldElement witness = hilbert90(u);
        if (!witness.is_integer() || witness.is_zero() || witness / witness.conj() != u)
            fail(r, "witness property failed");
    }
}

void suite_fuchsian_routes(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 200; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement delta = ctx.nonzero_integral(d, 9);
        try {
            delta_algebra(delta);  // internally checks the ternary route
        } catch (const std::exception& e) {
            fail(r, std::string("route mismatch: ") + e.what());
        }
        TernaryForm f = restricted_form(delta);
        if (f.det() != -(delta.norm() * Rational(delta.field().abs_discriminant())))
            fail(r, "restricted form determinant");
        if (!(f.at(0, 0) * f.at(1, 1) - f.at(0, 1) * f.at(0, 1) < Rational(0)))
            fail(r, "form lost indefiniteness");
    }
}

void suite_fuchsian_prop52(Ctx&, SuiteResult& r) {
    for (long d : {1L, 2L, 3L, 5L, 7L}) {
        Int disc = FieldDescriptor::make(d).abs_discriminant();
        for (Int delta = 1; delta <= 20; ++delta, r.cases++) {
            if (ramification_set(natural_delta_algebra(delta, d)) !=
                ramification_set(delta_algebra(FieldElement::integer(d, delta))))
                fail(r, "natural pair disagrees");
            if (ramification_set_raw(Int(4 * delta), Int(delta * delta * disc)) !=
                ramification_set_raw(delta, disc))
                fail(r, "square scaling moved ramification");
        }
    }
}

void suite_fuchsian_embedding(Ctx&, SuiteResult& r) {
    struct Case {
        long d, delta;
    };
    for (Case cs : {Case{2, 3}, Case{3, 2}, Case{5, 2}, Case{7, 1}}) {
        UnitarySymmetric ydelta = make_Y_delta(FieldElement::integer(cs.d, cs.delta));
        for (const Quaternion& x : pell_order_elements(Int(cs.delta), cs.d, 5)) {
            r.cases++;
            try {
                ProjMatK img = embed_quaternion(x, Int(cs.delta), cs.d);
                if (!is_picard(img)) fail(r, "image not Picard");
                if (ProjMatK(act(img.rep(), ydelta).mat()) != ydelta.proj())
                    fail(r, "image moves the normal form");
            } catch (const std::exception& e) {
                fail(r, std::string("embedding failed: ") + e.what());
            }
        }
    }
}

void suite_fuchsian_classes(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 100; i++, r.cases++) {
        long d = ctx.pick_field();
        FieldElement delta = ctx.nonzero_integral(d, 6);
        Int m(ctx.uniform(1, 9));
        if (!commensurable(delta, delta * Rational(Int(m * m))))
            fail(r, "square scaling broke commensurability");
    }
    for (long d : {2L, 5L}) {
        auto classes = enumerate_classes(d, 4);
        for (size_t i = 0; i < classes.size(); i++)
            for (size_t j = i + 1; j < classes.size(); j++, r.cases++)
                if (algebras_isomorphic(classes[i].algebra, classes[j].algebra))
                    fail(r, "classes failed to separate");
    }
    RamificationSet t23;
    t23.finite_places = {Int(2), Int(3)};
    r.cases++;
    if (construct_delta(t23, 5).delta != 6) fail(r, "default realization drifted");
    r.cases++;
    if (construct_delta(t23, 5, ConstructStrategy::CongruenceRecipe).delta != 66)
        fail(r, "recipe realization drifted");
}

void suite_orbit(Ctx&, SuiteResult& r) {
    UnitarySymmetric y0(MatK::identity(1));
    GeneratorSet gens = picard_generators(1);
    auto ball = orbit_circles(y0, gens, 2);
    size_t smaller = orbit_circles(y0, gens, 1).size();
    r.cases += long(ball.size());
    if (ball.size() < smaller) fail(r, "orbit not monotone");
    for (const UnitarySymmetric& y : ball) {
        RCircleData data = circle_data(y);
        if (!data.finite) continue;
        CircleSample s = sample_circle(y, 32);
        for (const CirclePoint& p : s.points)
            if (circle_membership_residual(y, p) > 1e-9) fail(r, "sample left the circle");
    }
}

void suite_reports(Ctx& ctx, SuiteResult& r) {
    for (int i = 0; i < 50; i++, r.cases++) {
        long d = ctx.pick_field();
        ClassReport report = make_class_report(d, ctx.nonzero_integral(d, 6));
        std::string text = to_json(report).dump();
        if (Json::parse(text).dump() != text) fail(r, "json round trip not byte-identical");
    }
    r.cases++;
    SvgConfig cfg;
    cfg.d = 1;
    cfg.radius = 1;
    cfg.density = 16;
    std::string a = render_orbit_svg(cfg), b = render_orbit_svg(cfg);
    if (a != b) fail(r, "svg not deterministic");
    if (a.find("<svg") == std::string::npos || a.rfind("</svg>\n") == std::string::npos)
        fail(r, "svg structure broken");
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, bool inject_failure) {
    const std::pair<const char*, Suite> suites[] = {
        {"exactnum.ring_morphisms", suite_exactnum_ring},
        {"exactnum.integrality", suite_exactnum_integrality},
        {"exactnum.squarefree_delta", suite_exactnum_squarefree},
        {"exactnum.factorization", suite_exactnum_factorization},
        {"symbols.hilbert_properties", suite_symbols_hilbert},
        {"symbols.product_formula", suite_symbols_product_formula},
        {"symbols.jacobi_vs_legendre", suite_symbols_jacobi},
        {"hermitian.unitary_words", suite_hermitian_words},
        {"hermitian.translation_law", suite_hermitian_translations},
        {"hermitian.null_cone", suite_hermitian_null_cone},
        {"rcircle.action_closure", suite_rcircle_closure},
        {"rcircle.center_radius", suite_rcircle_radius},
        {"rcircle.reduction", suite_rcircle_reduction},
        {"rcircle.hilbert90", suite_rcircle_hilbert90},
        {"fuchsian.ternary_routes", suite_fuchsian_routes},
        {"fuchsian.natural_pairs", suite_fuchsian_prop52},
        {"fuchsian.embedding", suite_fuchsian_embedding},
        {"fuchsian.classes", suite_fuchsian_classes},
        {"orbit.word_ball", suite_orbit},
        {"cli.reports", suite_reports},
    };
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : suites) {
        Ctx ctx;
        ctx.rng.seed(seed ^ std::hash<std::string>{}(name));
        SuiteResult res;
        res.name = name;
        try {
            fn(ctx, res);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(res));
    }
    if (inject_failure) {
        SuiteResult res;
        res.name = "corruption.injected";
        res.cases = 1;
        res.passed = false;
        res.detail = "deliberate failure requested";
        out.push_back(std::move(res));
    }
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace picard
