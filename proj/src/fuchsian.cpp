#include "picard/fuchsian.hpp"

#include <algorithm>

namespace picard {

Rational TernaryForm::det() const {
    auto m2 = [&](int r0, int r1, int c0, int c1) {
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    return at(0, 0) * m2(1, 2, 1, 2) - at(0, 1) * m2(1, 2, 0, 2) + at(0, 2) * m2(1, 2, 0, 1);
}

bool TernaryForm::is_diagonal() const {
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool TernaryForm::is_indefinite() const {
    int pos = 0, neg = 0;
    for (int i = 0; i < 3; i++) {
        if (at(i, i).sign() > 0) pos++;
        if (at(i, i).sign() < 0) neg++;
    }
    return pos > 0 && neg > 0;
}

namespace {

// delta = u + i sqrt(|D_K|) v in the discriminant basis
std::pair<Rational, Rational> discriminant_coords(const FieldElement& delta) {
    FieldDescriptor f = delta.field();
    Rational u = delta.re();
    Rational v = f.half_integer_ring ? delta.im() : delta.im() / Rational(2);
    return {u, v};
}

Int rational_to_square_class(const Rational& r) { return Int(r.num() * r.den()); }

}  // namespace

TernaryForm restricted_form(const FieldElement& delta) {
    if (delta.is_zero()) throw std::domain_error("restricted_form: zero invariant");
    auto [u, v] = discriminant_coords(delta);
    Rational adisc(delta.field().abs_discriminant());
    TernaryForm q{};
    q.at(0, 0) = -u;
    q.at(0, 1) = q.at(1, 0) = -adisc * v;
    q.at(1, 1) = u * adisc;
    q.at(2, 2) = Rational(1);
    return q;
}

QuaternionAlgebraQ form_to_algebra(const TernaryForm& q) {
    if (!q.is_diagonal()) throw std::invalid_argument("form_to_algebra: form must be diagonal");
    Rational a = -q.at(0, 0), b = -q.at(1, 1), c = q.at(2, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::domain_error("form_to_algebra: degenerate form");
    if (!rational_is_square(a * b * c))
        throw std::domain_error("form_to_algebra: discriminant is not a square");
    if (!q.is_indefinite()) throw std::domain_error("form_to_algebra: form is definite");
    return QuaternionAlgebraQ(rational_to_square_class(a), rational_to_square_class(b));
}

QuaternionAlgebraQ delta_algebra(const FieldElement& delta) {
    if (delta.is_zero() || !delta.is_integer())
        throw std::domain_error("delta_algebra: invariant must be a nonzero integer of K");
    auto [u, v] = discriminant_coords(delta);
    Rational adisc(delta.field().abs_discriminant());
    Rational w = delta.norm() * adisc;

    TernaryForm q = restricted_form(delta);
    if (q.det() != -w) throw std::logic_error("delta_algebra: restricted form determinant");

    if (u.is_zero()) {
        // q is equivalent up to sign to diag(-1, -|D_K|v/2, |D_K|v/2)
        TernaryForm diag{};
        diag.at(0, 0) = Rational(-1);
        diag.at(1, 1) = -adisc * v / Rational(2);
        diag.at(2, 2) = adisc * v / Rational(2);
        QuaternionAlgebraQ route = form_to_algebra(diag);
        if (!ramification_set(route).finite_places.empty() ||
            ramification_set(route).infinite_place)
            throw std::logic_error("delta_algebra: trace-zero route must split");
        return QuaternionAlgebraQ(Int(1), Int(1));
    }

    // q is equivalent up to a rational scalar to diag(-u w^2, -w u^2, u w)
    TernaryForm diag{};
    diag.at(0, 0) = -u * w * w;
    diag.at(1, 1) = -w * u * u;
    diag.at(2, 2) = u * w;
    QuaternionAlgebraQ route = form_to_algebra(diag);

    QuaternionAlgebraQ direct(rational_to_square_class(Rational(4) * u),
                              rational_to_square_class(w));
    // the un-normalized pairs must already agree place by place
    if (ramification_set_pair(-diag.at(0, 0), -diag.at(1, 1)) !=
        ramification_set_pair(Rational(4) * u, w))
        throw std::logic_error("delta_algebra: raw ternary pair disagrees with Hilbert pair");
    if (ramification_set(route) != ramification_set(direct))
        throw std::logic_error("delta_algebra: ternary route disagrees with Hilbert pair");
    return direct;
}

QuaternionAlgebraQ natural_delta_algebra(const Int& delta, long d) {
    if (delta <= 0) throw std::domain_error("natural_delta_algebra: delta must be positive");
    FieldDescriptor f = FieldDescriptor::make(d);
    QuaternionAlgebraQ alg(delta, f.abs_discriminant());
    RamificationSet ram = ramification_set(alg);
    if (ram != ramification_set(delta_algebra(FieldElement::integer(d, delta))))
        throw std::logic_error("natural_delta_algebra: disagrees with the general pair");
    if (d > 1) {
        for (const Int& p : ram.finite_places)
            if (prime_splitting(p, Int(d)) == PrimeSplitting::Split)
                throw std::logic_error("natural_delta_algebra: ramified at a split prime");
    }
    return alg;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    if (D != o.D || Dprime != o.Dprime)
        throw std::invalid_argument("Quaternion: mixed algebras");
    const Rational a(D), b(Int(-Dprime));
    return {x0 * o.x0 + a * x1 * o.x1 + b * x2 * o.x2 - a * b * x3 * o.x3,
            x0 * o.x1 + x1 * o.x0 - b * x2 * o.x3 + b * x3 * o.x2,
            x0 * o.x2 + x2 * o.x0 + a * x1 * o.x3 - a * x3 * o.x1,
            x0 * o.x3 + x3 * o.x0 + x1 * o.x2 - x2 * o.x1,
            D, Dprime};
}

bool Quaternion::in_order() const {
    for (const Rational* c : {&x0, &x1, &x2, &x3})
        if (!c->is_integer()) return false;
    Rational dd(D);
    return (x1 / dd).is_integer() && (x2 / dd).is_integer() && (x3 / dd).is_integer();
}

ProjMatK embed_quaternion(const Quaternion& x, const Int& delta, long d) {
    if (delta <= 0) throw std::domain_error("embed_quaternion: delta must be a positive integer");
    FieldDescriptor f = FieldDescriptor::make(d);
    Int D = f.half_integer_ring ? f.abs_discriminant() : f.abs_discriminant() / 4;
    Int Dp = D * delta;
    if (x.D != D || x.Dprime != Dp)
        throw std::invalid_argument("embed_quaternion: element from the wrong algebra");
    if (!x.in_order()) throw std::domain_error("embed_quaternion: element outside the order");
    if (x.norm() != Rational(1)) throw std::domain_error("embed_quaternion: norm must be one");

    const Rational rd(D), rdp(Dp), rdel(delta);
    const Rational core_re = x.x0 * x.x3 - x.x1 * x.x2;
    const Rational core_im = x.x0 * x.x2 / rd - x.x1 * x.x3;

    // middle column: the composed product carries x0^2 - D x1^2 - D' x2^2
    // + D D' x3^2 in the center and delta * conj(b) below b, reducing to
    // n(x) = 1 and conj(b) on the x2 = x3 = 0 line
    MatK m(d);
    m.at(0, 0) = FieldElement(d, x.x0 * x.x0 + rd * x.x1 * x.x1, Rational(2) * rdp * x.x2 * x.x3);
    m.at(0, 1) = FieldElement(d, Rational(2) * rd * (x.x1 * x.x2 + x.x0 * x.x3),
                              Rational(2) * (rd * x.x1 * x.x3 + x.x0 * x.x2));
    m.at(0, 2) = FieldElement(d, rd * rd * x.x3 * x.x3 + rd * x.x2 * x.x2,
                              Rational(2) * x.x0 * x.x1 / rdel);
    m.at(1, 0) = FieldElement(d, rdp * core_re, rdp * core_im);
    m.at(1, 1) = FieldElement(d,
                              x.x0 * x.x0 - rd * x.x1 * x.x1 - rdp * x.x2 * x.x2 +
                                  rd * rdp * x.x3 * x.x3,
                              Rational(0));
    m.at(1, 2) = FieldElement(d, rd * core_re, -rd * core_im);
    m.at(2, 0) = FieldElement(d, (rd * rdp * x.x3 * x.x3 + rdp * x.x2 * x.x2) * rdel,
                              -Rational(2) * x.x0 * x.x1 * rdel);
    m.at(2, 1) = m.at(0, 1).conj() * rdel;
    m.at(2, 2) = m.at(0, 0).conj();

    for (int i = 0; i < 9; i++) {
        if (!m.at(i / 3, i % 3).is_integer())
            throw std::domain_error(
                "embed_quaternion: entry falls outside O_K (element too shallow in the order)");
    }
    ProjMatK result(m);
    if (!is_unitary(m)) throw std::logic_error("embed_quaternion: image is not unitary");
    if (!is_picard(result)) throw std::logic_error("embed_quaternion: image is not Picard");
    UnitarySymmetric ydelta = make_Y_delta(FieldElement::integer(d, delta));
    if (ProjMatK(act(m, ydelta).mat()) != ydelta.proj())
        throw std::logic_error("embed_quaternion: image does not fix the normal form");
    return result;
}

MatK theta(const std::array<Rational, 4>& g, long d) {
    const Rational &a = g[0], &b = g[1], &c = g[2], &e = g[3];
    if (a * e - b * c != Rational(1)) throw std::domain_error("theta: determinant must be one");
    MatK m(d);
    auto set = [&](int i, int j, const Rational& val) { m.at(i, j) = FieldElement(d, val, 0); };
    set(0, 0, a * a);
    set(0, 1, Rational(2) * a * b);
    set(0, 2, b * b);
    set(1, 0, a * c);
    set(1, 1, a * e + b * c);
    set(1, 2, b * e);
    set(2, 0, c * c);
    set(2, 1, Rational(2) * c * e);
    set(2, 2, e * e);
    if (!is_unitary(m)) throw std::logic_error("theta: image is not unitary");
    return m;
}

bool commensurable(const FieldElement& delta, const FieldElement& delta2) {
    return algebras_isomorphic(delta_algebra(delta), delta_algebra(delta2));
}

namespace {

bool verify_target(const Int& delta, long d, const RamificationSet& target) {
    FieldDescriptor f = FieldDescriptor::make(d);
    return ramification_set_raw(delta, f.abs_discriminant()) == target;
}

void validate_target(const RamificationSet& target, long d) {
    if (target.infinite_place)
        throw std::invalid_argument("construct_delta: the infinite place cannot be prescribed");
    for (const Int& p : target.finite_places) {
        if (!is_prime(p))
            throw std::invalid_argument("construct_delta: " + p.get_str() + " is not prime");
        if (prime_splitting(p, Int(d)) == PrimeSplitting::Split)
            throw std::invalid_argument("construct_delta: " + p.get_str() + " splits in Q(sqrt " +
                                        std::to_string(d) + ")");
    }
    if (target.finite_places.size() % 2 != 0)
        throw std::invalid_argument("construct_delta: ramification sets have even cardinality");
}

ConstructResult construct_by_scan(const RamificationSet& target, long d) {
    for (Int delta = 1; delta <= 1000000; ++delta) {
        if (verify_target(delta, d, target)) return {delta, Int(0)};
    }
    throw std::domain_error("construct_delta: scan exhausted");
}

ConstructResult construct_by_recipe(const RamificationSet& target, long d) {
    std::vector<Int> inert, ramified, other_divisors;
    for (const Int& p : target.finite_places) {
        (prime_splitting(p, Int(d)) == PrimeSplitting::Inert ? inert : ramified).push_back(p);
    }
    for (const auto& [p, e] : factorize(Int(d)).factors) {
        if (std::find(ramified.begin(), ramified.end(), p) == ramified.end())
            other_divisors.push_back(p);
    }
    Int P = 1;
    bool two_inert = false, two_ramified = false;
    for (const Int& p : inert) {
        P *= p;
        if (p == 2) two_inert = true;
    }
    for (const Int& p : ramified)
        if (p == 2) two_ramified = true;

    // target residue of q mod 8; unused when 2 is among the inert primes
    // (the appendix case analysis never needs it there)
    Int q_mod8 = mod_pos(P, Int(8));
    if (two_ramified) q_mod8 = mod_pos(Int(d % 4 == 2 ? 5 : 3) * P, Int(8));

    auto excluded = [&](const Int& q) {
        for (const auto& list : {inert, ramified, other_divisors})
            for (const Int& p : list)
                if (p == q) return true;
        return false;
    };

    for (Int q = 3; q <= 1000000; q += 2) {
        if (!is_prime(q) || excluded(q)) continue;
        if (!two_inert && mod_pos(q, Int(8)) != q_mod8) continue;
        bool ok = true;
        for (const Int& r : ramified)
            if (r != 2 && legendre(q, r) != -legendre(P, r)) ok = false;
        for (const Int& s : other_divisors)
            if (s != 2 && legendre(q, s) != legendre(P, s)) ok = false;
        if (!ok) continue;
        if (legendre(Int(d), q) != 1)
            throw std::logic_error("construct_delta: recipe prime fails (d/q) = 1");
        Int delta = P * q;
        if (verify_target(delta, d, target)) return {delta, q};
    }
    throw std::domain_error("construct_delta: recipe search exhausted");
}

}  // namespace

ConstructResult construct_delta(const RamificationSet& target, long d,
                                ConstructStrategy strategy) {
    if (d == 1) {
        if (target.finite_places.empty() && !target.infinite_place) return {Int(1), Int(0)};
        throw std::invalid_argument("construct_delta: d = 1 serves only the empty set");
    }
    validate_target(target, d);
    ConstructResult res = strategy == ConstructStrategy::VerifiedScan
                              ? construct_by_scan(target, d)
                              : construct_by_recipe(target, d);
    if (!verify_target(res.delta, d, target))
        throw std::logic_error("construct_delta: verification failed");
    return res;
}

std::vector<FuchsianClass> enumerate_classes(long d, int n) {
    if (d <= 1) throw std::invalid_argument("enumerate_classes: d must exceed 1");
    if (n < 1) throw std::invalid_argument("enumerate_classes: need n >= 1");
    std::vector<FuchsianClass> out;
    auto push_class = [&](const RamificationSet& target) {
        Int delta = construct_delta(target, d).delta;
        FieldElement fe = FieldElement::integer(d, delta);
        QuaternionAlgebraQ alg = natural_delta_algebra(delta, d);
        out.push_back({d, fe, alg, ramification_set(alg)});
    };
    push_class(RamificationSet{});
    if (n > 1) {
        std::vector<Int> inert;
        for (Int p = 2; static_cast<int>(inert.size()) < n + 1; ++p) {
            if (is_prime(p) && prime_splitting(p, Int(d)) == PrimeSplitting::Inert)
                inert.push_back(p);
        }
        for (int j = 1; static_cast<int>(out.size()) < n; j++) {
            RamificationSet target;
            target.finite_places = {inert[0], inert[j]};
            push_class(target);
        }
    }
    for (size_t i = 0; i < out.size(); i++)
        for (size_t j = i + 1; j < out.size(); j++)
            if (algebras_isomorphic(out[i].algebra, out[j].algebra))
                throw std::logic_error("enumerate_classes: classes are not distinct");
    return out;
}

PellSolution pell_fundamental(const Int& N) {
    if (N <= 0 || is_perfect_square(N))
        throw std::domain_error("pell_fundamental: N must be positive and not a square");
    const Int a0 = isqrt(N);
    Int m = 0, den = 1, a = a0;
    Int p_prev = 1, p = a0, q_prev = 0, q = 1;
    for (long iter = 0; iter < 1000000; iter++) {
        if (p * p - N * q * q == 1) return {p, q};
        m = den * a - m;
        den = (N - m * m) / den;
        a = (a0 + m) / den;
        Int p_next = a * p + p_prev, q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    throw std::domain_error("pell_fundamental: continued fraction did not close");
}

std::vector<Quaternion> pell_order_elements(const Int& delta, long d, int count) {
    FieldDescriptor f = FieldDescriptor::make(d);
    Int D = f.half_integer_ring ? f.abs_discriminant() : f.abs_discriminant() / 4;
    Int Dp = D * delta;
    Int N = D * D * D * delta * delta;
    PellSolution fund = pell_fundamental(N);
    Quaternion g(Rational(fund.x), Rational(Int(D * delta * fund.y)), Rational(0), Rational(0), D,
                 Dp);
    std::vector<Quaternion> out;
    Quaternion acc = g;
    for (int i = 0; i < count; i++) {
        if (acc.norm() != Rational(1))
            throw std::logic_error("pell_order_elements: norm drifted");
        out.push_back(acc);
        acc = acc * g;
    }
    return out;
}

}  // namespace picard
