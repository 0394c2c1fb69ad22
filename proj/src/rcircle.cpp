#include "picard/rcircle.hpp"

namespace picard {

UnitarySymmetric::UnitarySymmetric(MatK y) : y_(std::move(y)) {
    const long d = y_.d();
    MatK form = MatK::form_matrix(d);
    if (y_.conj_transpose() * form * y_ != form)
        throw std::invalid_argument("UnitarySymmetric: Y* I Y = I fails");
    if (y_ * y_.conj() != MatK::identity(d))
        throw std::invalid_argument("UnitarySymmetric: Y conj(Y) = I fails");
    if (y_.det().norm() != Rational(1))
        throw std::invalid_argument("UnitarySymmetric: determinant is not unit-norm");
}

UnitarySymmetric make_Y_delta(const FieldElement& delta) {
    if (delta.is_zero()) throw std::domain_error("make_Y_delta: zero invariant");
    MatK m(delta.d());
    m.at(0, 2) = delta.conj().inverse();
    m.at(1, 1) = FieldElement::integer(delta.d(), 1);
    m.at(2, 0) = delta;
    return UnitarySymmetric(m);
}

UnitarySymmetric act(const MatK& x, const UnitarySymmetric& y) {
    if (!is_unitary(x)) throw std::invalid_argument("act: X is not unitary");
    return UnitarySymmetric(x * y.mat() * x.conj().inverse());
}

RCircleData circle_data(const UnitarySymmetric& ys) {
    const MatK& y = ys.mat();
    RCircleData out;
    const FieldElement a = y.at(0, 0), alpha = y.at(1, 0), c = y.at(2, 0);
    const FieldElement A = y.at(1, 1), delta = y.at(2, 1).conj();
    if (c.is_zero()) {
        out.finite = false;
        return out;
    }
    out.finite = true;
    out.center = {a, alpha, c};
    FieldElement cbar2 = c.conj() * c.conj();
    FieldElement rad1 = ((A * c).conj() - alpha.conj() * delta) / cbar2;
    FieldElement rad2 = -(c / cbar2) * y.det().conj();
    if (rad1 != rad2) throw std::logic_error("circle_data: radius formulas disagree");
    out.radius = rad1;
    out.delta = squarefree_delta(out.radius.conj().inverse());
    return out;
}

namespace {

// conjugating moves that make an infinite circle finite: antidiag(1,1,1)
// composed with a Picard translation
std::vector<MatK> finite_making_ladder(long d) {
    std::vector<MatK> out;
    const FieldElement one = FieldElement::integer(d, 1);
    const FieldElement root = FieldElement::i_sqrt_d(d);
    const std::vector<HeisenbergPoint> pts = {
        {root, Rational(0)},          {one, Rational(1)},          {one + root, Rational(0)},
        {root, Rational(1)},          {root + root, Rational(0)}, {one, Rational(2)},
        {one + one, Rational(1)},     {FieldElement(d, 0, 0), Rational(1)}};
    for (const auto& p : pts) {
        ProjMatK t = heisenberg_translation(p);
        if (!is_picard(t)) continue;
        out.push_back(MatK::antidiag_one(d) * t.rep());
    }
    return out;
}

}  // namespace

ReductionResult reduce_to_delta(const UnitarySymmetric& y_in) {
    const long d = y_in.d();
    UnitarySymmetric y = y_in;
    MatK g = MatK::identity(d);

    if (y.mat().at(2, 0).is_zero()) {
        bool made_finite = false;
        for (const MatK& move : finite_making_ladder(d)) {
            UnitarySymmetric cand = act(move, y);
            if (!cand.mat().at(2, 0).is_zero()) {
                y = cand;
                g = move * g;
                made_finite = true;
                break;
            }
        }
        if (!made_finite)
            throw std::domain_error("reduce_to_delta: ladder failed to make the circle finite");
    }

    // translate the center [a : alpha : c] to the origin
    const FieldElement a = y.mat().at(0, 0), alpha = y.mat().at(1, 0), c = y.mat().at(2, 0);
    FieldElement zeta = alpha / c;
    FieldElement a_over_c = a / c;
    if (a_over_c.re() != zeta.norm())
        throw std::logic_error("reduce_to_delta: center is not a null point");
    MatK t_inv =
        heisenberg_translation({zeta, a_over_c.im()}).rep().inverse();
    y = act(t_inv, y);
    g = t_inv * g;

    auto read_invariant = [](const UnitarySymmetric& ys) {
        const MatK& m = ys.mat();
        for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}})
            if (!m.at(i, j).is_zero())
                throw std::logic_error("reduce_to_delta: matrix is not antidiagonal");
        return m.at(2, 0) / m.at(1, 1);
    };

    // clear denominators: act(dil_{1/m}, Y_D) has invariant D m^2
    FieldElement dcur = read_invariant(y);
    auto [u, v] = dcur.integral_coords();
    Int m = lcm(u.den(), v.den());
    if (m > 1) {
        MatK dil = heisenberg_dilation(FieldElement(d, Rational(Int(1), m), 0)).rep();
        y = act(dil, y);
        g = dil * g;
        dcur = read_invariant(y);
    }
    if (!dcur.is_integer()) throw std::logic_error("reduce_to_delta: invariant not integral");

    // canonical squarefree representative via one more dilation
    SquarefreeDelta sq = squarefree_delta_witness(dcur);
    if (sq.canonical != dcur) {
        // dcur = canonical * z^2; act(dil_lambda, Y_D) = Y_{D conj(lambda)^-2}
        MatK dil = heisenberg_dilation(sq.ratio_sqrt.conj()).rep();
        y = act(dil, y);
        g = dil * g;
        dcur = read_invariant(y);
    }
    if (dcur != sq.canonical) throw std::logic_error("reduce_to_delta: canonicalization failed");

    ReductionResult res{sq.canonical, ProjMatK(g)};
    if (ProjMatK(act(g, y_in).mat()) != make_Y_delta(sq.canonical).proj())
        throw std::logic_error("reduce_to_delta: conjugator check failed");
    return res;
}

FieldElement hilbert90(const FieldElement& unit_norm) {
    if (unit_norm.norm() != Rational(1))
        throw std::domain_error("hilbert90: argument must have norm one");
    const long d = unit_norm.d();
    if (unit_norm == FieldElement::integer(d, -1)) return FieldElement::i_sqrt_d(d);
    FieldElement w = FieldElement::integer(d, 1) + unit_norm;
    // clear denominators and strip the integer content
    auto [u, v] = w.integral_coords();
    w = w * Rational(lcm(u.den(), v.den()));
    auto [x, yy] = w.integral_coords();
    Int content = gcd(x.num(), yy.num());
    if (content > 1) w = w * Rational(Int(1), content);
    if (w / w.conj() != unit_norm) throw std::logic_error("hilbert90: witness check failed");
    return w;
}

}  // namespace picard
