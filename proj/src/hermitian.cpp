#include "picard/hermitian.hpp"

#include <sstream>

namespace picard {

MatK MatK::identity(long d) {
    MatK m(d);
    for (int i = 0; i < 3; i++) m.at(i, i) = FieldElement::integer(d, 1);
    return m;
}

MatK MatK::antidiag_one(long d) {
    MatK m(d);
    for (int i = 0; i < 3; i++) m.at(i, 2 - i) = FieldElement::integer(d, 1);
    return m;
}

MatK MatK::form_matrix(long d) {
    MatK m(d);
    m.at(0, 2) = FieldElement(d, Rational(Int(-1), Int(2)), 0);
    m.at(1, 1) = FieldElement::integer(d, 1);
    m.at(2, 0) = FieldElement(d, Rational(Int(-1), Int(2)), 0);
    return m;
}

MatK MatK::operator*(const MatK& o) const {
    if (d_ != o.d_) throw std::invalid_argument("MatK: mixed fields");
    MatK r(d_);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            FieldElement s(d_, 0, 0);
            for (int k = 0; k < 3; k++) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

MatK MatK::operator+(const MatK& o) const {
    if (d_ != o.d_) throw std::invalid_argument("MatK: mixed fields");
    MatK r(d_);
    for (int i = 0; i < 9; i++) r.m_[i] = m_[i] + o.m_[i];
    return r;
}

MatK MatK::operator-(const MatK& o) const {
    if (d_ != o.d_) throw std::invalid_argument("MatK: mixed fields");
    MatK r(d_);
    for (int i = 0; i < 9; i++) r.m_[i] = m_[i] - o.m_[i];
    return r;
}

MatK MatK::scaled(const FieldElement& s) const {
    MatK r(d_);
    for (int i = 0; i < 9; i++) r.m_[i] = m_[i] * s;
    return r;
}

MatK MatK::conj() const {
    MatK r(d_);
    for (int i = 0; i < 9; i++) r.m_[i] = m_[i].conj();
    return r;
}

MatK MatK::transpose() const {
    MatK r(d_);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) r.at(i, j) = at(j, i);
    return r;
}

MatK MatK::conj_transpose() const { return conj().transpose(); }

FieldElement MatK::det() const {
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    return at(0, 0) * minor2(1, 2, 1, 2) - at(0, 1) * minor2(1, 2, 0, 2) +
           at(0, 2) * minor2(1, 2, 0, 1);
}

MatK MatK::inverse() const {
    FieldElement dt = det();
    if (dt.is_zero()) throw std::domain_error("MatK: singular matrix");
    FieldElement inv = dt.inverse();
    MatK r(d_);
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    static const int idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            FieldElement cof = minor2(idx[j][0], idx[j][1], idx[i][0], idx[i][1]);
            if ((i + j) % 2 == 1) cof = -cof;
            r.at(i, j) = cof * inv;
        }
    return r;
}

std::array<FieldElement, 3> MatK::apply(const std::array<FieldElement, 3>& v) const {
    std::array<FieldElement, 3> r{FieldElement(d_, 0, 0), FieldElement(d_, 0, 0),
                                  FieldElement(d_, 0, 0)};
    for (int i = 0; i < 3; i++)
        for (int k = 0; k < 3; k++) r[i] = r[i] + at(i, k) * v[k];
    return r;
}

bool MatK::is_zero() const {
    for (const auto& e : m_)
        if (!e.is_zero()) return false;
    return true;
}

std::string MatK::str() const {
    std::ostringstream os;
    for (int i = 0; i < 3; i++) {
        os << (i ? "; " : "[");
        for (int j = 0; j < 3; j++) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

Rational h_form(const FieldElement& z0, const FieldElement& z1, const FieldElement& z2) {
    FieldElement cross = z0 * z2.conj();
    return -cross.re() + z1.norm();
}

Rational h_form(const std::array<FieldElement, 3>& z) { return h_form(z[0], z[1], z[2]); }

std::optional<int> unitarity_defect(const MatK& x) {
    const long d = x.d();
    const Rational half(Int(1), Int(2));
    const FieldElement one = FieldElement::integer(d, 1);
    // entry names: rows (a, conj gamma, b), (alpha, A, beta), (c, conj delta, e)
    const FieldElement a = x.at(0, 0), gamma = x.at(0, 1).conj(), b = x.at(0, 2);
    const FieldElement alpha = x.at(1, 0), A = x.at(1, 1), beta = x.at(1, 2);
    const FieldElement c = x.at(2, 0), delta = x.at(2, 1).conj(), e = x.at(2, 2);

    auto half_of = [&](const FieldElement& z) { return z * half; };
    const FieldElement eq1 = a * e.conj() + b * c.conj() - half_of(delta * gamma.conj()) - one;
    const FieldElement eq2 = e.conj() * alpha + c.conj() * beta - half_of(A * delta);
    const FieldElement eq3 = c * e.conj() + e * c.conj() - half_of(delta * delta.conj());
    const FieldElement eq4 = A * A.conj() - (alpha * beta.conj() + beta * alpha.conj()) * Rational(2) - one;
    const FieldElement eq5 = a * b.conj() + b * a.conj() - half_of(gamma * gamma.conj());
    const FieldElement eq6 = b.conj() * alpha + a.conj() * beta - half_of(A * gamma);

    const FieldElement* eqs[6] = {&eq1, &eq2, &eq3, &eq4, &eq5, &eq6};
    for (int i = 0; i < 6; i++)
        if (!eqs[i]->is_zero()) return i + 1;
    return std::nullopt;
}

bool is_unitary(const MatK& x) {
    // X unitary iff X^-1 = I_{1,2}^-1 X* I_{1,2}; checked as a matrix identity
    const long d = x.d();
    MatK form = MatK::form_matrix(d);
    MatK form_inv = form.inverse();
    MatK candidate_inverse = form_inv * x.conj_transpose() * form;
    bool ok = (x * candidate_inverse) == MatK::identity(d);
    // the six displayed equations are an equivalent formulation
    if (ok != !unitarity_defect(x).has_value())
        throw std::logic_error("is_unitary: equation set disagrees with matrix identity");
    return ok;
}

ProjMatK::ProjMatK(MatK rep) : rep_(std::move(rep)), canon_(rep_) {
    if (rep_.is_zero()) throw std::invalid_argument("ProjMatK: zero matrix");
    for (int i = 0; i < 9; i++) {
        const FieldElement& e = rep_.at(i / 3, i % 3);
        if (!e.is_zero()) {
            canon_ = rep_.scaled(e.inverse());
            break;
        }
    }
    std::ostringstream os;
    for (int i = 0; i < 9; i++) {
        const FieldElement& e = canon_.at(i / 3, i % 3);
        os << e.re().str() << "," << e.im().str() << ";";
    }
    key_ = os.str();
}

bool is_picard(const ProjMatK& x) {
    if (!is_unitary(x.rep())) throw std::invalid_argument("is_picard: representative not unitary");
    // clear denominators of the integral-basis coordinates, divide out the
    // rational integer content, then demand a unit determinant
    const MatK& m = x.rep();
    Int denom = 1;
    for (int i = 0; i < 9; i++) {
        auto [u, v] = m.at(i / 3, i % 3).integral_coords();
        denom = lcm(denom, lcm(u.den(), v.den()));
    }
    MatK cleared = m.scaled(FieldElement::integer(m.d(), denom));
    Int content = 0;
    for (int i = 0; i < 9; i++) {
        auto [u, v] = cleared.at(i / 3, i % 3).integral_coords();
        content = gcd(content, gcd(u.num(), v.num()));
    }
    if (content > 1)
        cleared = cleared.scaled(FieldElement(m.d(), Rational(Int(1), content), 0));
    return cleared.det().norm() == Rational(1);
}

ProjMatK heisenberg_translation(const HeisenbergPoint& p) {
    const long d = p.d();
    MatK m = MatK::identity(d);
    m.at(0, 1) = p.zeta.conj() * Rational(2);
    m.at(0, 2) = FieldElement(d, p.zeta.norm(), p.t);
    m.at(1, 2) = p.zeta;
    return ProjMatK(m);
}

ProjMatK heisenberg_dilation(const FieldElement& lambda) {
    if (lambda.is_zero()) throw std::domain_error("heisenberg_dilation: zero factor");
    MatK m(lambda.d());
    m.at(0, 0) = lambda;
    m.at(1, 1) = FieldElement::integer(lambda.d(), 1);
    m.at(2, 2) = lambda.conj().inverse();
    return ProjMatK(m);
}

HeisenbergPoint heisenberg_compose(const HeisenbergPoint& p, const HeisenbergPoint& q) {
    MatK prod = heisenberg_translation(p).rep() * heisenberg_translation(q).rep();
    // zeta from the (1,2) entry, vertical part from the (0,2) entry
    HeisenbergPoint r(prod.at(1, 2), prod.at(0, 2).im());
    if (heisenberg_translation(r).rep() != prod)
        throw std::logic_error("heisenberg_compose: product is not a translation");
    return r;
}

}  // namespace picard
