#include "picard/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace picard {

std::complex<double> embed_complex(const FieldElement& z) {
    return {z.re().to_double(), z.im().to_double() * std::sqrt(static_cast<double>(z.d()))};
}

GeneratorSet picard_generators(long d, int depth_hint) {
    FieldDescriptor f = FieldDescriptor::make(d);
    std::vector<ProjMatK> raw;
    raw.emplace_back(MatK::antidiag_one(d));

    std::vector<FieldElement> zetas;
    const FieldElement one = FieldElement::integer(d, 1);
    const FieldElement gen = f.half_integer_ring
                                 ? FieldElement(d, Rational(1, 2), Rational(1, 2))
                                 : FieldElement::i_sqrt_d(d);
    for (int a = 0; a <= depth_hint; a++)
        for (int b = 0; b <= depth_hint; b++) {
            if (a + b == 0 || a + b > depth_hint) continue;
            zetas.push_back(one * Rational(a) + gen * Rational(b));
        }
    for (const FieldElement& z : zetas) {
        for (long t : {0L, 1L}) {
            ProjMatK cand = heisenberg_translation({z, Rational(Int(t))});
            if (is_picard(cand)) raw.push_back(cand);
        }
    }
    raw.push_back(heisenberg_translation({FieldElement(d, 0, 0), Rational(1)}));

    std::vector<FieldElement> units;
    if (d == 1) units.push_back(FieldElement::i_sqrt_d(1));
    if (d == 3) units.push_back(FieldElement(3, Rational(-1, 2), Rational(1, 2)));
    units.push_back(FieldElement::integer(d, -1));
    for (const FieldElement& u : units) {
        ProjMatK cand = heisenberg_dilation(u);
        if (is_picard(cand)) raw.push_back(cand);
    }

    GeneratorSet out;
    std::map<std::string, ProjMatK> dedup;
    for (const ProjMatK& g : raw) {
        if (!is_picard(g)) continue;
        ProjMatK ginv(g.rep().inverse());
        dedup.insert({g.key(), g});
        dedup.insert({ginv.key(), ginv});
    }
    for (auto& [key, g] : dedup) out.elements.push_back(g);
    return out;
}

std::vector<UnitarySymmetric> orbit_circles(const UnitarySymmetric& y0, const GeneratorSet& gens,
                                            int radius) {
    if (radius < 0) throw std::invalid_argument("orbit_circles: negative radius");
    std::map<std::string, UnitarySymmetric> seen;
    std::vector<UnitarySymmetric> frontier{y0};
    seen.insert({y0.proj().key(), y0});
    for (int level = 0; level < radius; level++) {
        std::vector<UnitarySymmetric> next;
        for (const UnitarySymmetric& y : frontier) {
            for (const ProjMatK& g : gens.elements) {
                UnitarySymmetric moved = act(g.rep(), y);
                auto [it, inserted] = seen.insert({moved.proj().key(), moved});
                if (inserted) next.push_back(moved);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::vector<UnitarySymmetric> out;
    out.reserve(seen.size());
    for (auto& [key, y] : seen) out.push_back(y);
    return out;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CenteredModel {
    std::complex<double> center;
    double center_v;
    std::complex<double> invariant;  // D with the centered circle equal to C_D
};

CenteredModel centered_model(const RCircleData& data) {
    std::complex<double> c = embed_complex(data.center[2]);
    std::complex<double> a = embed_complex(data.center[0]) / c;
    std::complex<double> alpha = embed_complex(data.center[1]) / c;
    std::complex<double> r = embed_complex(data.radius);
    return {alpha, a.imag(), 1.0 / std::conj(r)};
}

CirclePoint centered_point(const CenteredModel& m, double theta, int branch_sign) {
    std::complex<double> z0 = std::polar(1.0, theta);
    double radicand = (std::conj(m.invariant) * z0 * z0).real();
    if (radicand < 1e-12 * std::abs(m.invariant)) radicand = 0.0;  // arc endpoint
    double x1 = branch_sign * std::sqrt(radicand);
    std::complex<double> denom = m.invariant * std::conj(z0);
    std::complex<double> w = x1 / denom;
    std::complex<double> w0 = z0 / denom;
    // translate the centered point by (center, center_v)
    std::complex<double> zeta = m.center + w;
    double v = m.center_v + w0.imag() + 2.0 * (std::conj(m.center) * w).imag();
    return {zeta.real(), zeta.imag(), v};
}

}  // namespace

CircleSample sample_circle(const UnitarySymmetric& y, int n) {
    if (n < 8) throw std::invalid_argument("sample_circle: need at least 8 points");
    RCircleData data = circle_data(y);
    if (!data.finite) throw std::domain_error("sample_circle: circle is infinite");
    CenteredModel m = centered_model(data);

    // radicand >= 0 on theta in [arg(D)/2 - pi/4, arg(D)/2 + pi/4] (mod pi);
    // the +/- branches of that arc traverse the two lemniscate lobes
    double mid = std::arg(m.invariant) / 2.0;
    double lo = mid - kPi / 4.0, hi = mid + kPi / 4.0;
    int per_branch = std::max(5, n / 2) | 1;  // odd count puts mid on the grid

    CircleSample out(y.mat());
    out.closed = true;
    for (int i = 0; i < per_branch; i++) {
        double theta = lo + (hi - lo) * i / (per_branch - 1);
        out.points.push_back(centered_point(m, theta, +1));
    }
    for (int i = per_branch - 1; i >= 0; i--) {
        double theta = lo + (hi - lo) * i / (per_branch - 1);
        out.points.push_back(centered_point(m, theta, -1));
    }
    return out;
}

std::vector<std::pair<double, double>> vertical_projection(const CircleSample& s) {
    std::vector<std::pair<double, double>> out;
    out.reserve(s.points.size());
    for (const CirclePoint& p : s.points) out.emplace_back(p.zeta_re, p.zeta_im);
    return out;
}

ProjectedLine infinite_circle_line(const UnitarySymmetric& y) {
    const MatK& mat = y.mat();
    if (!mat.at(2, 0).is_zero())
        throw std::domain_error("infinite_circle_line: circle is finite");
    // upper-triangular Y: the fixed boundary points satisfy
    // e zeta = A conj(zeta) + beta
    std::complex<double> A = embed_complex(mat.at(1, 1));
    std::complex<double> e = embed_complex(mat.at(2, 2));
    std::complex<double> beta = embed_complex(mat.at(1, 2));
    std::complex<double> phase = A / e;
    std::complex<double> mu = std::sqrt(phase);
    std::complex<double> t0 = beta / e;
    double c = (t0 * std::conj(mu)).imag() / 2.0;
    return {std::complex<double>(0.0, c) * mu, mu};
}

double circle_membership_residual(const UnitarySymmetric& y, const CirclePoint& p) {
    std::complex<double> zeta(p.zeta_re, p.zeta_im);
    std::complex<double> lift[3] = {std::complex<double>(std::norm(zeta), p.v), zeta, 1.0};
    std::complex<double> yf[3][3];
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) yf[i][j] = embed_complex(y.mat().at(i, j));
    std::complex<double> img[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) img[i] += yf[i][j] * std::conj(lift[j]);

    double h = -(lift[0] * std::conj(lift[2])).real() + std::norm(lift[1]);
    double scale = 0.0, nl = 0.0, ni = 0.0;
    for (int i = 0; i < 3; i++) {
        scale = std::max(scale, std::abs(lift[i]));
        nl += std::norm(lift[i]);
        ni += std::norm(img[i]);
    }
    // fixed-point condition: img parallel to lift
    std::complex<double> cross[3] = {img[1] * lift[2] - img[2] * lift[1],
                                     img[2] * lift[0] - img[0] * lift[2],
                                     img[0] * lift[1] - img[1] * lift[0]};
    double cr = 0.0;
    for (const auto& x : cross) cr += std::norm(x);
    double rel_cross = std::sqrt(cr / (nl * ni));
    double rel_h = std::abs(h) / std::max(1.0, scale * scale);
    return std::max(rel_h, rel_cross);
}

}  // namespace picard
