#pragma once

#include <complex>
#include <vector>

#include "picard/rcircle.hpp"

namespace picard {

/// Verified Picard elements used for orbit expansion, closed under inverse.
/// No claim is made that they generate the whole lattice; they are enough to
/// draw rich orbit pictures.
struct GeneratorSet {
    std::vector<ProjMatK> elements;
};

GeneratorSet picard_generators(long d, int depth_hint = 2);

/// Word ball { act(w, y0) : |w| <= radius }, deduplicated by projective
/// canonical form and returned sorted by it; the output does not depend on
/// the order of the generators.
std::vector<UnitarySymmetric> orbit_circles(const UnitarySymmetric& y0, const GeneratorSet& gens,
                                            int radius);

struct CirclePoint {
    double zeta_re, zeta_im, v;
};

struct CircleSample {
    MatK source;  // the exact matrix the sample came from
    std::vector<CirclePoint> points;
    bool closed = false;

    explicit CircleSample(MatK src) : source(std::move(src)) {}
};

/// Float sample of a finite circle: the centered model is parametrized by
/// z0 = e^{i theta} with x1^2 = Re(conj(D) z0^2) over the arcs where the
/// radicand is nonnegative, converted to boundary coordinates and moved by
/// the translation that carries the origin to the center.
CircleSample sample_circle(const UnitarySymmetric& y, int n);

std::vector<std::pair<double, double>> vertical_projection(const CircleSample& s);

/// The vertical projection of an infinite circle is an affine line
/// zeta(s) = base + s * dir; both in float, for rendering.
struct ProjectedLine {
    std::complex<double> base, dir;
};

ProjectedLine infinite_circle_line(const UnitarySymmetric& y);

/// Complex value of a field element under the real embedding.
std::complex<double> embed_complex(const FieldElement& z);

/// |h| of the float lift of a sampled boundary point under the circle matrix;
/// the defining residual used by the rendering checks.
double circle_membership_residual(const UnitarySymmetric& y, const CirclePoint& p);

}  // namespace picard
