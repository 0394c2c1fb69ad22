#pragma once

#include "picard/hermitian.hpp"

namespace picard {

/// Matrix of an R-circle: Y* I_{1,2} Y = I_{1,2} and Y conj(Y) = I_3, both
/// exact; construction validates the identities and norm(det) = 1.
class UnitarySymmetric {
public:
    explicit UnitarySymmetric(MatK y);
    const MatK& mat() const { return y_; }
    long d() const { return y_.d(); }
    ProjMatK proj() const { return ProjMatK(y_); }

    bool operator==(const UnitarySymmetric& o) const { return y_ == o.y_; }

private:
    MatK y_;
};

/// Y_delta: rows (0, 0, 1/conj(delta)), (0, 1, 0), (delta, 0, 0).
UnitarySymmetric make_Y_delta(const FieldElement& delta);

/// Left action (X, Y) -> X Y conj(X)^-1 of the unitary group.
UnitarySymmetric act(const MatK& x, const UnitarySymmetric& y);

struct RCircleData {
    bool finite = false;
    std::array<FieldElement, 3> center;  // projective triple [a : alpha : c]
    FieldElement radius;
    FieldElement delta;  // canonical squarefree invariant

    RCircleData() = default;
};

/// Finiteness, center and radius of the circle of Y. The radius is computed
/// by both closed forms, which must agree exactly; the squarefree invariant
/// is the canonical representative of 1/conj(radius).
RCircleData circle_data(const UnitarySymmetric& y);

struct ReductionResult {
    FieldElement delta;   // canonical squarefree, in O_K
    ProjMatK conjugator;  // g with act(g, Y) projectively Y_delta
};

/// Reduce a rational unitary-symmetric matrix to its antidiagonal normal
/// form: make the circle finite if needed, translate the center to the
/// origin, then rescale by dilations until the invariant is integral and
/// canonical.
ReductionResult reduce_to_delta(const UnitarySymmetric& y);

/// A nonzero integral witness w with w / conj(w) equal to the given norm-one
/// element.
FieldElement hilbert90(const FieldElement& unit_norm);

}  // namespace picard
