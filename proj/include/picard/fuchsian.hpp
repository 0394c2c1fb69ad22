#pragma once

#include "picard/rcircle.hpp"
#include "picard/symbols.hpp"

namespace picard {

/// Symmetric 3x3 rational Gram matrix of a ternary quadratic form.
struct TernaryForm {
    std::array<Rational, 9> gram;

    const Rational& at(int i, int j) const { return gram[i * 3 + j]; }
    Rational& at(int i, int j) { return gram[i * 3 + j]; }
    Rational det() const;
    bool is_diagonal() const;
    /// Mixed signs on the diagonal of a diagonal form.
    bool is_indefinite() const;
};

/// Gram matrix of the Hermitian form restricted to the fixed real subspace
/// of z -> Y_delta conj(z), in the variables (x0, y0, x1); its determinant is
/// -N(delta) |D_K|.
TernaryForm restricted_form(const FieldElement& delta);

/// Quaternion algebra attached to a diagonal form -a x1^2 - b x2^2 + c x3^2
/// with abc a nonzero rational square and mixed signs: (a, b / Q).
QuaternionAlgebraQ form_to_algebra(const TernaryForm& q);

/// Hilbert pair of the stabilizer class of Y_delta: (2 Tr delta,
/// N(delta) |D_K|) when the trace is nonzero, (1, 1) otherwise. The ternary
/// route through the restricted form is evaluated as a cross-check.
QuaternionAlgebraQ delta_algebra(const FieldElement& delta);

/// Natural-radius special case: (delta, |D_K|).
QuaternionAlgebraQ natural_delta_algebra(const Int& delta, long d);

/// Element of the quaternion algebra with i^2 = D, j^2 = -Dprime.
struct Quaternion {
    Rational x0, x1, x2, x3;
    Int D, Dprime;

    Quaternion(Rational a, Rational b, Rational c, Rational e, Int D_in, Int Dp_in)
        : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(e)),
          D(std::move(D_in)), Dprime(std::move(Dp_in)) {}

    Quaternion conj() const { return {x0, -x1, -x2, -x3, D, Dprime}; }
    Rational norm() const {
        return x0 * x0 - Rational(D) * x1 * x1 + Rational(Dprime) * x2 * x2 -
               Rational(D * Dprime) * x3 * x3;
    }
    Rational trace() const { return x0 + x0; }
    Quaternion operator*(const Quaternion& o) const;
    bool operator==(const Quaternion& o) const {
        return x0 == o.x0 && x1 == o.x1 && x2 == o.x2 && x3 == o.x3 && D == o.D &&
               Dprime == o.Dprime;
    }

    /// Order membership: integral coordinates with x1, x2, x3 = 0 mod D.
    bool in_order() const;
};

/// Image in PU(1,2; O_K) of a norm-one order element, for the stabilizer of
/// Y_delta with delta a positive integer. Entries are assembled in K from the
/// closed forms (the radical identities sqrt(D D')/sqrt(delta) = D and
/// sqrt(D D' delta) = D' eliminate all square roots).
ProjMatK embed_quaternion(const Quaternion& x, const Int& delta, long d);

/// The symmetric-square homomorphism PSL2 -> PO(1,2) < PU(1,2):
/// [[a,b],[c,d]] -> [[a^2, 2ab, b^2], [ac, ad+bc, bd], [c^2, 2cd, d^2]].
MatK theta(const std::array<Rational, 4>& g, long d);

/// Wide commensurability of the stabilizers of Y_delta and Y_delta2,
/// decided by isomorphism of the attached quaternion algebras. Trace-zero
/// invariants carry the split pair (1,1); mixed-trace queries are answered
/// by the same algebra comparison, an extension beyond the nonzero-trace
/// uniqueness statement.
bool commensurable(const FieldElement& delta, const FieldElement& delta2);

enum class ConstructStrategy { VerifiedScan, CongruenceRecipe };

struct ConstructResult {
    Int delta;
    Int recipe_q = 0;  // the auxiliary prime when the recipe produced delta
};

/// A positive integer delta whose algebra (delta, |D_K|) has exactly the
/// prescribed finite ramification. Every finite place must be ramified or
/// inert in Q(sqrt d) and the cardinality even. The scan strategy walks
/// delta upward; the recipe strategy multiplies the inert places by an
/// auxiliary prime q found through congruence conditions. Both verify the
/// result by direct symbol evaluation.
ConstructResult construct_delta(const RamificationSet& target, long d,
                                ConstructStrategy strategy = ConstructStrategy::VerifiedScan);

struct FuchsianClass {
    long d;
    FieldElement delta;
    QuaternionAlgebraQ algebra;
    RamificationSet ram;
};

/// n pairwise non-commensurable classes: the split class followed by classes
/// ramified at pairs of inert primes.
std::vector<FuchsianClass> enumerate_classes(long d, int n);

struct PellSolution {
    Int x, y;  // x^2 - N y^2 = 1, y > 0
};

/// Fundamental solution of the Pell equation via the continued fraction of
/// sqrt(N); N must be positive and not a square.
PellSolution pell_fundamental(const Int& N);

/// Norm-one elements x0 + x1 i (x1 = 0 mod D*delta) of the order, from powers
/// of the fundamental Pell solution of x^2 - D (D delta t)^2 = 1.
std::vector<Quaternion> pell_order_elements(const Int& delta, long d, int count);

}  // namespace picard
