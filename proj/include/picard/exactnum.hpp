#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "picard/rational.hpp"

namespace picard {

/// The imaginary quadratic field K = Q(i*sqrt(d)), d squarefree positive.
/// D_K = -d and O_K = Z[(1+i sqrt d)/2] when d = 3 mod 4, else D_K = -4d
/// and O_K = Z[i sqrt d].
struct FieldDescriptor {
    long d = 1;
    Int discriminant = -4;
    bool half_integer_ring = false;

    static FieldDescriptor make(long d);

    Int abs_discriminant() const { return -discriminant; }
    bool operator==(const FieldDescriptor& o) const { return d == o.d; }
};

/// Element re + im * i*sqrt(d) of K, with rational coordinates in the
/// (1, i sqrt d) basis. Integrality in O_K is a predicate, not a type.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long d, Rational re, Rational im)
        : d_(d), re_(std::move(re)), im_(std::move(im)) {}
    static FieldElement integer(long d, const Int& n) { return {d, Rational(n), Rational(0)}; }
    static FieldElement i_sqrt_d(long d) { return {d, Rational(0), Rational(1)}; }

    long d() const { return d_; }
    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    FieldDescriptor field() const { return FieldDescriptor::make(d_); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    FieldElement conj() const { return {d_, re_, -im_}; }
    Rational trace() const { return re_ + re_; }
    Rational norm() const { return re_ * re_ + Rational(d_) * im_ * im_; }

    FieldElement operator-() const { return {d_, -re_, -im_}; }
    FieldElement operator+(const FieldElement& o) const {
        check_field(o);
        return {d_, re_ + o.re_, im_ + o.im_};
    }
    FieldElement operator-(const FieldElement& o) const {
        check_field(o);
        return {d_, re_ - o.re_, im_ - o.im_};
    }
    FieldElement operator*(const FieldElement& o) const {
        check_field(o);
        return {d_, re_ * o.re_ - Rational(d_) * im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    FieldElement operator*(const Rational& s) const { return {d_, re_ * s, im_ * s}; }
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const {
        return d_ == o.d_ && re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Membership in O_K (half-integer coordinates of equal parity when
    /// d = 3 mod 4, integer coordinates otherwise).
    bool is_integer() const;
    bool is_unit() const { return is_integer() && norm() == Rational(1); }

    /// Coordinates (x, y) with z = x + y*(1+i sqrt d)/2 in the half-integer
    /// ring, or (re, im) otherwise; z is integral iff both are integers.
    std::pair<Rational, Rational> integral_coords() const;

    std::string str() const;

private:
    void check_field(const FieldElement& o) const {
        if (d_ != o.d_) throw std::invalid_argument("FieldElement: mixed fields");
    }
    long d_ = 1;
    Rational re_, im_;
};

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing

    Int value() const;
};

/// Deterministic trial-division factorization; desk scale (|n| up to ~2^64).
Factorization factorize(const Int& n);
bool is_prime(const Int& n);

/// Largest squarefree integer dividing n with n/result a perfect square;
/// the sign of n is kept.
Int squarefree_part(const Int& n);

/// Exact square root in K if x is a square of a field element.
std::optional<FieldElement> field_sqrt(const FieldElement& x);
inline bool field_is_square(const FieldElement& x) { return field_sqrt(x).has_value(); }

struct SquarefreeDelta {
    FieldElement canonical;   // squarefree representative of the class of the input
    FieldElement ratio_sqrt;  // z with input = canonical * z^2
};

/// Canonical squarefree representative of delta modulo (K^x)^2. The result is
/// in O_K, divisible by no square of a non-unit, and depends only on the
/// square class: it is the class member minimizing (norm asc, |trace| desc,
/// trace desc, im desc). Nonzero input required; non-integral input is allowed
/// (the class is what matters).
SquarefreeDelta squarefree_delta_witness(const FieldElement& delta);
FieldElement squarefree_delta(const FieldElement& delta);

}  // namespace picard
