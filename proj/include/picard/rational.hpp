#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace picard {

using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// least nonnegative residue, independent of the sign of a
inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }
inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact rational with gcd(num,den)=1 and den>0, backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    Rational abs() const { return sign() < 0 ? Rational(-*this) : *this; }

    Rational operator-() const { return Rational(mpq_class(-v_), wrap_tag{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), wrap_tag{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), wrap_tag{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), wrap_tag{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_), wrap_tag{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    double to_double() const { return v_.get_d(); }

    // "num/den", always with the denominator
    std::string str() const { return num().get_str() + "/" + den().get_str(); }

private:
    struct wrap_tag {};
    Rational(const mpq_class& q, wrap_tag) : v_(q) {}
    mpq_class v_;
};

/// Exact square root of a nonnegative rational square; nullopt otherwise.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    Int n = x.num(), d = x.den();
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    return Rational(isqrt(n), isqrt(d));
}

inline bool rational_is_square(const Rational& x) { return rational_sqrt(x).has_value(); }

}  // namespace picard
