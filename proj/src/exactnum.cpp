#include "picard/exactnum.hpp"

#include <algorithm>

namespace picard {

FieldDescriptor FieldDescriptor::make(long d) {
    if (d < 1) throw std::invalid_argument("FieldDescriptor: d must be positive");
    for (const auto& [p, e] : factorize(Int(d)).factors)
        if (e > 1) throw std::invalid_argument("FieldDescriptor: d must be squarefree");
    FieldDescriptor f;
    f.d = d;
    if (d % 4 == 3) {
        f.discriminant = Int(-d);
        f.half_integer_ring = true;
    } else {
        f.discriminant = Int(-4) * d;
        f.half_integer_ring = false;
    }
    return f;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
    Rational n = norm();
    return {d_, re_ / n, (-im_) / n};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_field(o);
    return *this * o.inverse();
}

bool FieldElement::is_integer() const {
    auto [x, y] = integral_coords();
    return x.is_integer() && y.is_integer();
}

std::pair<Rational, Rational> FieldElement::integral_coords() const {
    if (d_ % 4 == 3) {
        // z = x + y*(1+i sqrt d)/2  <=>  y = 2 im, x = re - im
        return {re_ - im_, im_ + im_};
    }
    return {re_, im_};
}

std::string FieldElement::str() const {
    if (im_.is_zero()) return re_.str();
    std::string tail = im_.abs().str() + "*sqrt(-" + std::to_string(d_) + ")";
    if (re_.is_zero() && im_.sign() > 0) return tail;
    if (re_.is_zero()) return "-" + tail;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + tail;
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e; i++) v *= p;
    }
    return v;
}

namespace {

// trial division with a 2,3 wheel; n must fit in 64 bits
void factorize_u64(unsigned long long m, Factorization& out) {
    auto push = [&](unsigned long long p, unsigned e) { out.factors.emplace_back(Int(static_cast<unsigned long>(p)), e); };
    unsigned e = 0;
    while (m % 2 == 0) { m /= 2; e++; }
    if (e) push(2, e);
    e = 0;
    while (m % 3 == 0) { m /= 3; e++; }
    if (e) push(3, e);
    for (unsigned long long p = 5; m > 1 && p <= m / p; p += 6) {
        for (unsigned long long q : {p, p + 2}) {
            e = 0;
            while (m % q == 0) { m /= q; e++; }
            if (e) push(q, e);
        }
    }
    if (m > 1) push(m, 1);
}

}  // namespace

Factorization factorize(const Int& n_in) {
    if (n_in == 0) throw std::domain_error("factorize: zero input");
    Factorization f;
    f.sign = n_in < 0 ? -1 : 1;
    Int n = abs(n_in);
    if (n == 1) return f;
    if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8) {
        factorize_u64(n.get_ui(), f);
        return f;
    }
    // slow path: strip divisors below 2^32, then the cofactor is prime if it
    // fits 64 bits (a composite cofactor would need a factor below 2^32)
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            e++;
        }
        if (e) f.factors.emplace_back(Int(p), e);
    };
    strip(2);
    strip(3);
    const unsigned long bound = 0xFFFFFFFFUL;
    for (unsigned long p = 5; p <= bound; p += 6) {
        if (Int(p) * p > n) break;
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
            f.factors.emplace_back(n, 1);
        } else {
            throw std::domain_error("factorize: input beyond supported range");
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (!mpz_fits_ulong_p(n.get_mpz_t()))
        throw std::domain_error("is_prime: input beyond supported range");
    unsigned long long m = n.get_ui();
    if (m % 2 == 0) return m == 2;
    if (m % 3 == 0) return m == 3;
    for (unsigned long long p = 5; p <= m / p; p += 6) {
        if (m % p == 0 || m % (p + 2) == 0) return false;
    }
    return true;
}

Int squarefree_part(const Int& n) {
    Factorization f = factorize(n);
    Int r = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) r *= p;
    return r;
}

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
    const long d = x.d();
    if (x.is_zero()) return FieldElement(d, 0, 0);
    if (x.im().is_zero()) {
        const Rational& u = x.re();
        if (u.sign() > 0) {
            if (auto a = rational_sqrt(u)) return FieldElement(d, *a, 0);
            return std::nullopt;
        }
        // u < 0: u = (b i sqrt d)^2 = -d b^2
        if (auto b = rational_sqrt((-u) / Rational(d))) return FieldElement(d, 0, *b);
        return std::nullopt;
    }
    // z = a + b i sqrt d with a^2 - d b^2 = re, 2ab = im:
    // a^2 = (re + sqrt(norm))/2 with norm a rational square
    auto s = rational_sqrt(x.norm());
    if (!s) return std::nullopt;
    auto a = rational_sqrt((x.re() + *s) / Rational(2));
    if (!a || a->is_zero()) return std::nullopt;
    Rational b = x.im() / (Rational(2) * *a);
    FieldElement z(d, *a, b);
    if (z * z != x) return std::nullopt;
    return z;
}

namespace {

// elements of O_K with the given norm (finite lattice search)
std::vector<FieldElement> elements_of_norm(long d, const Int& n) {
    std::vector<FieldElement> out;
    if (n <= 0) return out;
    const bool half = (d % 4 == 3);
    if (!half) {
        Int amax = isqrt(n);
        for (Int a = -amax; a <= amax; ++a) {
            Int rem = n - a * a;
            if (mod_pos(rem, Int(d)) != 0) continue;
            Int b2 = rem / d;
            if (!is_perfect_square(b2)) continue;
            Int b = isqrt(b2);
            out.emplace_back(d, Rational(a), Rational(b));
            if (b != 0) out.emplace_back(d, Rational(a), Rational(Int(-b)));
        }
    } else {
        // z = (p + q i sqrt d)/2, p = q mod 2, norm = (p^2 + d q^2)/4
        Int pmax = isqrt(4 * n);
        for (Int p = -pmax; p <= pmax; ++p) {
            Int rem = 4 * n - p * p;
            if (rem < 0 || mod_pos(rem, Int(d)) != 0) continue;
            Int q2 = rem / d;
            if (!is_perfect_square(q2)) continue;
            Int q = isqrt(q2);
            if (is_odd(p) != is_odd(q)) continue;
            out.emplace_back(d, Rational(p, 2), Rational(q, 2));
            if (q != 0) out.emplace_back(d, Rational(p, 2), Rational(Int(-q), Int(2)));
        }
    }
    return out;
}

// canonical order on class representatives: smaller norm wins, then larger
// |trace|, then positive trace, then positive imaginary part
bool canonically_better(const FieldElement& a, const FieldElement& b) {
    Rational na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    Rational ta = a.trace().abs(), tb = b.trace().abs();
    if (ta != tb) return ta > tb;
    if (a.trace() != b.trace()) return a.trace() > b.trace();
    return a.im() > b.im();
}

}  // namespace

SquarefreeDelta squarefree_delta_witness(const FieldElement& delta) {
    if (delta.is_zero()) throw std::domain_error("squarefree_delta: zero input");
    const long d = delta.d();

    // integral representative of the class: multiply by (lcm of denominators)^2
    auto [c0, c1] = delta.integral_coords();
    Int m = lcm(c0.den(), c1.den());
    FieldElement work = delta * Rational(Int(m * m));
    FieldElement t(d, Rational(m), 0);  // work = delta * t^2

    // strip square divisors: rational primes first, then norm-p elements
    bool progress = true;
    while (progress) {
        progress = false;
        Int n = work.norm().num();
        for (const auto& [p, e] : factorize(n).factors) {
            if (e < 2) continue;
            FieldElement psq = FieldElement::integer(d, p * p);
            if ((work / psq).is_integer()) {
                work = work / psq;
                t = t / FieldElement::integer(d, p);
                progress = true;
                break;
            }
            bool stripped = false;
            for (const FieldElement& x : elements_of_norm(d, p)) {
                if (!x.is_integer()) continue;
                FieldElement q = work / (x * x);
                if (q.is_integer()) {
                    work = q;
                    t = t / x;
                    progress = true;
                    stripped = true;
                    break;
                }
            }
            if (stripped) break;
        }
    }

    // canonical representative: the norm of any equivalent y satisfies
    // N(work)*N(y) = square, so N(y) runs over sf*k^2 with sf the squarefree
    // part of N(work); the first norm with a hit is the minimum
    const Int bound = work.norm().num();
    const Int sf = squarefree_part(bound);
    FieldElement best = work;
    FieldElement best_z(d, 1, 0);  // work = best * best_z^2
    for (Int k = 1; sf * k * k <= bound; ++k) {
        Int n = sf * k * k;
        bool found = false;
        for (const FieldElement& y : elements_of_norm(d, n)) {
            auto z = field_sqrt(work / y);
            if (!z) continue;
            if (!found || canonically_better(y, best)) {
                best = y;
                best_z = *z;
            }
            found = true;
        }
        if (found) break;
    }
    // delta = work / t^2 = best * (best_z / t)^2
    return {best, best_z / t};
}

FieldElement squarefree_delta(const FieldElement& delta) {
    return squarefree_delta_witness(delta).canonical;
}

}  // namespace picard
