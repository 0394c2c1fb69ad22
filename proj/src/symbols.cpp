#include "picard/symbols.hpp"

#include <algorithm>
#include <set>

namespace picard {

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    Int r = mod_pos(a, p);
    if (r == 0) return 0;
    Int e = (p - 1) / 2, m;
    mpz_powm(m.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (m == 1) return 1;
    if (m == p - 1) return -1;
    throw std::logic_error("legendre: Euler criterion failed (p not prime?)");
}

int jacobi(const Int& a_in, const Int& n_in) {
    if (n_in < 1 || is_even(n_in)) throw std::invalid_argument("jacobi: n must be odd and positive");
    Int a = mod_pos(a_in, n_in), n = n_in;
    int result = 1;
    while (a != 0) {
        while (is_even(a)) {
            a /= 2;
            Int r = mod_pos(n, Int(8));
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (mod_pos(a, Int(4)) == 3 && mod_pos(n, Int(4)) == 3) result = -result;
        a = mod_pos(a, n);
    }
    return n == 1 ? result : 0;
}

namespace {

// v_p(n) and the unit part
std::pair<unsigned long, Int> split_valuation(const Int& n, const Int& p) {
    Int u = n;
    unsigned long v = 0;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
        u /= p;
        v++;
    }
    return {v, u};
}

int hilbert2(const Int& a, const Int& b) {
    auto [alpha, u] = split_valuation(a, Int(2));
    auto [beta, v] = split_valuation(b, Int(2));
    // exponent (u-1)/2 (v-1)/2 + alpha (v^2-1)/8 + beta (u^2-1)/8, mod 2
    Int e = ((u - 1) / 2) * ((v - 1) / 2) + Int(alpha % 2) * ((v * v - 1) / 8) +
            Int(beta % 2) * ((u * u - 1) / 8);
    return is_odd(e) ? -1 : 1;
}

int hilbert_odd(const Int& a, const Int& b, const Int& p) {
    auto [alpha, u] = split_valuation(a, p);
    auto [beta, v] = split_valuation(b, p);
    int al = alpha % 2, be = beta % 2;
    // reduced to the two closed-form cases via bimultiplicativity, symmetry
    // and (p,p)_p = (p,-1)_p
    if (al == 0 && be == 0) return 1;
    if (al == 0 && be == 1) return legendre(u, p);
    if (al == 1 && be == 0) return legendre(v, p);
    return legendre(Int(-u * v), p);
}

}  // namespace

int hilbert_symbol(const Int& a, const Int& b, const Int& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (!is_prime(p)) throw std::invalid_argument("hilbert_symbol: p must be prime");
    return p == 2 ? hilbert2(a, b) : hilbert_odd(a, b, p);
}

int hilbert_symbol_real(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol_real: zero argument");
    return (a < 0 && b < 0) ? -1 : 1;
}

RamificationSet ramification_set_raw(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("ramification_set: zero entry");
    std::set<Int> primes{Int(2)};
    for (const auto& [p, e] : factorize(a).factors) primes.insert(p);
    for (const auto& [p, e] : factorize(b).factors) primes.insert(p);
    RamificationSet ram;
    int product = hilbert_symbol_real(a, b);
    ram.infinite_place = (product == -1);
    for (const Int& p : primes) {
        int s = hilbert_symbol(a, b, p);
        product *= s;
        if (s == -1) ram.finite_places.push_back(p);
    }
    if (product != 1)
        throw std::logic_error("ramification_set: Hilbert product formula violated");
    return ram;
}

RamificationSet ramification_set(const QuaternionAlgebraQ& alg) {
    return ramification_set_raw(alg.a, alg.b);
}

RamificationSet ramification_set_pair(const Rational& a, const Rational& b) {
    // scaling by den^2 keeps every symbol
    return ramification_set_raw(Int(a.num() * a.den()), Int(b.num() * b.den()));
}

PrimeSplitting prime_splitting(const Int& p, const Int& d) {
    if (d <= 1) throw std::invalid_argument("prime_splitting: d must exceed 1");
    for (const auto& [q, e] : factorize(d).factors)
        if (e > 1) throw std::invalid_argument("prime_splitting: d must be squarefree");
    if (!is_prime(p)) throw std::invalid_argument("prime_splitting: p must be prime");
    if (p == 2) {
        Int r4 = mod_pos(d, Int(4));
        if (r4 == 2 || r4 == 3) return PrimeSplitting::Ramified;
        Int r8 = mod_pos(d, Int(8));
        if (r8 == 1) return PrimeSplitting::Split;
        if (r8 == 5) return PrimeSplitting::Inert;
        throw std::logic_error("prime_splitting: unreachable residue");
    }
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) return PrimeSplitting::Ramified;
    return legendre(d, p) == 1 ? PrimeSplitting::Split : PrimeSplitting::Inert;
}

bool algebras_isomorphic(const QuaternionAlgebraQ& a, const QuaternionAlgebraQ& b) {
    return ramification_set(a) == ramification_set(b);
}

}  // namespace picard
