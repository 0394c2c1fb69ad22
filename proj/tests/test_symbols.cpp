#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "picard/symbols.hpp"

using namespace picard;

namespace {

std::mt19937_64 rng(611953);

Int random_nonzero(int span) {
    std::uniform_int_distribution<int> v(-span, span);
    int x = 0;
    while (x == 0) x = v(rng);
    return Int(x);
}

// oracle: quadratic residues by direct enumeration
int legendre_brute(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long x = 1; x < p; x++)
        if ((x * x) % p == r) return 1;
    return -1;
}

}  // namespace

TEST_CASE("legendre examples and brute-force oracle") {
    CHECK(legendre(Int(4), Int(7)) == 1);
    CHECK(legendre(Int(3), Int(7)) == -1);
    CHECK(legendre(Int(7), Int(7)) == 0);
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        for (long a = -30; a <= 30; a++) {
            CHECK(legendre(Int(a), Int(p)) == legendre_brute(a, p));
        }
    }
    CHECK_THROWS_AS(legendre(Int(3), Int(4)), std::invalid_argument);
    CHECK_THROWS_AS(legendre(Int(3), Int(2)), std::invalid_argument);
}

TEST_CASE("jacobi examples") {
    for (long n : {1L, 3L, 9L, 15L, 21L, 45L}) CHECK(jacobi(Int(1), Int(n)) == 1);
    CHECK(jacobi(Int(2), Int(15)) == 1);
    CHECK(jacobi(Int(5), Int(21)) == 1);
    CHECK(jacobi(Int(2), Int(9)) == 1);
    CHECK_THROWS_AS(jacobi(Int(2), Int(10)), std::invalid_argument);
}

TEST_CASE("jacobi equals legendre product") {
    // (a / n) = prod of (a / p) over prime factors with multiplicity
    for (int i = 0; i < 400; i++) {
        std::uniform_int_distribution<long> nv(1, 2000);
        Int n = 2 * nv(rng) + 1;
        Int a = random_nonzero(2000);
        int expect = 1;
        for (const auto& [p, e] : factorize(n).factors) {
            for (unsigned k = 0; k < e; k++) expect *= legendre(a, p);
        }
        CHECK(jacobi(a, n) == expect);
    }
    // and agreement with legendre on odd primes up to 1000
    for (long p = 3; p <= 1000; p += 2) {
        if (!is_prime(Int(p))) continue;
        for (long a = -1000; a <= 1000; a += 13) {
            CHECK(jacobi(Int(a), Int(p)) == legendre(Int(a), Int(p)));
        }
    }
    CHECK(jacobi(Int(2), Int(15)) == jacobi(Int(2), Int(3)) * jacobi(Int(2), Int(5)));
}

TEST_CASE("jacobi (2/n) closed form") {
    for (long n = 1; n < 200; n += 2) {
        int expect = ((n * n - 1) / 8) % 2 == 0 ? 1 : -1;
        CHECK(jacobi(Int(2), Int(n)) == expect);
    }
}

TEST_CASE("jacobi reciprocity") {
    for (long m = 1; m < 120; m += 2) {
        for (long n = 1; n < 120; n += 2) {
            if (std::gcd(m, n) != 1) continue;
            int twist = (((m - 1) / 2) * ((n - 1) / 2)) % 2 == 0 ? 1 : -1;
            CHECK(jacobi(Int(m), Int(n)) * jacobi(Int(n), Int(m)) == twist);
        }
    }
}

TEST_CASE("hilbert symbol examples") {
    CHECK(hilbert_symbol(Int(1), Int(7), Int(3)) == 1);
    CHECK(hilbert_symbol(Int(1), Int(-11), Int(2)) == 1);
    CHECK(hilbert_symbol(Int(2), Int(3), Int(2)) == -1);
    CHECK(hilbert_symbol(Int(3), Int(5), Int(5)) == -1);
    CHECK(hilbert_symbol_real(Int(-1), Int(-1)) == -1);
    CHECK(hilbert_symbol_real(Int(1), Int(-5)) == 1);
    CHECK(hilbert_symbol_real(Int(-3), Int(-7)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(Int(0), Int(3), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_symbol(Int(1), Int(3), Int(6)), std::invalid_argument);
}

TEST_CASE("hilbert symbol properties") {
    std::uniform_int_distribution<int> sv(1, 30);
    for (int i = 0; i < 500; i++) {
        Int a = random_nonzero(300), b = random_nonzero(300), c = random_nonzero(300);
        std::set<Int> ps{Int(2)};
        for (const auto& [p, e] : factorize(Int(a * b * c)).factors) ps.insert(p);
        Int s = sv(rng);
        for (const Int& p : ps) {
            // bimultiplicativity
            CHECK(hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p));
            // symmetry and square invariance
            CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
            CHECK(hilbert_symbol(a * s * s, b, p) == hilbert_symbol(a, b, p));
            // norm relations
            CHECK(hilbert_symbol(a, Int(-a), p) == 1);
            if (a != 1) CHECK(hilbert_symbol(a, Int(1 - a), p) == 1);
        }
    }
}

TEST_CASE("hilbert product formula") {
    for (int i = 0; i < 1000; i++) {
        Int a = random_nonzero(500), b = random_nonzero(500);
        int prod = hilbert_symbol_real(a, b);
        std::set<Int> ps{Int(2)};
        for (const auto& [p, e] : factorize(Int(a * b)).factors) ps.insert(p);
        for (const Int& p : ps) prod *= hilbert_symbol(a, b, p);
        CHECK(prod == 1);
    }
}

TEST_CASE("ramification sets") {
    auto split = ramification_set(QuaternionAlgebraQ(Int(1), Int(1)));
    CHECK(split.finite_places.empty());
    CHECK_FALSE(split.infinite_place);

    auto r25 = ramification_set(QuaternionAlgebraQ(Int(2), Int(5)));
    CHECK(r25.finite_places == std::vector<Int>{Int(2), Int(5)});
    CHECK_FALSE(r25.infinite_place);

    auto rm = ramification_set(QuaternionAlgebraQ(Int(-1), Int(-1)));
    CHECK(rm.finite_places == std::vector<Int>{Int(2)});
    CHECK(rm.infinite_place);

    for (int i = 0; i < 300; i++) {
        Int a = random_nonzero(400), b = random_nonzero(400);
        CHECK(ramification_set_raw(a, b).cardinality() % 2 == 0);
    }
}

TEST_CASE("ramification emptiness against a rational-point oracle") {
    // a x^2 + b y^2 = z^2 has a nontrivial rational point exactly when the
    // algebra (a,b) splits at every place; solutions, when they exist, fit
    // in the box |x| <= sqrt|b|, |y| <= sqrt|a|, |z| <= sqrt|ab|
    auto solvable = [](long a, long b) {
        long xm = (long)std::sqrt(std::abs((double)b)) + 1;
        long ym = (long)std::sqrt(std::abs((double)a)) + 1;
        long zm = (long)std::sqrt(std::abs((double)(a * b))) + 1;
        for (long x = 0; x <= xm; x++)
            for (long y = 0; y <= ym; y++)
                for (long z = 0; z <= zm; z++) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (a * x * x + b * y * y == z * z) return true;
                }
        return false;
    };
    int checked = 0;
    for (long a = -25; a <= 25; a++) {
        for (long b = -25; b <= 25; b++) {
            if (a == 0 || b == 0) continue;
            if (squarefree_part(Int(a)) != a || squarefree_part(Int(b)) != b) continue;
            if (gcd(Int(a), Int(b)) != 1) continue;  // box bound needs coprime entries
            RamificationSet ram = ramification_set_raw(Int(a), Int(b));
            bool split_everywhere = ram.finite_places.empty() && !ram.infinite_place;
            CHECK(split_everywhere == solvable(a, b));
            checked++;
        }
    }
    CHECK(checked > 700);
}

TEST_CASE("prime splitting") {
    CHECK(prime_splitting(Int(2), Int(5)) == PrimeSplitting::Inert);
    CHECK(prime_splitting(Int(5), Int(5)) == PrimeSplitting::Ramified);
    CHECK(prime_splitting(Int(11), Int(5)) == PrimeSplitting::Split);
    CHECK(prime_splitting(Int(2), Int(2)) == PrimeSplitting::Ramified);
    CHECK(prime_splitting(Int(2), Int(3)) == PrimeSplitting::Ramified);
    CHECK(prime_splitting(Int(2), Int(17)) == PrimeSplitting::Split);
    CHECK(prime_splitting(Int(3), Int(2)) == PrimeSplitting::Inert);
    CHECK_THROWS_AS(prime_splitting(Int(3), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(prime_splitting(Int(3), Int(12)), std::invalid_argument);
    CHECK_THROWS_AS(prime_splitting(Int(4), Int(5)), std::invalid_argument);
}

TEST_CASE("algebra isomorphism") {
    CHECK(algebras_isomorphic(QuaternionAlgebraQ(Int(1), Int(1)), QuaternionAlgebraQ(Int(4), Int(9))));
    CHECK(algebras_isomorphic(QuaternionAlgebraQ(Int(2), Int(5)), QuaternionAlgebraQ(Int(5), Int(2))));
    CHECK_FALSE(algebras_isomorphic(QuaternionAlgebraQ(Int(2), Int(5)), QuaternionAlgebraQ(Int(1), Int(1))));
    // normalization strips squares
    QuaternionAlgebraQ q(Int(8), Int(45));
    CHECK(q.a == 2);
    CHECK(q.b == 5);
}
