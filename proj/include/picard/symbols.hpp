#pragma once

#include <vector>

#include "picard/exactnum.hpp"

namespace picard {

/// Legendre symbol (a/p) by Euler's criterion; p must be an odd prime.
int legendre(const Int& a, const Int& p);

/// Jacobi symbol (a/n) for odd n >= 1, by quadratic reciprocity.
int jacobi(const Int& a, const Int& n);

/// p-Hilbert symbol (a,b)_p for a prime p and nonzero a, b.
int hilbert_symbol(const Int& a, const Int& b, const Int& p);

/// Hilbert symbol at the real place: -1 iff both arguments are negative.
int hilbert_symbol_real(const Int& a, const Int& b);

/// Quaternion algebra (a,b / Q) in Hilbert-symbol presentation, stored with
/// a and b squarefree (square factors do not change the isomorphism class).
struct QuaternionAlgebraQ {
    Int a, b;

    QuaternionAlgebraQ(const Int& a_in, const Int& b_in) {
        if (a_in == 0 || b_in == 0)
            throw std::invalid_argument("QuaternionAlgebraQ: zero entry");
        a = squarefree_part(a_in);
        b = squarefree_part(b_in);
    }
};

struct RamificationSet {
    std::vector<Int> finite_places;  // sorted, distinct positive primes
    bool infinite_place = false;

    size_t cardinality() const { return finite_places.size() + (infinite_place ? 1 : 0); }
    bool operator==(const RamificationSet& o) const {
        return finite_places == o.finite_places && infinite_place == o.infinite_place;
    }
    bool operator!=(const RamificationSet& o) const { return !(*this == o); }
};

/// Places where (a,b / Q) is division. Evaluates every prime dividing 2ab
/// plus the real place and checks the product formula before returning.
RamificationSet ramification_set(const QuaternionAlgebraQ& alg);

/// Same computation on a raw, un-normalized Hilbert pair.
RamificationSet ramification_set_raw(const Int& a, const Int& b);
RamificationSet ramification_set_pair(const Rational& a, const Rational& b);

enum class PrimeSplitting { Ramified, Split, Inert };

/// Behavior of p in the real quadratic field Q(sqrt d), d squarefree > 1.
PrimeSplitting prime_splitting(const Int& p, const Int& d);

bool algebras_isomorphic(const QuaternionAlgebraQ& a, const QuaternionAlgebraQ& b);

}  // namespace picard
