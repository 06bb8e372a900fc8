#pragma once

// Primes, quadratic residues and the two-squares decomposition.

#include <cstdint>
#include <vector>

#include "dncheck/modp.hpp"

namespace dncheck {

/// Primes in [lo, hi], ascending. Segmented sieve of Eratosthenes; hi < 2^31.
std::vector<u64> sieve_primes(u64 lo, u64 hi);

/// Legendre symbol (a | q) for an odd prime q, by Euler's criterion.
int legendre(i64 a, u64 q);

/// Tonelli-Shanks. Returns the smaller of the two roots; 0 when q | a.
/// Throws NonResidue when a is a non-residue.
u64 sqrt_mod(i64 a, u64 q);

/// p = x^2 + y^2 normalized so that x = 1 (mod 4) (which fixes the sign of x)
/// and y is even and positive.
struct TwoSquares {
    u64 p;
    i64 x;
    i64 y;

    bool operator==(const TwoSquares&) const = default;
};

/// Hermite-Serret descent from sqrt(-1) mod p. Throws WrongResidueClass
/// unless p = 1 (mod 4), NotPrime for composite p.
TwoSquares two_squares(u64 p);

}  // namespace dncheck
