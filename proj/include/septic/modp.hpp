#pragma once

// Dense polynomials over F_p for word-size primes p < 2^31. Internal
// machinery for factorization and Frobenius cycle-type sampling.

#include "septic/intpoly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace septic::modp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t reduce(const BigInt& c, std::uint64_t p);
Poly reduce(const IntPoly& f, std::uint64_t p);

int degree(const Poly& a);
void trim(Poly& a);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// s, t with s*a + t*b = gcd(a, b) (monic)
struct Bezout {
  Poly g, s, t;
};
Bezout extendedGcd(const Poly& a, const Poly& b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powMod(const Poly& base, const BigInt& e, const Poly& modulus, std::uint64_t p);

bool isSquarefree(const Poly& f, std::uint64_t p);

/// Degrees of the irreducible factors of a squarefree f (any leading
/// coefficient), from distinct-degree factorization alone. Sorted.
std::vector<int> factorDegrees(const Poly& f, std::uint64_t p);

/// Monic irreducible factors of a squarefree f, p odd. Deterministic for a
/// given generator state.
std::vector<Poly> factorSquarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace septic::modp
