#pragma once

#include <map>
#include <vector>

#include "g2p/common.hpp"

namespace g2p {

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 base, u64 exp, u64 m);
u64 powmod(u64 base, const BigInt& exp, u64 m);

// Inverse mod m for gcd(a, m) = 1 (extended Euclid).
u64 invmod(u64 a, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Prime factorization by trial division + Pollard rho.
std::map<u64, unsigned> factor_u64(u64 n);

// Least k >= 1 with a^k = 1 mod m; errors unless gcd(a, m) = 1.
unsigned mult_order(u64 a, u64 m);

// Euler-criterion quadratic-residue symbol of d modulo an odd prime ell.
int legendre_symbol(const BigInt& d, u64 ell);

// v_l(n): exponent of l in n (n != 0).
unsigned valuation(const BigInt& n, u64 l);

bool is_perfect_square(const BigInt& n);
bool is_perfect_square(const BigInt& n, BigInt& root);

// n mod l as a canonical residue in [0, l).
u64 mod_residue(const BigInt& n, u64 l);

}  // namespace g2p
