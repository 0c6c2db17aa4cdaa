#pragma once

#include <vector>

#include "g2p/common.hpp"
#include "g2p/rng.hpp"

namespace g2p {

class Fq;

// Element of F_{p^d}: coefficient vector of length d over F_p, canonical
// representatives in [0, p). Arithmetic is exact; elements are immutable
// values and safe to share across threads.
struct FqElem {
    const Fq* F = nullptr;
    std::vector<u64> c;

    bool is_zero() const;
    bool operator==(const FqElem& o) const { return F == o.F && c == o.c; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inv() const;
    FqElem pow(const BigInt& e) const;
    FqElem pow(u64 e) const;
};

// F_{p^d} as a tower directly over the prime field F_p, defined by the
// lexicographically first monic irreducible polynomial of degree d.
// Instances are canonical: Fq::get(p, d) always returns the same object,
// so field identity is pointer identity.
class Fq {
  public:
    static const Fq& get(u64 p, unsigned d);

    u64 p() const { return p_; }
    unsigned degree() const { return d_; }
    const std::vector<u64>& modulus() const { return modulus_; }  // c0..cd, monic
    const BigInt& size() const { return size_; }                  // p^d
    bool size_fits_u64() const { return size_fits_; }
    u64 size_u64() const;

    FqElem zero() const;
    FqElem one() const;
    FqElem from_base(u64 a) const;                 // image of a in F_p under F_p -> F_{p^d}
    FqElem from_coeffs(std::vector<u64> c) const;  // coefficients reduced mod p
    FqElem from_index(u64 n) const;                // n written base p, c[0] least significant
    u64 index_of(const FqElem& x) const;           // inverse of from_index (needs p^d in u64)
    FqElem random(Rng& rng) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem inv(const FqElem& a) const;
    FqElem pow(const FqElem& a, const BigInt& e) const;
    FqElem pow(const FqElem& a, u64 e) const;

    // x^(p^e), computed by e-fold p-th powering.
    FqElem frobenius(const FqElem& x, unsigned e) const;

    // Relative trace onto the subfield of degree subdeg (subdeg | d);
    // surjective and F_{p^subdeg}-linear, so it samples the subfield uniformly.
    FqElem subfield_trace(const FqElem& x, unsigned subdeg) const;
    bool in_subfield(const FqElem& x, unsigned subdeg) const;

    // Quadratic character / square roots in the full field (p odd).
    bool is_square(const FqElem& x) const;
    FqElem sqrt(const FqElem& x) const;  // errors if x is not a square

    // Lexicographically least generator of the multiplicative group.
    FqElem generator() const;
    // Canonical primitive ell-th root of unity (requires ell | p^d - 1).
    FqElem primitive_root_of_unity(u64 ell) const;

    // The unique e in [0, ell) with zeta^e = z, by exhaustive scan; errors if
    // z is outside <zeta>. zeta must have exact order ell.
    static u64 dlog_in_mu(const FqElem& z, const FqElem& zeta, u64 ell);

  private:
    Fq(u64 p, unsigned d);

    u64 p_;
    unsigned d_;
    std::vector<u64> modulus_;
    std::vector<std::vector<u64>> red_;  // X^(d+i) mod modulus, i = 0..d-2
    BigInt size_;
    bool size_fits_ = false;

    mutable std::vector<u64> gen_coeffs_;  // lazily found generator (guarded by once flag)
    void ensure_generator() const;
};

// Lexicographically first monic irreducible polynomial of degree d over F_p,
// returned as its coefficient vector c0..cd (cd = 1). Deterministic.
std::vector<u64> find_irreducible(u64 p, unsigned d);

}  // namespace g2p
