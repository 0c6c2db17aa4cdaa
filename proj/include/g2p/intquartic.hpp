#pragma once

#include <array>
#include <complex>

#include "g2p/poly.hpp"

namespace g2p {

// Monic integer quartic X^4 + a3 X^3 + a2 X^2 + a1 X + a0, the shape of every
// Frobenius characteristic polynomial handled here (a0 = q^2 in that case).
class IntQuartic {
  public:
    IntQuartic() = default;
    IntQuartic(BigInt a3, BigInt a2, BigInt a1, BigInt a0)
        : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3), 1} {}

    // Weil shape: X^4 - s1 X^3 + s2 X^2 - s1 q X + q^2.
    static IntQuartic weil(const BigInt& s1, const BigInt& s2, const BigInt& q) {
        return IntQuartic(-s1, s2, -s1 * q, q * q);
    }

    const BigInt& coeff(unsigned i) const { return c_[i]; }  // X^i, i <= 4
    BigInt eval(const BigInt& x) const;
    Poly mod_ell(u64 ell) const;  // image in F_ell[X]
    bool operator==(const IntQuartic& o) const { return c_ == o.c_; }

    BigInt discriminant() const;
    // Irreducibility over Q for a monic integer quartic: rational-root test
    // plus exhaustive monic quadratic-factor search over divisors of c0.
    bool irreducible_over_q() const;

    // Integer 4x4 companion matrix powers: det(C^d - I), which for a Weil
    // polynomial equals the Jacobian order over the degree-d extension.
    BigInt companion_det_pow_minus_identity(unsigned d) const;

    // Numeric roots (Durand-Kerner).
    std::array<std::complex<double>, 4> numeric_roots() const;

  private:
    std::array<BigInt, 5> c_{};
};

}  // namespace g2p
